#include "bqk/biquasile.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bqk/modalg.hpp"
#include "bqk/parallel.hpp"

namespace bqk {

namespace {

bool tables_well_formed(const Table& t, std::size_t n, std::string& why) {
    if (t.size() != n) {
        why = "table has " + std::to_string(t.size()) + " rows, expected " + std::to_string(n);
        return false;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (t[i].size() != n) {
            why = "row " + std::to_string(i + 1) + " has wrong length";
            return false;
        }
        for (int v : t[i])
            if (v < 1 || v > static_cast<int>(n)) {
                why = "entry " + std::to_string(v) + " out of range in row " + std::to_string(i + 1);
                return false;
            }
    }
    return true;
}

bool is_latin(const Table& t, std::string& why, const char* name) {
    const std::size_t n = t.size();
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<char> row(n, 0), col(n, 0);
        for (std::size_t j = 0; j < n; ++j) {
            if (row[t[i][j] - 1]++) {
                why = std::string(name) + " row " + std::to_string(i + 1) + " repeats " + std::to_string(t[i][j]);
                return false;
            }
            if (col[t[j][i] - 1]++) {
                why = std::string(name) + " column " + std::to_string(i + 1) + " repeats " + std::to_string(t[j][i]);
                return false;
            }
        }
    }
    return true;
}

// first failing axiom over (a,b,x,y) in lexicographic order; 0-indexed
AxiomVerdict exchange_axioms(const Biquasile& B) {
    const int n = B.order();
    auto S = [&](int u, int v) { return B.star(u, v); };
    auto D = [&](int u, int v) { return B.dot(u, v); };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    int ab = D(a, b), xy = D(x, y);
                    int axy = S(a, xy);
                    int lhs1 = S(a, D(x, S(y, ab)));
                    int rhs1 = S(axy, D(x, S(y, D(axy, b))));
                    if (lhs1 != rhs1) return {AxiomVerdict::axiom_i, {a + 1, b + 1, x + 1, y + 1}, "axiom (i) fails"};
                    int lhs2 = S(y, D(axy, b));
                    int rhs2 = S(S(y, ab), D(S(a, D(x, S(y, ab))), b));
                    if (lhs2 != rhs2) return {AxiomVerdict::axiom_ii, {a + 1, b + 1, x + 1, y + 1}, "axiom (ii) fails"};
                }
    return {};
}

}  // namespace

Biquasile Biquasile::from_tables(const Table& star, const Table& dot) {
    std::string why;
    const std::size_t n = star.size();
    if (n == 0) throw std::invalid_argument("empty table");
    if (!tables_well_formed(star, n, why) || !tables_well_formed(dot, n, why)) throw std::invalid_argument(why);
    if (!is_latin(star, why, "star") || !is_latin(dot, why, "dot")) throw std::invalid_argument(why);

    Biquasile B;
    B.n_ = static_cast<int>(n);
    const int N = B.n_;
    B.star_.resize(N * N);
    B.dot_.resize(N * N);
    B.star_l_.resize(N * N);
    B.star_r_.resize(N * N);
    B.dot_l_.resize(N * N);
    B.dot_r_.resize(N * N);
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y) {
            int s = star[x][y] - 1, d = dot[x][y] - 1;
            B.star_[x * N + y] = s;
            B.dot_[x * N + y] = d;
            B.star_l_[x * N + s] = y;
            B.star_r_[s * N + y] = x;
            B.dot_l_[x * N + d] = y;
            B.dot_r_[d * N + y] = x;
        }
    return B;
}

Table Biquasile::to_table(const std::vector<int>& t) const {
    Table out(n_, std::vector<int>(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out[i][j] = t[i * n_ + j] + 1;
    return out;
}

DerivedTables derived_divisions(const Biquasile& B) {
    const int n = B.order();
    DerivedTables T;
    for (auto* t : {&T.star_ldiv, &T.star_rdiv, &T.dot_ldiv, &T.dot_rdiv}) t->assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            T.star_ldiv[i][j] = B.star_ldiv(i, j) + 1;
            T.star_rdiv[i][j] = B.star_rdiv(i, j) + 1;
            T.dot_ldiv[i][j] = B.dot_ldiv(i, j) + 1;
            T.dot_rdiv[i][j] = B.dot_rdiv(i, j) + 1;
        }
    return T;
}

AxiomVerdict check_axioms(const Table& star, const Table& dot) {
    std::string why;
    const std::size_t n = star.size();
    if (n == 0 || !tables_well_formed(star, n, why) || !tables_well_formed(dot, n, why))
        return {AxiomVerdict::malformed, {}, n == 0 ? "empty table" : why};
    if (!is_latin(star, why, "star") || !is_latin(dot, why, "dot")) return {AxiomVerdict::not_latin, {}, why};
    return exchange_axioms(Biquasile::from_tables(star, dot));
}

AxiomVerdict check_axioms(const Biquasile& B) { return exchange_axioms(B); }

void AlexanderParams::validate() const {
    if (modulus < 2) throw std::invalid_argument("Alexander modulus must be >= 2");
    const std::pair<const char*, int64_t> ps[] = {{"d", d}, {"s", s}, {"n", n_param}};
    for (auto [name, v] : ps)
        if (!is_unit(v, modulus))
            throw std::invalid_argument(std::string(name) + "=" + std::to_string(v) + " is not a unit mod " +
                                        std::to_string(modulus));
}

Biquasile alexander(const AlexanderParams& p) {
    p.validate();
    const int64_t m = p.modulus;
    const int n = static_cast<int>(m);
    const int64_t cx = mod(-p.d * p.s % m * p.n_param % m * p.n_param, m);
    Table star(n, std::vector<int>(n)), dot(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int64_t x = residue_of(i, m), y = residue_of(j, m);
            star[i][j] = index_of(cx * x + p.n_param * y, m) + 1;
            dot[i][j] = index_of(p.d * x + p.s * y, m) + 1;
        }
    return Biquasile::from_tables(star, dot);
}

std::vector<AlexanderParams> unit_triples(int64_t modulus) {
    std::vector<int64_t> units;
    for (int64_t u = 1; u < modulus; ++u)
        if (std::gcd(u, modulus) == 1) units.push_back(u);
    std::vector<AlexanderParams> out;
    for (auto d : units)
        for (auto s : units)
            for (auto nn : units) out.push_back({modulus, d, s, nn});
    return out;
}

std::vector<Table> latin_squares(int order) {
    if (order < 1) throw std::invalid_argument("order must be >= 1");
    const int n = order;
    std::vector<Table> out;
    std::vector<int> cell(n * n, 0);
    std::vector<unsigned> rowmask(n, 0), colmask(n, 0);
    auto rec = [&](auto&& self, int k) -> void {
        if (k == n * n) {
            Table t(n, std::vector<int>(n));
            for (int i = 0; i < n * n; ++i) t[i / n][i % n] = cell[i] + 1;
            out.push_back(std::move(t));
            return;
        }
        int r = k / n, c = k % n;
        for (int v = 0; v < n; ++v) {
            unsigned bit = 1u << v;
            if ((rowmask[r] & bit) || (colmask[c] & bit)) continue;
            rowmask[r] |= bit;
            colmask[c] |= bit;
            cell[k] = v;
            self(self, k + 1);
            rowmask[r] &= ~bit;
            colmask[c] &= ~bit;
        }
    };
    rec(rec, 0);
    return out;
}

namespace {

void check_enum_order(int order) {
    if (order < 1 || order > 4) throw std::out_of_range("enumeration supports orders 1..4");
}

}  // namespace

std::vector<Biquasile> enumerate_biquasiles_serial(int order) {
    check_enum_order(order);
    auto L = latin_squares(order);
    std::vector<Biquasile> out;
    for (const auto& s : L)
        for (const auto& d : L) {
            auto B = Biquasile::from_tables(s, d);
            if (check_axioms(B)) out.push_back(std::move(B));
        }
    return out;
}

std::vector<Biquasile> enumerate_biquasiles(int order) {
    check_enum_order(order);
    auto L = latin_squares(order);
    const long k = static_cast<long>(L.size());
    std::vector<std::vector<Biquasile>> per_star(k);
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
    for (long i = 0; i < k; ++i)
        for (const auto& d : L) {
            auto B = Biquasile::from_tables(L[i], d);
            if (check_axioms(B)) per_star[i].push_back(std::move(B));
        }
    std::vector<Biquasile> out;
    for (auto& v : per_star)
        for (auto& b : v) out.push_back(std::move(b));
    return out;
}

std::string render_block_matrix(const Biquasile& B) {
    std::ostringstream os;
    const int n = B.order();
    const int w = static_cast<int>(std::to_string(n).size());
    auto cell = [&](int v) {
        std::string s = std::to_string(v);
        return std::string(w - s.size(), ' ') + s;
    };
    for (int i = 0; i < n; ++i) {
        os << "[";
        for (int j = 0; j < n; ++j) os << ' ' << cell(B.star(i, j) + 1);
        os << " |";
        for (int j = 0; j < n; ++j) os << ' ' << cell(B.dot(i, j) + 1);
        os << " ]\n";
    }
    return os.str();
}

}  // namespace bqk
