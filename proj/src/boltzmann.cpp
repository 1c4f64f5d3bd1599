#include "bqk/boltzmann.hpp"

#include <cctype>
#include <sstream>

namespace bqk {

BoltzmannWeight BoltzmannWeight::zero(int order, int64_t modulus) {
    if (order < 1) throw std::invalid_argument("weight order must be >= 1");
    if (modulus < 2) throw std::invalid_argument("weight modulus must be >= 2");
    BoltzmannWeight W;
    W.order = order;
    W.modulus = modulus;
    W.coeffs.assign(static_cast<std::size_t>(order) * order * order, 0);
    return W;
}

BoltzmannWeight BoltzmannWeight::from_terms(int order, int64_t modulus,
                                            const std::map<std::array<int, 3>, int64_t>& terms) {
    BoltzmannWeight W = zero(order, modulus);
    for (const auto& [k, v] : terms) {
        for (int e : k)
            if (e < 1 || e > order) throw std::invalid_argument("weight key out of range");
        W.at(k[0] - 1, k[1] - 1, k[2] - 1) = mod(v, modulus);
    }
    return W;
}

std::map<std::array<int, 3>, int64_t> BoltzmannWeight::terms() const {
    std::map<std::array<int, 3>, int64_t> out;
    for (int x = 0; x < order; ++x)
        for (int y = 0; y < order; ++y)
            for (int z = 0; z < order; ++z)
                if (int64_t v = (*this)(x, y, z)) out[{x + 1, y + 1, z + 1}] = v;
    return out;
}

WeightVerdict check_weight(const Biquasile& B, const BoltzmannWeight& W) {
    const int n = B.order();
    const int64_t m = W.modulus;
    if (W.order != n || W.coeffs.size() != static_cast<std::size_t>(n) * n * n)
        return {WeightVerdict::incomplete, {}, "weight does not cover X^3 for this biquasile"};
    for (auto v : W.coeffs)
        if (v < 0 || v >= m) return {WeightVerdict::incomplete, {}, "coefficient outside [0, m)"};

    for (int x = 0; x < n; ++x) {
        int t = B.star_ldiv(x, x);
        for (int a = 0; a < n; ++a)
            if (W(x, a, B.dot_ldiv(a, t)) != 0) return {WeightVerdict::axiom_i, {x + 1, a + 1}, "phi(x,a,a\\(x\\*x)) != 0"};
        for (int b = 0; b < n; ++b)
            if (W(x, B.dot_rdiv(t, b), b) != 0) return {WeightVerdict::axiom_i, {x + 1, b + 1}, "phi(x,(x\\*x)/b,b) != 0"};
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    int xab = B.star(x, B.dot(a, b));
                    int bxy = B.star(b, B.dot(x, y));
                    int64_t L = W(x, a, b) + W(b, xab, y) + W(xab, a, B.star(b, B.dot(xab, y)));
                    int64_t R = W(b, x, y) + W(x, a, bxy) + W(bxy, B.star(x, B.dot(a, bxy)), y);
                    if (mod(L - R, m) != 0) return {WeightVerdict::axiom_ii, {x + 1, y + 1, a + 1, b + 1}, "six-term relation fails"};
                }
    return {};
}

ModMatrix weight_constraint_matrix(const Biquasile& B, int64_t m) {
    const int n = B.order();
    const std::size_t n2 = static_cast<std::size_t>(n) * n;
    ModMatrix M(m, 2 * n2 + n2 * n2, n2 * n);
    auto key = [&](int x, int y, int z) { return (static_cast<std::size_t>(x) * n + y) * n + z; };
    std::size_t row = 0;
    for (int x = 0; x < n; ++x)
        for (int a = 0; a < n; ++a) M.at(row++, key(x, a, B.dot_ldiv(a, B.star_ldiv(x, x)))) = 1;
    for (int x = 0; x < n; ++x)
        for (int b = 0; b < n; ++b) M.at(row++, key(x, B.dot_rdiv(B.star_ldiv(x, x), b), b)) = 1;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b, ++row) {
                    auto add = [&](std::size_t k, int64_t v) { M.at(row, k) = mod(M.at(row, k) + v, m); };
                    int xab = B.star(x, B.dot(a, b));
                    int bxy = B.star(b, B.dot(x, y));
                    add(key(x, a, b), 1);
                    add(key(b, xab, y), 1);
                    add(key(xab, a, B.star(b, B.dot(xab, y))), 1);
                    add(key(b, x, y), -1);
                    add(key(x, a, bxy), -1);
                    add(key(bxy, B.star(x, B.dot(a, bxy)), y), -1);
                }
    return M;
}

SolutionSpace solve_weights(const Biquasile& B, int64_t m) { return kernel(weight_constraint_matrix(B, m)); }

bool weight_in_space(const Biquasile& B, const BoltzmannWeight& W) {
    SolutionSpace S = solve_weights(B, W.modulus);
    ModMatrix H = ModMatrix::from_rows(W.modulus, S.generators, W.coeffs.size());
    return in_row_span(H, W.coeffs);
}

BoltzmannWeight linear_weight(const AlexanderParams& p, int64_t gamma) {
    p.validate();
    const int64_t m = p.modulus;
    const int n = static_cast<int>(m);
    gamma = mod(gamma, m);
    const int64_t si = inverse_mod(p.s, m), ni = inverse_mod(p.n_param, m);
    const int64_t cx = mod(-gamma * mod(si * ni + p.d * p.n_param, m), m);
    const int64_t cy = mod(gamma * si % m * p.d, m);
    BoltzmannWeight W = BoltzmannWeight::zero(n, m);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                W.at(x, y, z) = mod(cx * residue_of(x, m) + cy * residue_of(y, m) + gamma * residue_of(z, m), m);
    return W;
}

int64_t coloring_weight(const DualGraphDiagram& G, const BoltzmannWeight& W, const Coloring& f) {
    int64_t w = 0;
    // both signs charge the same corner triple (x, a, b)
    for (const auto& r : G.crossings) w += r.sign * W(f[r.star_in] - 1, f[r.dot_left] - 1, f[r.dot_right] - 1);
    return mod(w, W.modulus);
}

uint64_t EnhancedPolynomial::at_one() const {
    uint64_t s = 0;
    for (const auto& [k, c] : terms) s += c;
    return s;
}

std::string EnhancedPolynomial::text() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms) {
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0)
            os << c;
        else {
            if (c != 1) os << c;
            os << 'u';
            if (k != 1) os << '^' << k;
        }
    }
    if (first) os << '0';
    return os.str();
}

EnhancedPolynomial polynomial_of(const DualGraphDiagram& G, const BoltzmannWeight& W, const std::vector<Coloring>& fs) {
    EnhancedPolynomial P;
    P.modulus = W.modulus;
    for (const auto& f : fs) ++P.terms[coloring_weight(G, W, f)];
    return P;
}

EnhancedPolynomial enhanced_polynomial(const DualGraphDiagram& G, const Biquasile& B, const BoltzmannWeight& W) {
    if (W.order != B.order()) throw std::invalid_argument("weight order does not match biquasile order");
    return polynomial_of(G, W, enumerate_colorings(G, B));
}

EnhancedPolynomial parse_polynomial(const std::string& text, int64_t modulus) {
    EnhancedPolynomial P;
    P.modulus = modulus;
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    std::size_t i = 0;
    auto bad = [&] { return std::invalid_argument("cannot parse polynomial '" + text + "'"); };
    auto number = [&](uint64_t dflt) {
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) return dflt;
        uint64_t v = std::stoull(s.substr(i, j - i));
        i = j;
        return v;
    };
    while (i < s.size()) {
        std::size_t start = i;
        uint64_t c = number(1);
        int64_t k = 0;
        if (i < s.size() && s[i] == 'u') {
            ++i;
            k = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t before = i;
                k = static_cast<int64_t>(number(0));
                if (i == before) throw bad();
            }
        } else if (i == start) {
            throw bad();
        }
        if (c) P.terms[mod(k, modulus)] += c;
        if (i < s.size()) {
            if (s[i] != '+') throw bad();
            ++i;
            if (i == s.size()) throw bad();
        }
    }
    return P;
}

}  // namespace bqk
