#include "bqk/modalg.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

namespace bqk {

int64_t mod(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

bool is_unit(int64_t a, int64_t m) { return std::gcd(mod(a, m), m) == 1; }

namespace {

struct Xgcd {
    int64_t g, s, t;
};

// s*a + t*b = g = gcd(a, b), a, b >= 0
Xgcd xgcd(int64_t a, int64_t b) {
    int64_t s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        int64_t q = a / b;
        std::tie(a, b) = std::pair{b, a - q * b};
        std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
        std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
    }
    return {a, s0, t0};
}

// unit u with u*a == gcd(a, m) (mod m), for 0 < a < m
int64_t normalizing_unit(int64_t a, int64_t m) {
    int64_t g = std::gcd(a, m);
    int64_t mg = m / g;
    int64_t u = mod(xgcd(a / g, mg).s, mg);
    while (std::gcd(u, m) != 1) u += mg;
    return u;
}

}  // namespace

int64_t inverse_mod(int64_t a, int64_t m) {
    a = mod(a, m);
    auto e = xgcd(a, m);
    if (e.g != 1) throw std::domain_error("not a unit mod " + std::to_string(m));
    return mod(e.s, m);
}

BigCount ipow(int64_t base, std::size_t e) {
    BigCount r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= base;
    return r;
}

ModMatrix::ModMatrix(int64_t m, std::size_t r, std::size_t c)
    : modulus(m), rows(r), cols(c), entries(r * c, 0) {
    if (m < 2) throw std::invalid_argument("modulus must be >= 2");
}

ModMatrix ModMatrix::from_rows(int64_t m, const std::vector<Vec>& rs, std::size_t c) {
    ModMatrix M(m, rs.size(), c);
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (rs[i].size() != c) throw std::invalid_argument("ragged row");
        for (std::size_t j = 0; j < c; ++j) M.at(i, j) = mod(rs[i][j], m);
    }
    return M;
}

Vec ModMatrix::row(std::size_t r) const {
    return Vec(entries.begin() + r * cols, entries.begin() + (r + 1) * cols);
}

bool ModMatrix::row_is_zero(std::size_t r) const {
    for (std::size_t j = 0; j < cols; ++j)
        if (at(r, j) != 0) return false;
    return true;
}

std::size_t ModMatrix::nonzero_rows() const {
    std::size_t k = 0;
    for (std::size_t i = 0; i < rows; ++i) k += !row_is_zero(i);
    return k;
}

ModMatrix howell_form(const ModMatrix& M) {
    const int64_t N = M.modulus;
    const std::size_t C = M.cols;
    std::vector<Vec> A;
    A.reserve(M.rows + C);
    for (std::size_t i = 0; i < M.rows; ++i) A.push_back(M.row(i));

    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < A.size(); ++c) {
        for (std::size_t i = r + 1; i < A.size(); ++i) {
            if (A[i][c] == 0) continue;
            if (A[r][c] == 0) {
                std::swap(A[r], A[i]);
                continue;
            }
            auto [g, s, t] = xgcd(A[r][c], A[i][c]);
            int64_t u = A[r][c] / g, v = A[i][c] / g;
            for (std::size_t k = c; k < C; ++k) {
                int64_t a = A[r][k], b = A[i][k];
                A[r][k] = mod(s * a + t * b, N);
                A[i][k] = mod(u * b - v * a, N);
            }
        }
        if (A[r][c] == 0) continue;

        int64_t w = normalizing_unit(A[r][c], N);
        for (std::size_t k = c; k < C; ++k) A[r][k] = mod(A[r][k] * w, N);
        const int64_t p = A[r][c];

        for (std::size_t k = 0; k < r; ++k) {
            int64_t q = A[k][c] / p;
            if (q == 0) continue;
            for (std::size_t j = c; j < C; ++j) A[k][j] = mod(A[k][j] - q * A[r][j], N);
        }

        // the annihilator multiple keeps the span closed under "zero prefix"
        Vec ann(C, 0);
        bool nz = false;
        for (std::size_t j = c + 1; j < C; ++j) {
            ann[j] = mod(A[r][j] * (N / p), N);
            nz |= ann[j] != 0;
        }
        if (nz) A.push_back(std::move(ann));
        ++r;
    }

    ModMatrix H(N, std::max(M.rows, r), C);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < C; ++j) H.at(i, j) = A[i][j];
    return H;
}

SolutionSpace kernel(const ModMatrix& M) {
    const int64_t N = M.modulus;
    const std::size_t R = M.rows, C = M.cols;
    // rows of howell([M^T | I]) with zero left block span the kernel
    ModMatrix T(N, C, R + C);
    for (std::size_t j = 0; j < C; ++j) {
        for (std::size_t i = 0; i < R; ++i) T.at(j, i) = M.at(i, j);
        T.at(j, R + j) = 1;
    }
    ModMatrix H = howell_form(T);

    SolutionSpace S;
    S.modulus = N;
    for (std::size_t i = 0; i < H.rows; ++i) {
        bool left_zero = true;
        for (std::size_t k = 0; k < R && left_zero; ++k) left_zero = H.at(i, k) == 0;
        if (!left_zero) continue;
        Vec g(H.entries.begin() + i * H.cols + R, H.entries.begin() + (i + 1) * H.cols);
        auto piv = std::find_if(g.begin(), g.end(), [](int64_t x) { return x != 0; });
        if (piv == g.end()) continue;
        S.count *= N / *piv;
        S.generators.push_back(std::move(g));
    }
    return S;
}

BigCount solve_count(const ModMatrix& M) { return kernel(M).count; }

bool in_row_span(const ModMatrix& H, Vec v) {
    const int64_t N = H.modulus;
    if (v.size() != H.cols) return false;
    for (auto& x : v) x = mod(x, N);
    std::size_t c = 0;
    for (std::size_t i = 0; i < H.rows; ++i) {
        std::size_t p = 0;
        while (p < H.cols && H.at(i, p) == 0) ++p;
        if (p == H.cols) break;
        for (; c < p; ++c)
            if (v[c] != 0) return false;
        int64_t piv = H.at(i, p);
        if (v[p] % piv != 0) return false;
        int64_t q = v[p] / piv;
        for (std::size_t j = p; j < H.cols; ++j) v[j] = mod(v[j] - q * H.at(i, j), N);
        c = p + 1;
    }
    for (; c < H.cols; ++c)
        if (v[c] != 0) return false;
    return true;
}

}  // namespace bqk
