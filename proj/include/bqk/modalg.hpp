#pragma once
// Exact linear algebra over Z_m for composite m.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bqk {

using BigCount = boost::multiprecision::cpp_int;
using Vec = std::vector<int64_t>;

struct ModMatrix {
    int64_t modulus = 2;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<int64_t> entries;  // row-major, each in [0, modulus)

    ModMatrix() = default;
    ModMatrix(int64_t m, std::size_t r, std::size_t c);
    // entries are reduced into [0, m)
    static ModMatrix from_rows(int64_t m, const std::vector<Vec>& rows, std::size_t cols);

    int64_t& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    int64_t at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
    Vec row(std::size_t r) const;
    bool row_is_zero(std::size_t r) const;
    std::size_t nonzero_rows() const;

    bool operator==(const ModMatrix&) const = default;
};

struct SolutionSpace {
    int64_t modulus = 2;
    std::vector<Vec> generators;  // in Howell form, so count = prod(m / pivot)
    BigCount count = 1;
};

// Canonical Howell form: pivots divide m, entries above a pivot lie in
// [0, pivot), and every span element vanishing on the first k columns is a
// combination of the rows that do. Output keeps max(input rows, rank) rows.
ModMatrix howell_form(const ModMatrix& M);

SolutionSpace kernel(const ModMatrix& M);
BigCount solve_count(const ModMatrix& M);

// v in row span of H (H must already be in Howell form).
bool in_row_span(const ModMatrix& H, Vec v);

// helpers shared with other modules
int64_t mod(int64_t a, int64_t m);
int64_t inverse_mod(int64_t a, int64_t m);  // throws if not a unit
bool is_unit(int64_t a, int64_t m);
BigCount ipow(int64_t base, std::size_t e);

}  // namespace bqk
