#pragma once
// Finite biquasiles. Public API is 1-indexed ({1..n}, n standing for the
// zero residue); storage is 0-indexed.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bqk {

using Table = std::vector<std::vector<int>>;  // 1-indexed entries

class Biquasile {
public:
    Biquasile() = default;
    // throws std::invalid_argument on malformed or non-Latin tables; the
    // exchange axioms are not checked here (see check_axioms)
    static Biquasile from_tables(const Table& star, const Table& dot);

    int order() const { return n_; }

    // 0-indexed operations
    int star(int x, int y) const { return star_[x * n_ + y]; }
    int dot(int x, int y) const { return dot_[x * n_ + y]; }
    int star_ldiv(int y, int z) const { return star_l_[y * n_ + z]; }  // y\*z: y*x = z
    int star_rdiv(int z, int y) const { return star_r_[z * n_ + y]; }  // z/*y: x*y = z
    int dot_ldiv(int y, int z) const { return dot_l_[y * n_ + z]; }
    int dot_rdiv(int z, int y) const { return dot_r_[z * n_ + y]; }

    Table star_table() const { return to_table(star_); }
    Table dot_table() const { return to_table(dot_); }

    bool operator==(const Biquasile& o) const { return n_ == o.n_ && star_ == o.star_ && dot_ == o.dot_; }

private:
    Table to_table(const std::vector<int>& t) const;
    int n_ = 0;
    std::vector<int> star_, dot_, star_l_, star_r_, dot_l_, dot_r_;
};

struct DerivedTables {
    Table star_ldiv, star_rdiv, dot_ldiv, dot_rdiv;  // 1-indexed
};
DerivedTables derived_divisions(const Biquasile& B);

struct AxiomVerdict {
    enum Kind { pass, malformed, not_latin, axiom_i, axiom_ii } kind = pass;
    std::array<int, 4> witness{};  // (a, b, x, y), 1-indexed, for axiom failures
    std::string detail;
    explicit operator bool() const { return kind == pass; }
};

AxiomVerdict check_axioms(const Table& star, const Table& dot);
AxiomVerdict check_axioms(const Biquasile& B);

struct AlexanderParams {
    int64_t modulus = 2;
    int64_t d = 1, s = 1, n_param = 1;
    void validate() const;  // throws std::invalid_argument on non-units
};

Biquasile alexander(const AlexanderParams& p);
// carrier index <-> residue, following the "n means zero" labelling
inline int64_t residue_of(int idx0, int64_t m) { return (idx0 + 1) % m; }
inline int index_of(int64_t residue, int64_t m) {
    int64_t r = ((residue % m) + m) % m;
    return static_cast<int>(r == 0 ? m - 1 : r - 1);
}

std::vector<AlexanderParams> unit_triples(int64_t modulus);

// every pair of Latin squares of order n <= 4 satisfying the exchange axioms,
// lexicographic in (star, dot) as flattened 1-indexed tables
std::vector<Biquasile> enumerate_biquasiles(int order);
std::vector<Biquasile> enumerate_biquasiles_serial(int order);
std::vector<Table> latin_squares(int order);

// "[ 1 3 2 | 2 3 1 ]" rows
std::string render_block_matrix(const Biquasile& B);

}  // namespace bqk
