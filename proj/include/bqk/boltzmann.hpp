#pragma once
// Boltzmann weights phi: X^3 -> Z_m and the enhanced polynomial.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bqk/biquasile.hpp"
#include "bqk/coloring.hpp"
#include "bqk/modalg.hpp"

namespace bqk {

// coefficient on chi_{x,y,z}, keyed row-major over 0-indexed (x, y, z)
struct BoltzmannWeight {
    int order = 1;
    int64_t modulus = 2;
    Vec coeffs;

    static BoltzmannWeight zero(int order, int64_t modulus);
    // 1-indexed triples
    static BoltzmannWeight from_terms(int order, int64_t modulus, const std::map<std::array<int, 3>, int64_t>& terms);
    int64_t operator()(int x, int y, int z) const { return coeffs[(x * order + y) * order + z]; }
    int64_t& at(int x, int y, int z) { return coeffs[(x * order + y) * order + z]; }
    std::map<std::array<int, 3>, int64_t> terms() const;  // nonzero, 1-indexed
    bool operator==(const BoltzmannWeight&) const = default;
};

struct WeightVerdict {
    enum Kind { pass, incomplete, axiom_i, axiom_ii } kind = pass;
    // axiom (i): (x, a) or (x, b); axiom (ii): (x, y, a, b); 1-indexed
    std::vector<int> witness;
    std::string detail;
    explicit operator bool() const { return kind == pass; }
};

WeightVerdict check_weight(const Biquasile& B, const BoltzmannWeight& W);

// 2n^2 single-variable rows from (i), then n^4 six-term rows from (ii)
// written as L - R, in loop order (x, y, a, b)
ModMatrix weight_constraint_matrix(const Biquasile& B, int64_t m);
SolutionSpace solve_weights(const Biquasile& B, int64_t m);
bool weight_in_space(const Biquasile& B, const BoltzmannWeight& W);

BoltzmannWeight linear_weight(const AlexanderParams& p, int64_t gamma);

int64_t coloring_weight(const DualGraphDiagram& G, const BoltzmannWeight& W, const Coloring& f);

struct EnhancedPolynomial {
    int64_t modulus = 2;
    std::map<int64_t, uint64_t> terms;  // exponent -> multiplicity

    uint64_t at_one() const;
    std::string text() const;  // "4 + 4u^2"
    bool operator==(const EnhancedPolynomial&) const = default;
};

EnhancedPolynomial enhanced_polynomial(const DualGraphDiagram& G, const Biquasile& B, const BoltzmannWeight& W);
EnhancedPolynomial polynomial_of(const DualGraphDiagram& G, const BoltzmannWeight& W, const std::vector<Coloring>& fs);
EnhancedPolynomial parse_polynomial(const std::string& text, int64_t modulus);

}  // namespace bqk
