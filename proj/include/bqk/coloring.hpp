#pragma once
// Biquasile colorings of dual graph diagrams.

#include <cstdint>
#include <string>
#include <vector>

#include "bqk/biquasile.hpp"
#include "bqk/diagram.hpp"
#include "bqk/modalg.hpp"

namespace bqk {

using Coloring = std::vector<int>;  // 1-indexed color per region

bool satisfies(const DualGraphDiagram& G, const Biquasile& B, const Coloring& f);

// backtracking with propagation; the parallel variants split the top of the
// search tree into independent prefixes
uint64_t count_colorings(const DualGraphDiagram& G, const Biquasile& B);
uint64_t count_colorings_serial(const DualGraphDiagram& G, const Biquasile& B);
// sorted lexicographically
std::vector<Coloring> enumerate_colorings(const DualGraphDiagram& G, const Biquasile& B);
std::vector<Coloring> enumerate_colorings_serial(const DualGraphDiagram& G, const Biquasile& B);

// one row per crossing, one column per region, over Z_modulus:
//   y + dsn^2 x - nd a - ns b = 0
ModMatrix alexander_coloring_matrix(const DualGraphDiagram& G, const AlexanderParams& p);
BigCount count_colorings_alexander(const DualGraphDiagram& G, const AlexanderParams& p);

struct Presentation {
    int generators = 0;
    std::vector<CrossingRecord> relations;
    std::string text(bool ascii = false) const;
};
Presentation presentation(const DualGraphDiagram& G);

}  // namespace bqk
