#pragma once
// Oriented link diagrams from PD codes, face tracing, and the dual-graph
// crossing records used for coloring.
//
// PD convention: X[i,j,k,l] lists the four edges counterclockwise starting
// at the incoming under-strand, so the under strand runs i -> k. The over
// strand runs j -> l or l -> j; which one is recorded in over_in.

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace bqk {

class DiagramError : public std::runtime_error {
public:
    enum Kind { syntax, multiplicity, labeling, split, nonplanar, invalid_site, invalid_record };
    DiagramError(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
    Kind kind;
};

class SplitDiagramError : public DiagramError {
public:
    explicit SplitDiagramError(const std::string& what) : DiagramError(split, what) {}
};

struct Crossing {
    std::array<int, 4> e{};
    int over_in = 1;  // slot (1 or 3) where the over strand enters
    bool operator==(const Crossing&) const = default;
};

struct LinkDiagram {
    std::vector<Crossing> crossings;
    int edge_count = 0;
    int component_count = 1;

    std::string pd() const;
    bool operator==(const LinkDiagram&) const = default;
};

// "PD[X[1,5,2,4],...]" or a bare list of integers taken four at a time
LinkDiagram parse_pd(const std::string& text);
// validates labels, infers orientation, checks component labeling
LinkDiagram make_diagram(const std::vector<std::array<int, 4>>& tuples);

struct RegionMap {
    int region_count = 2;
    std::vector<std::array<int, 4>> corner;  // corner[c][p] lies between slots p and p+1
};
RegionMap trace_regions(const LinkDiagram& D);

// standard writhe sign of crossing c
int crossing_sign(const LinkDiagram& D, std::size_t c);
int writhe(const LinkDiagram& D);
LinkDiagram mirror(const LinkDiagram& D);

struct CrossingRecord {
    int sign = 1;
    int star_in = 0;    // x
    int dot_left = 0;   // a
    int dot_right = 0;  // b
    int star_out = 0;   // y = x * (a . b)
    bool operator==(const CrossingRecord&) const = default;
};

struct DualGraphDiagram {
    int region_count = 2;
    std::vector<CrossingRecord> crossings;
    void validate() const;  // throws DiagramError(invalid_record)
    bool operator==(const DualGraphDiagram&) const = default;
};

DualGraphDiagram to_dual_graph(const LinkDiagram& D);

enum class Move { R1_pos, R1_neg, R2 };
// site is an edge label of D (1 for the crossingless unknot, R1 only)
LinkDiagram perturb(const LinkDiagram& D, Move move, int site);
std::vector<int> edge_labels(const LinkDiagram& D);

}  // namespace bqk
