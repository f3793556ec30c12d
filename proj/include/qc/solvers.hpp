#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qc/graph.hpp"

namespace qc {

// Proper vertex coloring. colors[v] is a positive color id; num_colors is the
// number of distinct ids used. Optimal colorings produced by the solvers use
// the contiguous range 1..num_colors.
struct Coloring {
    std::vector<int> colors;
    int num_colors = 0;

    bool is_proper(const Graph& g) const;
    // Remap ids to 1..num_colors in order of first appearance.
    Coloring normalized() const;
    static Coloring of(std::vector<int> colors);
};

// True if sized to g, all ids in 1..num_colors with every id used, and proper.
bool is_valid_coloring(const Graph& g, const Coloring& c);

// Per-vertex allowed color sets over the universe 1..num_colors (<= 64).
// Bit c-1 of lists[v] allows color c at vertex v.
struct ListAssignment {
    int num_colors = 0;
    std::vector<std::uint64_t> lists;
};

struct CliqueResult {
    int size = 0;
    VertexSet members = 0;
};

// Exact maximum clique (branch and bound over bitset candidate sets with a
// greedy-coloring bound; vertices explored in descending-degree order).
CliqueResult clique_number(const Graph& g);

// Exact maximum independent set, as a clique of the complement.
CliqueResult independence_number(const Graph& g);

// Exact k-colorability by complete backtracking. Symmetry is broken by
// pre-assigning a maximum clique distinct colors and by introducing new
// color ids in increasing order.
std::optional<Coloring> k_colorable(const Graph& g, int k);

// Exact chromatic number: iterative deepening on k starting at the clique bound.
std::pair<int, Coloring> chromatic_number(const Graph& g);

// Exact list coloring; empty list at any vertex means no coloring exists.
std::optional<Coloring> list_colorable(const Graph& g, const ListAssignment& lists);

struct Ramsey33Witness {
    enum class Kind { Triangle, IndependentTriple };
    Kind kind;
    VertexSet vertices = 0;  // three vertices, pairwise adjacent or pairwise non-adjacent
};

// Inside s, find a triangle or an independent triple. Always succeeds for
// |s| >= 6 (pigeonhole on one vertex's neighbors); throws not_found_error if
// |s| < 6 and neither exists.
Ramsey33Witness ramsey33_witness(const Graph& g, VertexSet s);

bool validate_ramsey33(const Graph& g, const Ramsey33Witness& w);

}  // namespace qc
