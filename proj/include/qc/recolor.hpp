#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "qc/graph.hpp"
#include "qc/matching.hpp"
#include "qc/solvers.hpp"

namespace qc {

// Result of a witness engine run: either a clique of the guaranteed size or a
// proper coloring strictly better than the input. Both are re-validated
// against the graph before they are returned.
struct WitnessOutcome {
    enum class Kind { Clique, Recoloring };
    Kind kind = Kind::Clique;
    VertexSet clique = 0;
    Coloring coloring;

    static WitnessOutcome clique_of(VertexSet s);
    static WitnessOutcome recoloring_of(Coloring c);
};

// True when the outcome stands on its own: cliques are pairwise adjacent (and
// at least min_clique large), recolorings are proper and use fewer colors
// than `input`.
bool validate_outcome(const Graph& g, const Coloring& input, const WitnessOutcome& w,
                      int min_clique = 0);

struct Doubleton {
    int u = -1;  // partner
    int v = -1;  // the chosen Q-universal vertex, member of S
};

// Decomposition of a proper (n-k)-coloring: the singleton classes Q (always a
// clique here), one Q-universal vertex per non-singleton class forming S, the
// doubleton partners U, and per-partner lists of Q-colors available for
// recoloring (colors of Q vertices the partner is not adjacent to).
struct ColoringStructure {
    Graph g;
    Coloring coloring;
    int k = 0;
    VertexSet q_set = 0;
    std::vector<Doubleton> doubletons;
    std::optional<VertexSet> triple_class;
    VertexSet s_set = 0;
    VertexSet u_set = 0;
    ListAssignment lists;       // indexed by vertex; populated at doubleton partners
    std::uint64_t l_union = 0;  // bit c-1 for every color appearing in some list
};

// Classify the input coloring. Short-circuits with a WitnessOutcome when the
// classification itself already decides: non-adjacent singletons or a class
// with no Q-universal vertex yield an improved coloring, and a singleton
// count of at least n-2k+2 yields a clique.
std::variant<ColoringStructure, WitnessOutcome> extract_structure(const Graph& g,
                                                                  const Coloring& coloring,
                                                                  int k);

// Clique of size >= n-2k+2 or a strictly better coloring; k >= 3.
WitnessOutcome witness_basic(const Graph& g, const Coloring& coloring, int k);

// Clique of size >= n-2k+3 (asserted for k in {5,6}; best effort beyond) or a
// strictly better coloring; k >= 5.
WitnessOutcome witness_sharp(const Graph& g, const Coloring& coloring, int k);

// k = 5 with S inducing a 5-cycle: recolor the ten doubleton vertices so the
// fifth doubleton color disappears. S takes three of the remaining doubleton
// colors, each partner takes one of two doubleton colors or a color from its
// list. Returns the block coloring (indexed by ascending vertex of S u U with
// the original color ids) or nothing when the case analysis proves it
// impossible; agreement with the exact list-coloring solver on the same
// restricted instance is asserted.
std::optional<Coloring> recolor_doubletons(const ColoringStructure& s);

// ---- canonical five-doubleton block, used by tests and sweeps ----

// Abstract block: S is the cycle v_0..v_4 (v_i ~ v_{i+1 mod 5}), u_i the
// partner of v_i, lists over abstract colors 0..l-1 (nonempty, union full).
// u_graph is the adjacency among the partners; its complement must be
// triangle-free (an independent triple among the partners is handled by
// removal before the case analysis applies).
struct C5Pattern {
    int l = 0;
    std::array<std::uint64_t, 5> lists{};
    Graph u_graph;
};

// Color codes in tree results: 1..4 are the four reusable doubleton colors
// (3 and 4 are the ones partners may take), 5+t is abstract color t.
struct CaseTreeColoring {
    std::array<int, 5> u_colors{};
    std::array<int, 5> v_colors{};
};
struct CaseTreeFallback {
    VertexSet u_members = 0;           // pattern-space partner indices
    std::uint64_t blocked_colors = 0;  // abstract color bits
};
using CaseTreeResult = std::variant<CaseTreeColoring, CaseTreeFallback>;

// The hand-coded case analysis over l = |L|. Every failure pins the partners
// and colors whose Q-side substitution yields the fallback clique.
CaseTreeResult c5_case_tree(const C5Pattern& p);

// Materialize a pattern as a real graph: a complete Q of size q_size joined to
// S and (per lists) to the partners, S the 5-cycle, v_i ~ u_j exactly when
// i != j. Vertices are laid out q_0..q_{q-1}, v_0..v_4, u_0..u_4, colored as a
// k = 5 structure (doubleton i gets color i+1, q_j gets 6+j).
struct C5Embedding {
    Graph g;
    Coloring coloring;
    int q_size = 0;
};
C5Embedding embed_c5_pattern(const C5Pattern& p, int q_size);

}  // namespace qc
