#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qc/errors.hpp"

namespace qc {

inline constexpr int max_vertices = 64;

// Vertex subsets are 64-bit masks; vertex v is bit v.
using VertexSet = std::uint64_t;

inline constexpr VertexSet vbit(int v) { return std::uint64_t{1} << v; }
inline int vs_size(VertexSet s) { return std::popcount(s); }
inline bool vs_has(VertexSet s, int v) { return (s >> v) & 1u; }
inline int vs_first(VertexSet s) { return std::countr_zero(s); }
inline VertexSet vs_below(int n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

std::vector<int> vs_members(VertexSet s);

// Simple undirected graph on at most 64 vertices.
// Invariants: adjacency is symmetric and irreflexive, bits >= order are clear.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int order() const { return n_; }
    int edge_count() const;
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
    VertexSet neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return std::popcount(adj_[v]); }
    VertexSet vertices() const { return vs_below(n_); }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::array<std::uint64_t, max_vertices> adj_{};
};

Graph edgeless(int n);
Graph complete(int n);
Graph cycle(int m);   // m >= 3
Graph path(int m);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph complement(const Graph& g);
Graph add_dominating_vertex(const Graph& g);

// Subgraph induced by s, vertices relabeled to 0..|s|-1 in ascending order.
// to_parent[i] is the original label of new vertex i.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent;
};
InducedSubgraph induced(const Graph& g, VertexSet s);

// Header-less graph6 (McKay's format), bit-exact.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

}  // namespace qc
