#include "qc/graph.hpp"

#include <algorithm>

namespace qc {

std::vector<int> vs_members(VertexSet s) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(vs_size(s)));
    for (VertexSet t = s; t; t &= t - 1) out.push_back(vs_first(t));
    return out;
}

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > max_vertices)
        throw capacity_error("graph order must be between 0 and 64, got " + std::to_string(n));
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
        throw contract_error("invalid edge endpoints");
    adj_[u] |= vbit(v);
    adj_[v] |= vbit(u);
}

void Graph::remove_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw contract_error("invalid edge endpoints");
    adj_[u] &= ~vbit(v);
    adj_[v] &= ~vbit(u);
}

Graph edgeless(int n) { return Graph(n); }

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle(int m) {
    if (m < 3) throw contract_error("cycle needs at least 3 vertices");
    Graph g(m);
    for (int v = 0; v < m; ++v) g.add_edge(v, (v + 1) % m);
    return g;
}

Graph path(int m) {
    Graph g(m);
    for (int v = 0; v + 1 < m; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    if (g.order() + h.order() > max_vertices)
        throw capacity_error("union exceeds 64 vertices");
    Graph out(g.order() + h.order());
    for (int v = 0; v < g.order(); ++v)
        for (VertexSet t = g.neighbors(v); t; t &= t - 1)
            if (vs_first(t) > v) out.add_edge(v, vs_first(t));
    int off = g.order();
    for (int v = 0; v < h.order(); ++v)
        for (VertexSet t = h.neighbors(v); t; t &= t - 1)
            if (vs_first(t) > v) out.add_edge(v + off, vs_first(t) + off);
    return out;
}

Graph complement(const Graph& g) {
    Graph out(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v)) out.add_edge(u, v);
    return out;
}

Graph add_dominating_vertex(const Graph& g) {
    if (g.order() >= max_vertices) throw capacity_error("already at 64 vertices");
    Graph out(g.order() + 1);
    for (int u = 0; u < g.order(); ++u) {
        for (VertexSet t = g.neighbors(u); t; t &= t - 1)
            if (vs_first(t) > u) out.add_edge(u, vs_first(t));
        out.add_edge(u, g.order());
    }
    return out;
}

InducedSubgraph induced(const Graph& g, VertexSet s) {
    if (s & ~g.vertices()) throw contract_error("induced set not a subset of the vertices");
    InducedSubgraph out;
    out.to_parent = vs_members(s);
    int m = static_cast<int>(out.to_parent.size());
    out.graph = Graph(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (g.has_edge(out.to_parent[i], out.to_parent[j])) out.graph.add_edge(i, j);
    return out;
}

// graph6 layout: N(n) followed by the upper triangle read column by column
// ((0,1),(0,2),(1,2),(0,3),...), packed big-endian into 6-bit groups, each
// group offset by 63. Zero padding completes the final group.
std::string to_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int acc = 0, bits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                bits = 0;
            }
        }
    }
    if (bits) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
    return out;
}

Graph from_graph6(std::string_view text) {
    std::size_t pos = 0;
    auto need = [&](std::size_t at) -> int {
        if (at >= text.size()) throw parse_error("graph6 string truncated", at);
        unsigned char c = static_cast<unsigned char>(text[at]);
        if (c < 63 || c > 126) throw parse_error("graph6 byte out of range", at);
        return c - 63;
    };
    long n;
    if (need(0) == 63) {
        if (text.size() > 1 && static_cast<unsigned char>(text[1]) == 126)
            throw parse_error("graph order beyond supported range", 1);
        n = (static_cast<long>(need(1)) << 12) | (need(2) << 6) | need(3);
        pos = 4;
    } else {
        n = need(0);
        pos = 1;
    }
    if (n > max_vertices) throw capacity_error("graph6 order exceeds 64 vertices");
    Graph g(static_cast<int>(n));
    long nbits = n * (n - 1) / 2;
    std::size_t expect = pos + static_cast<std::size_t>((nbits + 5) / 6);
    if (text.size() != expect)
        throw parse_error(text.size() < expect ? "graph6 string truncated"
                                               : "trailing bytes after graph6 data",
                          std::min(text.size(), expect));
    long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int group = need(pos + static_cast<std::size_t>(bit / 6));
            if ((group >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    for (; bit % 6 != 0; ++bit) {
        int group = need(pos + static_cast<std::size_t>(bit / 6));
        if ((group >> (5 - bit % 6)) & 1)
            throw parse_error("nonzero padding bits", pos + static_cast<std::size_t>(bit / 6));
    }
    return g;
}

}  // namespace qc
