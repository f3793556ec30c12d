#include "qc/solvers.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace qc {

bool Coloring::is_proper(const Graph& g) const {
    if (static_cast<int>(colors.size()) != g.order()) return false;
    for (int v = 0; v < g.order(); ++v) {
        if (colors[v] <= 0) return false;
        for (VertexSet t = g.neighbors(v) & ~vs_below(v + 1); t; t &= t - 1)
            if (colors[vs_first(t)] == colors[v]) return false;
    }
    return true;
}

Coloring Coloring::normalized() const {
    Coloring out;
    out.colors.resize(colors.size());
    std::vector<int> remap;
    for (std::size_t v = 0; v < colors.size(); ++v) {
        int c = colors[v];
        auto it = std::find(remap.begin(), remap.end(), c);
        if (it == remap.end()) {
            remap.push_back(c);
            it = remap.end() - 1;
        }
        out.colors[v] = static_cast<int>(it - remap.begin()) + 1;
    }
    out.num_colors = static_cast<int>(remap.size());
    return out;
}

Coloring Coloring::of(std::vector<int> colors) {
    Coloring c;
    c.colors = std::move(colors);
    std::vector<int> distinct(c.colors);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    c.num_colors = static_cast<int>(distinct.size());
    return c;
}

bool is_valid_coloring(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.colors.size()) != g.order()) return false;
    std::uint64_t used = 0;
    for (int x : c.colors) {
        if (x < 1 || x > 64) return false;
        used |= std::uint64_t{1} << (x - 1);
    }
    if (g.order() > 0 && used != vs_below(c.num_colors)) return false;
    if (g.order() == 0 && c.num_colors != 0) return false;
    return c.is_proper(g);
}

namespace {

// Tomita-style expansion: candidates are greedily colored and explored in
// descending color order so rsize + color bounds the reachable clique.
struct CliqueSearch {
    int n = 0;
    std::array<std::uint64_t, max_vertices> adj{};
    int best = 0;
    std::uint64_t best_set = 0;

    void expand(std::uint64_t r, int rsize, std::uint64_t cand) {
        if (cand == 0) {
            if (rsize > best) {
                best = rsize;
                best_set = r;
            }
            return;
        }
        std::array<int, max_vertices> order;
        std::array<int, max_vertices> bound;
        int cnt = 0, color = 0;
        std::uint64_t rem = cand;
        while (rem) {
            ++color;
            std::uint64_t avail = rem;
            while (avail) {
                int v = vs_first(avail);
                order[cnt] = v;
                bound[cnt] = color;
                ++cnt;
                rem &= ~vbit(v);
                avail &= ~vbit(v) & ~adj[v] & rem;
            }
        }
        std::uint64_t p = cand;
        for (int i = cnt - 1; i >= 0; --i) {
            if (rsize + bound[i] <= best) return;
            int v = order[i];
            p &= ~vbit(v);
            expand(r | vbit(v), rsize + 1, p & adj[v]);
        }
    }
};

}  // namespace

CliqueResult clique_number(const Graph& g) {
    int n = g.order();
    if (n == 0) return {0, 0};
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[perm[i]] = i;

    CliqueSearch s;
    s.n = n;
    for (int v = 0; v < n; ++v)
        for (VertexSet t = g.neighbors(v); t; t &= t - 1)
            s.adj[pos[v]] |= vbit(pos[vs_first(t)]);
    s.expand(0, 0, vs_below(n));

    CliqueResult out;
    out.size = s.best;
    for (VertexSet t = s.best_set; t; t &= t - 1) out.members |= vbit(perm[vs_first(t)]);
    return out;
}

CliqueResult independence_number(const Graph& g) { return clique_number(complement(g)); }

namespace {

// Backtracking k-coloring with a maximum clique pre-colored 1..m. Dynamic
// vertex choice: most saturated, then highest degree, then lowest index.
struct ColorSearch {
    const Graph* g = nullptr;
    int n = 0, k = 0;
    std::vector<int> color;
    std::vector<std::uint64_t> forbid;  // bit c-1 set when color c blocked

    bool run(int colored, int max_used) {
        if (colored == n) return true;
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v]) continue;
            int sat = std::popcount(forbid[v]);
            int deg = g->degree(v);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        int limit = std::min(k, max_used + 1);
        std::uint64_t avail = ~forbid[pick] & vs_below(limit);
        for (std::uint64_t a = avail; a; a &= a - 1) {
            int c = vs_first(a) + 1;
            color[pick] = c;
            std::uint64_t flip = 0;
            for (VertexSet t = g->neighbors(pick); t; t &= t - 1) {
                int u = vs_first(t);
                if (!(forbid[u] >> (c - 1) & 1)) {
                    forbid[u] |= std::uint64_t{1} << (c - 1);
                    flip |= vbit(u);
                }
            }
            if (run(colored + 1, std::max(max_used, c))) return true;
            for (VertexSet t = flip; t; t &= t - 1)
                forbid[vs_first(t)] &= ~(std::uint64_t{1} << (c - 1));
            color[pick] = 0;
        }
        return false;
    }
};

std::optional<Coloring> k_colorable_impl(const Graph& g, int k, const CliqueResult& clq) {
    int n = g.order();
    if (n == 0) return Coloring{{}, 0};
    if (k <= 0 || clq.size > k) return std::nullopt;

    ColorSearch s;
    s.g = &g;
    s.n = n;
    s.k = k;
    s.color.assign(n, 0);
    s.forbid.assign(n, 0);
    int next = 0;
    for (int v : vs_members(clq.members)) {
        int c = ++next;
        s.color[v] = c;
        for (VertexSet t = g.neighbors(v); t; t &= t - 1)
            s.forbid[vs_first(t)] |= std::uint64_t{1} << (c - 1);
    }
    if (!s.run(clq.size, clq.size)) return std::nullopt;
    return Coloring::of(std::move(s.color));
}

}  // namespace

std::optional<Coloring> k_colorable(const Graph& g, int k) {
    if (k < 0) throw contract_error("k must be nonnegative");
    return k_colorable_impl(g, k, clique_number(g));
}

std::pair<int, Coloring> chromatic_number(const Graph& g) {
    if (g.order() == 0) return {0, Coloring{{}, 0}};
    CliqueResult clq = clique_number(g);
    for (int k = clq.size;; ++k) {
        if (auto c = k_colorable_impl(g, k, clq)) return {k, std::move(*c)};
    }
}

std::optional<Coloring> list_colorable(const Graph& g, const ListAssignment& lists) {
    int n = g.order();
    if (static_cast<int>(lists.lists.size()) != n)
        throw contract_error("list assignment must cover every vertex");
    if (lists.num_colors < 0 || lists.num_colors > 64)
        throw capacity_error("color universe limited to 64");
    std::uint64_t universe = vs_below(lists.num_colors);
    for (int v = 0; v < n; ++v) {
        if (lists.lists[v] & ~universe) throw contract_error("list outside the color universe");
        if (lists.lists[v] == 0) return std::nullopt;
    }

    std::vector<int> color(n, 0);
    std::vector<std::uint64_t> avail(lists.lists);
    // MRV backtracking: color the vertex with the fewest remaining options.
    auto rec = [&](auto&& self, int colored) -> bool {
        if (colored == n) return true;
        int pick = -1, pick_cnt = 65;
        for (int v = 0; v < n; ++v) {
            if (color[v]) continue;
            int cnt = std::popcount(avail[v]);
            if (cnt < pick_cnt) {
                pick = v;
                pick_cnt = cnt;
                if (cnt == 0) return false;
            }
        }
        for (std::uint64_t a = avail[pick]; a; a &= a - 1) {
            int c = vs_first(a) + 1;
            color[pick] = c;
            std::uint64_t mask = std::uint64_t{1} << (c - 1);
            std::uint64_t flip = 0;
            for (VertexSet t = g.neighbors(pick); t; t &= t - 1) {
                int u = vs_first(t);
                if (avail[u] & mask) {
                    avail[u] &= ~mask;
                    flip |= vbit(u);
                }
            }
            if (self(self, colored + 1)) return true;
            for (VertexSet t = flip; t; t &= t - 1) avail[vs_first(t)] |= mask;
            color[pick] = 0;
        }
        color[pick] = 0;
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return Coloring::of(std::move(color));
}

namespace {

std::optional<Ramsey33Witness> scan_triple(const Graph& g, const std::vector<int>& m) {
    for (std::size_t a = 0; a < m.size(); ++a)
        for (std::size_t b = a + 1; b < m.size(); ++b)
            for (std::size_t c = b + 1; c < m.size(); ++c) {
                VertexSet tri = vbit(m[a]) | vbit(m[b]) | vbit(m[c]);
                int edges = g.has_edge(m[a], m[b]) + g.has_edge(m[a], m[c]) + g.has_edge(m[b], m[c]);
                if (edges == 3) return Ramsey33Witness{Ramsey33Witness::Kind::Triangle, tri};
                if (edges == 0) return Ramsey33Witness{Ramsey33Witness::Kind::IndependentTriple, tri};
            }
    return std::nullopt;
}

}  // namespace

Ramsey33Witness ramsey33_witness(const Graph& g, VertexSet s) {
    if (s & ~g.vertices()) throw contract_error("witness set not a subset of the vertices");
    if (vs_size(s) < 6) {
        if (auto w = scan_triple(g, vs_members(s))) return *w;
        throw not_found_error("no triangle or independent triple in the given set");
    }
    // Pigeonhole on the lowest vertex: among the other >= 5 set members it has
    // three neighbors or three non-neighbors; either triple decides directly.
    int v = vs_first(s);
    VertexSet rest = s & ~vbit(v);
    VertexSet nb = rest & g.neighbors(v);
    VertexSet side = vs_size(nb) >= 3 ? nb : rest & ~g.neighbors(v);
    bool adjacent_side = vs_size(nb) >= 3;
    std::vector<int> three = vs_members(side);
    three.resize(3);
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
            if (adjacent_side && g.has_edge(three[a], three[b]))
                return {Ramsey33Witness::Kind::Triangle, vbit(v) | vbit(three[a]) | vbit(three[b])};
            if (!adjacent_side && !g.has_edge(three[a], three[b]))
                return {Ramsey33Witness::Kind::IndependentTriple,
                        vbit(v) | vbit(three[a]) | vbit(three[b])};
        }
    VertexSet tri = vbit(three[0]) | vbit(three[1]) | vbit(three[2]);
    return {adjacent_side ? Ramsey33Witness::Kind::IndependentTriple
                          : Ramsey33Witness::Kind::Triangle,
            tri};
}

bool validate_ramsey33(const Graph& g, const Ramsey33Witness& w) {
    std::vector<int> m = vs_members(w.vertices);
    if (m.size() != 3) return false;
    int edges = g.has_edge(m[0], m[1]) + g.has_edge(m[0], m[2]) + g.has_edge(m[1], m[2]);
    return w.kind == Ramsey33Witness::Kind::Triangle ? edges == 3 : edges == 0;
}

}  // namespace qc
