#include "qc/recolor.hpp"

#include <algorithm>
#include <iostream>
#include <string>

namespace qc {

WitnessOutcome WitnessOutcome::clique_of(VertexSet s) {
    WitnessOutcome w;
    w.kind = Kind::Clique;
    w.clique = s;
    return w;
}

WitnessOutcome WitnessOutcome::recoloring_of(Coloring c) {
    WitnessOutcome w;
    w.kind = Kind::Recoloring;
    w.coloring = std::move(c);
    return w;
}

bool validate_outcome(const Graph& g, const Coloring& input, const WitnessOutcome& w,
                      int min_clique) {
    if (w.kind == WitnessOutcome::Kind::Clique) {
        if (w.clique & ~g.vertices()) return false;
        std::vector<int> m = vs_members(w.clique);
        if (static_cast<int>(m.size()) < min_clique) return false;
        for (std::size_t a = 0; a < m.size(); ++a)
            for (std::size_t b = a + 1; b < m.size(); ++b)
                if (!g.has_edge(m[a], m[b])) return false;
        return true;
    }
    return is_valid_coloring(g, w.coloring) && w.coloring.num_colors < input.num_colors;
}

namespace {

[[noreturn]] void abort_with_dump(const Graph& g, const Coloring& input, const std::string& why) {
    std::cerr << "witness engine internal failure: " << why << "\n  graph6: " << to_graph6(g)
              << "\n  coloring:";
    for (int c : input.colors) std::cerr << ' ' << c;
    std::cerr << '\n';
    throw std::logic_error("witness engine produced no verifiable outcome: " + why);
}

void validate_input(const Graph& g, const Coloring& col, int k, int k_min) {
    if (k < k_min) throw contract_error("k must be at least " + std::to_string(k_min));
    if (g.order() < 2 * k + 1) throw contract_error("need n >= 2k+1");
    if (!is_valid_coloring(g, col)) throw contract_error("coloring is not proper/contiguous");
    if (col.num_colors != g.order() - k)
        throw contract_error("coloring must use exactly n-k colors");
}

struct Analysis {
    std::vector<VertexSet> classes;  // index c-1
    std::vector<int> singles;        // singleton colors, ascending
    std::vector<int> multis;         // non-singleton colors, ascending
    VertexSet q_set = 0;
    std::vector<int> universal;      // per color c-1; singleton classes: the vertex
};

Coloring recolor_class_to(const Coloring& col, VertexSet cls, const std::vector<int>& target) {
    Coloring out = col;
    int i = 0;
    for (VertexSet t = cls; t; t &= t - 1) out.colors[static_cast<std::size_t>(vs_first(t))] = target[static_cast<std::size_t>(i++)];
    return out.normalized();
}

// Merge-or-classify. Two non-adjacent singletons merge into one class; a class
// where no vertex sees all of Q dissolves into Q's colors (each vertex takes
// the color of a Q vertex it misses). Either way the input color count drops.
std::variant<Analysis, WitnessOutcome> analyze(const Graph& g, const Coloring& col) {
    Analysis a;
    a.classes.assign(static_cast<std::size_t>(col.num_colors), 0);
    for (int v = 0; v < g.order(); ++v)
        a.classes[static_cast<std::size_t>(col.colors[static_cast<std::size_t>(v)] - 1)] |= vbit(v);
    for (int c = 1; c <= col.num_colors; ++c) {
        VertexSet cls = a.classes[static_cast<std::size_t>(c - 1)];
        if (vs_size(cls) == 1) {
            a.singles.push_back(c);
            a.q_set |= cls;
        } else {
            a.multis.push_back(c);
        }
    }
    for (std::size_t i = 0; i < a.singles.size(); ++i)
        for (std::size_t j = i + 1; j < a.singles.size(); ++j) {
            int x = vs_first(a.classes[static_cast<std::size_t>(a.singles[i] - 1)]);
            int y = vs_first(a.classes[static_cast<std::size_t>(a.singles[j] - 1)]);
            if (!g.has_edge(x, y))
                return WitnessOutcome::recoloring_of(
                    recolor_class_to(col, vbit(y), {a.singles[i]}));
        }
    a.universal.assign(static_cast<std::size_t>(col.num_colors), -1);
    for (int c : a.singles)
        a.universal[static_cast<std::size_t>(c - 1)] = vs_first(a.classes[static_cast<std::size_t>(c - 1)]);
    for (int c : a.multis) {
        VertexSet cls = a.classes[static_cast<std::size_t>(c - 1)];
        int chosen = -1;
        for (VertexSet t = cls; t; t &= t - 1) {
            int w = vs_first(t);
            if ((g.neighbors(w) & a.q_set) == a.q_set) {
                chosen = w;
                break;
            }
        }
        if (chosen < 0) {
            std::vector<int> target;
            for (VertexSet t = cls; t; t &= t - 1) {
                int w = vs_first(t);
                VertexSet missed = a.q_set & ~g.neighbors(w);
                target.push_back(col.colors[static_cast<std::size_t>(vs_first(missed))]);
            }
            return WitnessOutcome::recoloring_of(recolor_class_to(col, cls, target));
        }
        a.universal[static_cast<std::size_t>(c - 1)] = chosen;
    }
    return a;
}

std::optional<std::pair<int, int>> first_edge_within(const Graph& g, const std::vector<int>& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (g.has_edge(m[i], m[j])) return std::make_pair(m[i], m[j]);
    return std::nullopt;
}

std::optional<VertexSet> first_triangle_within(const Graph& g, const std::vector<int>& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            if (!g.has_edge(m[i], m[j])) continue;
            for (std::size_t h = j + 1; h < m.size(); ++h)
                if (g.has_edge(m[i], m[h]) && g.has_edge(m[j], m[h]))
                    return vbit(m[i]) | vbit(m[j]) | vbit(m[h]);
        }
    return std::nullopt;
}

std::optional<VertexSet> first_independent_triple(const Graph& g, VertexSet inside) {
    std::vector<int> m = vs_members(inside);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            if (g.has_edge(m[i], m[j])) continue;
            for (std::size_t h = j + 1; h < m.size(); ++h)
                if (!g.has_edge(m[i], m[h]) && !g.has_edge(m[j], m[h]))
                    return vbit(m[i]) | vbit(m[j]) | vbit(m[h]);
        }
    return std::nullopt;
}

std::vector<int> s_vertices(const Analysis& a) {
    std::vector<int> s;
    for (int c : a.multis) s.push_back(a.universal[static_cast<std::size_t>(c - 1)]);
    return s;
}

WitnessOutcome base_core(const Graph& g, const Coloring& col, int k);
WitnessOutcome basic_core(const Graph& g, const Coloring& col, int k);
WitnessOutcome sharp_core(const Graph& g, const Coloring& col, int k);

// Translate colors of a subgraph coloring back to parent labels and append the
// removed set as one fresh class.
WitnessOutcome lift_improvement(const Graph& g, const InducedSubgraph& sub,
                                const Coloring& sub_col, VertexSet removed) {
    Coloring out;
    out.colors.assign(static_cast<std::size_t>(g.order()), 0);
    for (std::size_t i = 0; i < sub.to_parent.size(); ++i)
        out.colors[static_cast<std::size_t>(sub.to_parent[i])] = sub_col.colors[i];
    for (VertexSet t = removed; t; t &= t - 1)
        out.colors[static_cast<std::size_t>(vs_first(t))] = sub_col.num_colors + 1;
    out.num_colors = sub_col.num_colors + 1;
    return WitnessOutcome::recoloring_of(out.normalized());
}

VertexSet lift_clique(const InducedSubgraph& sub, VertexSet sub_clique) {
    VertexSet out = 0;
    for (VertexSet t = sub_clique; t; t &= t - 1)
        out |= vbit(sub.to_parent[static_cast<std::size_t>(vs_first(t))]);
    return out;
}

// Remove an independent set, re-solve the remainder exactly, and either lift
// the improvement or recurse on the reduced instance with its exact coloring
// (which then can only produce a clique).
WitnessOutcome remove_and_recurse(const Graph& g, const Coloring& col, int k, VertexSet removed) {
    int n = g.order();
    InducedSubgraph sub = induced(g, g.vertices() & ~removed);
    auto [chi2, gamma2] = chromatic_number(sub.graph);
    if (chi2 <= n - k - 2) return lift_improvement(g, sub, gamma2, removed);
    int n2 = sub.graph.order();
    int k2 = n2 - chi2;
    if (k2 < 0 || k2 > k - static_cast<int>(vs_size(removed)) + 1)
        abort_with_dump(g, col, "reduced instance out of range");
    WitnessOutcome r;
    if (k2 == 0) {
        r = WitnessOutcome::clique_of(sub.graph.vertices());
    } else if (k2 <= 2) {
        r = base_core(sub.graph, gamma2, k2);
    } else if (k2 <= 4) {
        r = basic_core(sub.graph, gamma2, k2);
    } else {
        r = sharp_core(sub.graph, gamma2, k2);
    }
    if (r.kind != WitnessOutcome::Kind::Clique)
        abort_with_dump(g, col, "engine improved an exact coloring");
    return WitnessOutcome::clique_of(lift_clique(sub, r.clique));
}

// k <= 2: the singleton clique plus one universal vertex already has size
// s+1 >= m-2k+1, which meets the minimum clique over m-vertex graphs with
// chromatic number m-k at these k.
WitnessOutcome base_core(const Graph& g, const Coloring& col, int k) {
    auto ar = analyze(g, col);
    if (auto* w = std::get_if<WitnessOutcome>(&ar)) return *w;
    Analysis& a = std::get<Analysis>(ar);
    (void)k;
    if (a.multis.empty()) return WitnessOutcome::clique_of(g.vertices());
    int v = a.universal[static_cast<std::size_t>(a.multis.front() - 1)];
    return WitnessOutcome::clique_of(a.q_set | vbit(v));
}

// Non-edges of the leftover graph after removing an independent S: two
// disjoint non-edges or an independent triple merge classes (a strictly
// better coloring); otherwise all non-edges share a vertex whose deletion
// leaves a complete graph.
WitnessOutcome leftover_core(const Graph& g, const Coloring& col, VertexSet s_removed) {
    std::vector<int> rest = vs_members(g.vertices() & ~s_removed);
    std::vector<std::pair<int, int>> nonedges;
    for (std::size_t i = 0; i < rest.size(); ++i)
        for (std::size_t j = i + 1; j < rest.size(); ++j)
            if (!g.has_edge(rest[i], rest[j])) nonedges.emplace_back(rest[i], rest[j]);

    auto improved_pairs = [&](std::vector<VertexSet> groups) {
        Coloring out;
        out.colors.assign(static_cast<std::size_t>(g.order()), 0);
        int next = 0;
        groups.push_back(s_removed);
        for (VertexSet grp : groups) {
            ++next;
            for (VertexSet t = grp; t; t &= t - 1)
                out.colors[static_cast<std::size_t>(vs_first(t))] = next;
        }
        for (int v : rest)
            if (out.colors[static_cast<std::size_t>(v)] == 0) out.colors[static_cast<std::size_t>(v)] = ++next;
        out.num_colors = next;
        return WitnessOutcome::recoloring_of(out.normalized());
    };

    if (nonedges.empty()) return WitnessOutcome::clique_of(g.vertices() & ~s_removed);
    auto [x, y] = nonedges.front();
    for (std::size_t i = 1; i < nonedges.size(); ++i) {
        auto [z, w] = nonedges[i];
        if (z != x && z != y && w != x && w != y)
            return improved_pairs({vbit(x) | vbit(y), vbit(z) | vbit(w)});
    }
    bool all_x = true, all_y = true;
    for (auto [z, w] : nonedges) {
        if (z != x && w != x) all_x = false;
        if (z != y && w != y) all_y = false;
    }
    if (all_x) return WitnessOutcome::clique_of((g.vertices() & ~s_removed) & ~vbit(x));
    if (all_y) return WitnessOutcome::clique_of((g.vertices() & ~s_removed) & ~vbit(y));
    // pairwise-intersecting, no common vertex: the non-edges form a triangle,
    // i.e. an independent triple.
    int z = -1;
    for (auto [p, q] : nonedges) {
        if (p == x && q != y) z = q;
        if (q == x && p != y) z = p;
    }
    if (z < 0) abort_with_dump(g, col, "intersecting non-edge family without a triangle");
    return improved_pairs({vbit(x) | vbit(y) | vbit(z)});
}

WitnessOutcome basic_core(const Graph& g, const Coloring& col, int k) {
    int n = g.order();
    auto ar = analyze(g, col);
    if (auto* w = std::get_if<WitnessOutcome>(&ar)) return *w;
    Analysis& a = std::get<Analysis>(ar);
    int s = static_cast<int>(a.singles.size());
    if (s >= n - 2 * k + 1) {
        if (a.multis.empty()) return WitnessOutcome::clique_of(g.vertices());
        int v = a.universal[static_cast<std::size_t>(a.multis.front() - 1)];
        return WitnessOutcome::clique_of(a.q_set | vbit(v));
    }
    if (s != n - 2 * k) abort_with_dump(g, col, "singleton count below n-2k");
    std::vector<int> sv = s_vertices(a);
    if (auto e = first_edge_within(g, sv))
        return WitnessOutcome::clique_of(a.q_set | vbit(e->first) | vbit(e->second));
    VertexSet s_mask = 0;
    for (int v : sv) s_mask |= vbit(v);
    return leftover_core(g, col, s_mask);
}

// ---- the five-doubleton case analysis ----

BipartiteListGraph pattern_bipartite(const C5Pattern& p) {
    BipartiteListGraph b;
    b.left_count = 5;
    b.right_count = p.l;
    b.adj.assign(5, 0);
    for (int i = 0; i < 5; ++i) b.adj[static_cast<std::size_t>(i)] = p.lists[static_cast<std::size_t>(i)];
    return b;
}

// u assignments done; pick the (unique) partner colored 3, give its S-partner
// color 3 and alternate 1,2 around the rest of the cycle.
CaseTreeColoring finish_tree_coloring(std::array<int, 5> u_colors) {
    CaseTreeColoring out;
    out.u_colors = u_colors;
    int k3 = -1;
    for (int i = 0; i < 5; ++i)
        if (u_colors[static_cast<std::size_t>(i)] == 3) k3 = i;
    if (k3 < 0) throw std::logic_error("no partner carries color 3");
    out.v_colors[static_cast<std::size_t>(k3)] = 3;
    for (int step = 1; step <= 4; ++step)
        out.v_colors[static_cast<std::size_t>((k3 + step) % 5)] = (step % 2 == 1) ? 1 : 2;
    return out;
}

// Fill the (exactly two) unassigned partners with colors 3 and 4 in index order.
CaseTreeColoring finish_with_34(std::array<int, 5> u_colors) {
    int give = 3;
    for (int i = 0; i < 5; ++i)
        if (u_colors[static_cast<std::size_t>(i)] == 0) u_colors[static_cast<std::size_t>(i)] = give++;
    if (give != 5) throw std::logic_error("expected exactly two unassigned partners");
    return finish_tree_coloring(u_colors);
}

CaseTreeResult tree_l1(const C5Pattern& p) {
    std::vector<std::pair<int, int>> nonedges;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (!p.u_graph.has_edge(i, j)) nonedges.emplace_back(i, j);
    for (std::size_t i = 0; i < nonedges.size(); ++i)
        for (std::size_t j = i + 1; j < nonedges.size(); ++j) {
            auto [a, b] = nonedges[i];
            auto [c, d] = nonedges[j];
            if (c == a || c == b || d == a || d == b) continue;
            std::array<int, 5> u{};
            u[static_cast<std::size_t>(a)] = u[static_cast<std::size_t>(b)] = 5;  // the single list color
            u[static_cast<std::size_t>(c)] = u[static_cast<std::size_t>(d)] = 4;
            for (int t = 0; t < 5; ++t)
                if (u[static_cast<std::size_t>(t)] == 0) u[static_cast<std::size_t>(t)] = 3;
            return finish_tree_coloring(u);
        }
    // no two disjoint non-edges: the complement is a star (or empty)
    int center = 0;
    if (!nonedges.empty()) {
        auto [x, y] = nonedges.front();
        bool all_x = true;
        for (auto [a, b] : nonedges)
            if (a != x && b != x) all_x = false;
        if (all_x) {
            center = x;
        } else {
            bool all_y = true;
            for (auto [a, b] : nonedges)
                if (a != y && b != y) all_y = false;
            if (!all_y) throw contract_error("partner complement must be triangle-free");
            center = y;
        }
    }
    return CaseTreeFallback{vs_below(5) & ~vbit(center), 1};
}

CaseTreeResult tree_l2(const C5Pattern& p) {
    auto others_of = [&](int s, int t) {
        std::vector<int> o;
        for (int i = 0; i < 5; ++i)
            if (i != s && i != t) o.push_back(i);
        return o;
    };
    auto list = [&](int i) { return p.lists[static_cast<std::size_t>(i)]; };

    std::optional<std::pair<int, int>> nonedge;
    for (int i = 0; i < 5 && !nonedge; ++i)
        for (int j = i + 1; j < 5 && !nonedge; ++j)
            if (!p.u_graph.has_edge(i, j)) nonedge = std::make_pair(i, j);
    if (!nonedge) return CaseTreeFallback{vs_below(5), 3};  // whole block is a clique

    auto [s, t] = *nonedge;
    if (list(s) > list(t)) std::swap(s, t);
    std::uint64_t ls = list(s), lt = list(t);
    std::vector<int> others = others_of(s, t);

    // two vertices with a shared allowed color and a leftover vertex holding
    // the other color; the remaining pair takes 3 and 4
    auto pair_plus = [&](int pa, int pb, int shared, int single, int single_color) {
        if (single < 0) throw std::logic_error("no partner holds the required color");
        std::array<int, 5> u{};
        u[static_cast<std::size_t>(pa)] = u[static_cast<std::size_t>(pb)] = 5 + shared;
        u[static_cast<std::size_t>(single)] = 5 + single_color;
        return finish_with_34(u);
    };
    auto first_with = [&](std::uint64_t bit) -> int {
        for (int o : others)
            if (list(o) & bit) return o;
        return -1;
    };

    if (ls == 1 && lt == 1) return pair_plus(s, t, 0, first_with(2), 1);
    if (ls == 2 && lt == 2) return pair_plus(s, t, 1, first_with(1), 0);
    if (ls == 3 && lt == 3) {
        int o = first_with(1);
        if (o >= 0) return pair_plus(s, t, 1, o, 0);
        return pair_plus(s, t, 0, first_with(2), 1);
    }

    // a singleton-list vertex against a two-list or opposite-list vertex
    auto foursome_branch = [&](std::vector<int> four, int color_bit_index, int solo,
                               int solo_color) -> CaseTreeResult {
        std::sort(four.begin(), four.end());
        for (std::size_t i = 0; i < four.size(); ++i)
            for (std::size_t j = i + 1; j < four.size(); ++j)
                if (!p.u_graph.has_edge(four[i], four[j]))
                    return pair_plus(four[i], four[j], color_bit_index, solo, solo_color);
        VertexSet mem = 0;
        for (int f : four) mem |= vbit(f);
        return CaseTreeFallback{mem, std::uint64_t{1} << color_bit_index};
    };

    if (ls == 1 && lt == 3) {
        int o = first_with(2);
        if (o >= 0) return pair_plus(s, t, 0, o, 1);
        std::vector<int> four = others;
        four.push_back(s);
        return foursome_branch(four, 0, t, 1);
    }
    if (ls == 2 && lt == 3) {
        int o = first_with(1);
        if (o >= 0) return pair_plus(s, t, 1, o, 0);
        std::vector<int> four = others;
        four.push_back(s);
        return foursome_branch(four, 1, t, 0);
    }
    // ls == 1, lt == 2: the non-edge joins the two singleton list kinds
    std::uint64_t uoth = 0;
    for (int o : others) uoth |= list(o);
    if (uoth == 3) {
        std::array<int, 5> u{};
        u[static_cast<std::size_t>(s)] = u[static_cast<std::size_t>(t)] = 4;
        int oa = first_with(1);
        int ob = -1;
        for (int o : others)
            if (o != oa && (list(o) & 2)) {
                ob = o;
                break;
            }
        if (ob < 0) {  // the only b-holder also holds a; re-pick
            ob = first_with(2);
            oa = -1;
            for (int o : others)
                if (o != ob && (list(o) & 1)) {
                    oa = o;
                    break;
                }
        }
        u[static_cast<std::size_t>(oa)] = 5;
        u[static_cast<std::size_t>(ob)] = 6;
        for (int o : others)
            if (o != oa && o != ob) u[static_cast<std::size_t>(o)] = 3;
        return finish_tree_coloring(u);
    }
    if (uoth == 1) {
        std::vector<int> four = others;
        four.push_back(s);
        return foursome_branch(four, 0, t, 1);
    }
    std::vector<int> four = others;  // uoth == 2
    four.push_back(t);
    return foursome_branch(four, 1, s, 0);
}

CaseTreeResult tree_l3_up(const C5Pattern& p) {
    BipartiteListGraph b = pattern_bipartite(p);
    int l = p.l;
    // a 3-subset of colors seen by at least three partners always exists
    std::array<int, 3> lp{};
    bool found = false;
    for (int t1 = 0; t1 < l && !found; ++t1)
        for (int t2 = t1 + 1; t2 < l && !found; ++t2)
            for (int t3 = t2 + 1; t3 < l && !found; ++t3) {
                std::uint64_t mask = (std::uint64_t{1} << t1) | (std::uint64_t{1} << t2) |
                                     (std::uint64_t{1} << t3);
                if (vs_size(bipartite_neighborhood(b, Side::Right, mask)) >= 3) {
                    lp = {t1, t2, t3};
                    found = true;
                }
            }
    if (!found) throw contract_error("no 3-subset of colors with three partners");
    std::uint64_t lp_mask = (std::uint64_t{1} << lp[0]) | (std::uint64_t{1} << lp[1]) |
                            (std::uint64_t{1} << lp[2]);

    auto block = hall_violator(b, Side::Right, lp_mask);
    if (!block) {
        // a matching covering the three colors; the two leftover partners
        // take 3 and 4
        BipartiteListGraph restricted = b;
        for (auto& row : restricted.adj) row &= lp_mask;
        std::array<int, 5> u{};
        for (auto [left, right] : max_matching(restricted)) u[static_cast<std::size_t>(left)] = 5 + right;
        return finish_with_34(u);
    }
    if (vs_size(block->block) != 2 || vs_size(block->neighborhood) != 1)
        throw contract_error("unexpected Hall block shape");
    int uj = vs_first(block->neighborhood);
    int z = -1;
    for (int t : lp)
        if (!vs_has(block->block, t)) z = t;
    int x = vs_first(block->block);

    std::uint64_t nlp = bipartite_neighborhood(b, Side::Right, lp_mask);
    if (vs_size(nlp) <= 4) {
        std::array<int, 5> u{};
        u[static_cast<std::size_t>(uj)] = 5 + x;
        std::uint64_t zn = bipartite_neighborhood(b, Side::Right, std::uint64_t{1} << z) & ~vbit(uj);
        if (!zn) throw std::logic_error("third block color lost its partners");
        u[static_cast<std::size_t>(vs_first(zn))] = 5 + z;
        int uq = vs_first(vs_below(5) & ~nlp);
        u[static_cast<std::size_t>(uq)] = 5 + vs_first(p.lists[static_cast<std::size_t>(uq)]);
        return finish_with_34(u);
    }
    std::vector<int> others;
    for (int i = 0; i < 5; ++i)
        if (i != uj) others.push_back(i);
    for (std::size_t i = 0; i < others.size(); ++i)
        for (std::size_t j = i + 1; j < others.size(); ++j)
            if (!p.u_graph.has_edge(others[i], others[j])) {
                std::array<int, 5> u{};
                u[static_cast<std::size_t>(others[i])] = u[static_cast<std::size_t>(others[j])] = 5 + z;
                u[static_cast<std::size_t>(uj)] = 5 + x;
                return finish_with_34(u);
            }
    // the four partners outside the block's neighbor form a clique
    for (int o : others)
        for (std::uint64_t w = p.lists[static_cast<std::size_t>(o)] & ~(std::uint64_t{1} << z); w; w &= w - 1) {
            std::array<int, 5> u{};
            u[static_cast<std::size_t>(o)] = 5 + vs_first(w);
            int up = -1;
            for (int q : others)
                if (q != o) {
                    up = q;
                    break;
                }
            u[static_cast<std::size_t>(up)] = 5 + z;
            u[static_cast<std::size_t>(uj)] = 5 + x;
            return finish_with_34(u);
        }
    VertexSet mem = 0;
    for (int o : others) mem |= vbit(o);
    return CaseTreeFallback{mem, std::uint64_t{1} << z};
}

}  // namespace

CaseTreeResult c5_case_tree(const C5Pattern& p) {
    if (p.l < 1 || p.l > 64) throw contract_error("list union must be nonempty");
    if (p.u_graph.order() != 5) throw contract_error("pattern needs five partners");
    std::uint64_t all = 0;
    for (int i = 0; i < 5; ++i) {
        if (p.lists[static_cast<std::size_t>(i)] == 0) throw contract_error("pattern lists must be nonempty");
        if (p.lists[static_cast<std::size_t>(i)] & ~vs_below(p.l))
            throw contract_error("pattern list outside the color range");
        all |= p.lists[static_cast<std::size_t>(i)];
    }
    if (all != vs_below(p.l)) throw contract_error("pattern lists must cover every color");

    if (p.l == 1) return tree_l1(p);
    if (p.l == 2) return tree_l2(p);
    return tree_l3_up(p);
}

C5Embedding embed_c5_pattern(const C5Pattern& p, int q_size) {
    if (q_size < p.l) throw contract_error("need q_size >= l to host the list colors");
    if (q_size + 10 > max_vertices) throw capacity_error("embedding exceeds 64 vertices");
    C5Embedding emb;
    emb.q_size = q_size;
    Graph g(q_size + 10);
    auto qv = [&](int j) { return j; };
    auto vv = [&](int i) { return q_size + i; };
    auto uv = [&](int i) { return q_size + 5 + i; };
    for (int a = 0; a < q_size; ++a)
        for (int b = a + 1; b < q_size; ++b) g.add_edge(qv(a), qv(b));
    for (int i = 0; i < 5; ++i) {
        g.add_edge(vv(i), vv((i + 1) % 5));
        for (int j = 0; j < q_size; ++j) g.add_edge(vv(i), qv(j));
        for (int j = 0; j < q_size; ++j)
            if (j >= p.l || !(p.lists[static_cast<std::size_t>(i)] >> j & 1)) g.add_edge(uv(i), qv(j));
        for (int j = 0; j < 5; ++j)
            if (i != j) g.add_edge(vv(i), uv(j));
        for (int j = i + 1; j < 5; ++j)
            if (p.u_graph.has_edge(i, j)) g.add_edge(uv(i), uv(j));
    }
    Coloring col;
    col.colors.assign(static_cast<std::size_t>(q_size + 10), 0);
    for (int j = 0; j < q_size; ++j) col.colors[static_cast<std::size_t>(qv(j))] = 6 + j;
    for (int i = 0; i < 5; ++i) {
        col.colors[static_cast<std::size_t>(vv(i))] = i + 1;
        col.colors[static_cast<std::size_t>(uv(i))] = i + 1;
    }
    col.num_colors = q_size + 5;
    emb.g = std::move(g);
    emb.coloring = std::move(col);
    return emb;
}

namespace {

// Rotation of a structure whose S induces a 5-cycle: pairs reordered so the
// S-members walk the cycle starting at the lowest vertex toward its lower
// neighbor. abstract_colors lists the colors of the list union, ascending.
struct RotatedBlock {
    std::array<Doubleton, 5> pairs{};
    std::array<int, 5> pair_colors{};  // original color of each rotated class
    std::vector<int> abstract_colors;
    C5Pattern pattern;
};

std::optional<RotatedBlock> rotate_block(const ColoringStructure& st) {
    if (st.doubletons.size() != 5 || st.triple_class.has_value()) return std::nullopt;
    const Graph& g = st.g;
    std::vector<int> sv = vs_members(st.s_set);
    for (int v : sv)
        if (vs_size(g.neighbors(v) & st.s_set) != 2) return std::nullopt;

    RotatedBlock rb;
    std::array<int, 5> order{};
    order[0] = sv.front();
    VertexSet nb = g.neighbors(order[0]) & st.s_set;
    order[1] = vs_first(nb);
    for (int i = 2; i < 5; ++i) {
        VertexSet next = g.neighbors(order[i - 1]) & st.s_set & ~vbit(order[i - 2]) & ~vbit(order[i - 1]);
        order[static_cast<std::size_t>(i)] = vs_first(next);
    }
    if (!g.has_edge(order[4], order[0])) return std::nullopt;

    for (int b : vs_members(st.l_union)) rb.abstract_colors.push_back(b + 1);
    for (std::size_t i = 0; i < 5; ++i) {
        auto it = std::find_if(st.doubletons.begin(), st.doubletons.end(),
                               [&](const Doubleton& d) { return d.v == order[i]; });
        rb.pairs[i] = *it;
        rb.pair_colors[i] = st.coloring.colors[static_cast<std::size_t>(it->v)];
    }
    rb.pattern.l = static_cast<int>(rb.abstract_colors.size());
    rb.pattern.u_graph = Graph(5);
    for (int i = 0; i < 5; ++i) {
        std::uint64_t real = st.lists.lists[static_cast<std::size_t>(rb.pairs[static_cast<std::size_t>(i)].u)];
        std::uint64_t abs = 0;
        for (std::size_t t = 0; t < rb.abstract_colors.size(); ++t)
            if (real >> (rb.abstract_colors[t] - 1) & 1) abs |= std::uint64_t{1} << t;
        rb.pattern.lists[static_cast<std::size_t>(i)] = abs;
        for (int j = i + 1; j < 5; ++j)
            if (g.has_edge(rb.pairs[static_cast<std::size_t>(i)].u, rb.pairs[static_cast<std::size_t>(j)].u))
                rb.pattern.u_graph.add_edge(i, j);
    }
    return rb;
}

// tree code -> original color id: 1..4 are the first four rotated pair colors,
// 5+t the t-th list color. Pair five's color is the one that disappears.
int decode_color(const RotatedBlock& rb, int code) {
    if (code <= 4) return rb.pair_colors[static_cast<std::size_t>(code - 1)];
    return rb.abstract_colors[static_cast<std::size_t>(code - 5)];
}

Coloring assemble_block_recoloring(const ColoringStructure& st, const RotatedBlock& rb,
                                   const CaseTreeColoring& tc) {
    Coloring out = st.coloring;
    for (std::size_t i = 0; i < 5; ++i) {
        out.colors[static_cast<std::size_t>(rb.pairs[i].v)] = decode_color(rb, tc.v_colors[i]);
        out.colors[static_cast<std::size_t>(rb.pairs[i].u)] = decode_color(rb, tc.u_colors[i]);
    }
    return out.normalized();
}

VertexSet fallback_clique(const ColoringStructure& st, const RotatedBlock& rb,
                          const CaseTreeFallback& fb) {
    VertexSet clique = st.q_set;
    for (std::uint64_t t = fb.blocked_colors; t; t &= t - 1) {
        int color = rb.abstract_colors[static_cast<std::size_t>(vs_first(t))];
        for (VertexSet q = st.q_set; q; q &= q - 1)
            if (st.coloring.colors[static_cast<std::size_t>(vs_first(q))] == color) clique &= ~vbit(vs_first(q));
    }
    for (VertexSet t = fb.u_members; t; t &= t - 1)
        clique |= vbit(rb.pairs[static_cast<std::size_t>(vs_first(t))].u);
    return clique;
}

// The exact oracle for the restricted strategy on the structure's own block:
// S members choose among the first three rotated pair colors, partners among
// pair colors three/four and their own lists.
std::optional<Coloring> restricted_block_oracle(const ColoringStructure& st,
                                                const RotatedBlock& rb) {
    InducedSubgraph block = induced(st.g, st.s_set | st.u_set);
    ListAssignment lists;
    lists.num_colors = st.coloring.num_colors;
    lists.lists.assign(block.to_parent.size(), 0);
    std::uint64_t s_allowed = 0;
    for (int c = 1; c <= 3; ++c)
        s_allowed |= std::uint64_t{1} << (decode_color(rb, c) - 1);
    for (std::size_t i = 0; i < block.to_parent.size(); ++i) {
        int v = block.to_parent[i];
        if (vs_has(st.s_set, v)) {
            lists.lists[i] = s_allowed;
        } else {
            lists.lists[i] = st.lists.lists[static_cast<std::size_t>(v)] |
                             (std::uint64_t{1} << (decode_color(rb, 3) - 1)) |
                             (std::uint64_t{1} << (decode_color(rb, 4) - 1));
        }
    }
    return list_colorable(block.graph, lists);
}

WitnessOutcome sharp_core(const Graph& g, const Coloring& col, int k) {
    int n = g.order();
    auto ar = analyze(g, col);
    if (auto* w = std::get_if<WitnessOutcome>(&ar)) return *w;
    Analysis& a = std::get<Analysis>(ar);
    int s = static_cast<int>(a.singles.size());

    if (s >= n - 2 * k + 2) {
        if (a.multis.empty()) return WitnessOutcome::clique_of(g.vertices());
        int v = a.universal[static_cast<std::size_t>(a.multis.front() - 1)];
        return WitnessOutcome::clique_of(a.q_set | vbit(v));
    }

    std::vector<int> sv = s_vertices(a);
    if (s == n - 2 * k + 1) {
        // k-2 doubletons and one 3-element class
        if (auto e = first_edge_within(g, sv))
            return WitnessOutcome::clique_of(a.q_set | vbit(e->first) | vbit(e->second));
        VertexSet s_mask = 0;
        for (int v : sv) s_mask |= vbit(v);
        InducedSubgraph sub = induced(g, g.vertices() & ~s_mask);
        auto [chi1, gamma1] = chromatic_number(sub.graph);
        if (chi1 <= n - k - 2) return lift_improvement(g, sub, gamma1, s_mask);
        int k1 = sub.graph.order() - chi1;
        if (k1 < 1 || k1 > 2) abort_with_dump(g, col, "leftover of the triple case out of range");
        WitnessOutcome r = base_core(sub.graph, gamma1, k1);
        if (r.kind != WitnessOutcome::Kind::Clique)
            abort_with_dump(g, col, "engine improved an exact coloring");
        return WitnessOutcome::clique_of(lift_clique(sub, r.clique));
    }

    if (s != n - 2 * k) abort_with_dump(g, col, "singleton count below n-2k");

    // k doubletons; a triangle among the chosen universal vertices finishes
    if (auto tri = first_triangle_within(g, sv)) return WitnessOutcome::clique_of(a.q_set | *tri);

    VertexSet s_mask = 0;
    for (int v : sv) s_mask |= vbit(v);
    if (k >= 6) {
        Ramsey33Witness rw = ramsey33_witness(g, s_mask);
        if (rw.kind != Ramsey33Witness::Kind::IndependentTriple)
            abort_with_dump(g, col, "triangle appeared after the triangle scan");
        return remove_and_recurse(g, col, k, rw.vertices);
    }

    // k = 5: S is triangle-free on five vertices. An independent triple
    // anywhere in the block leaves by removal; otherwise S induces a 5-cycle
    // and the list case analysis runs.
    VertexSet u_mask = 0;
    std::vector<Doubleton> pairs;
    ListAssignment lists;
    lists.num_colors = col.num_colors;
    lists.lists.assign(static_cast<std::size_t>(n), 0);
    std::uint64_t l_union = 0;
    for (int c : a.multis) {
        VertexSet cls = a.classes[static_cast<std::size_t>(c - 1)];
        int v = a.universal[static_cast<std::size_t>(c - 1)];
        int u = vs_first(cls & ~vbit(v));
        pairs.push_back({u, v});
        u_mask |= vbit(u);
        std::uint64_t li = 0;
        for (VertexSet q = a.q_set & ~g.neighbors(u); q; q &= q - 1)
            li |= std::uint64_t{1} << (col.colors[static_cast<std::size_t>(vs_first(q))] - 1);
        lists.lists[static_cast<std::size_t>(u)] = li;
        l_union |= li;
    }

    if (auto tri = first_independent_triple(g, s_mask | u_mask))
        return remove_and_recurse(g, col, k, *tri);

    for (const Doubleton& d : pairs)
        if (lists.lists[static_cast<std::size_t>(d.u)] == 0) {
            // the partner sees all of Q; together with S it spans six vertices
            Ramsey33Witness rw = ramsey33_witness(g, s_mask | vbit(d.u));
            if (rw.kind != Ramsey33Witness::Kind::Triangle)
                abort_with_dump(g, col, "independent triple survived the block scan");
            return WitnessOutcome::clique_of(a.q_set | rw.vertices);
        }

    ColoringStructure st;
    st.g = g;
    st.coloring = col;
    st.k = k;
    st.q_set = a.q_set;
    st.doubletons = pairs;
    st.s_set = s_mask;
    st.u_set = u_mask;
    st.lists = lists;
    st.l_union = l_union;
    auto rb = rotate_block(st);
    if (!rb) abort_with_dump(g, col, "five triangle-free doubletons without a 5-cycle");
    CaseTreeResult tr = c5_case_tree(rb->pattern);
    if (auto* tc = std::get_if<CaseTreeColoring>(&tr))
        return WitnessOutcome::recoloring_of(assemble_block_recoloring(st, *rb, *tc));
    return WitnessOutcome::clique_of(fallback_clique(st, *rb, std::get<CaseTreeFallback>(tr)));
}

WitnessOutcome finalize(const Graph& g, const Coloring& col, WitnessOutcome w, int min_clique) {
    if (!validate_outcome(g, col, w, w.kind == WitnessOutcome::Kind::Clique ? min_clique : 0))
        abort_with_dump(g, col, "outcome failed re-validation");
    return w;
}

}  // namespace

std::variant<ColoringStructure, WitnessOutcome> extract_structure(const Graph& g,
                                                                  const Coloring& coloring,
                                                                  int k) {
    validate_input(g, coloring, k, 1);
    int n = g.order();
    auto ar = analyze(g, coloring);
    if (auto* w = std::get_if<WitnessOutcome>(&ar))
        return finalize(g, coloring, *w, 0);
    Analysis& a = std::get<Analysis>(ar);
    int s = static_cast<int>(a.singles.size());
    if (s >= n - 2 * k + 2) {
        if (a.multis.empty()) return finalize(g, coloring, WitnessOutcome::clique_of(g.vertices()), 0);
        int v = a.universal[static_cast<std::size_t>(a.multis.front() - 1)];
        return finalize(g, coloring, WitnessOutcome::clique_of(a.q_set | vbit(v)), 0);
    }
    if (s != n - 2 * k && s != n - 2 * k + 1)
        abort_with_dump(g, coloring, "singleton count below n-2k");

    ColoringStructure st;
    st.g = g;
    st.coloring = coloring;
    st.k = k;
    st.q_set = a.q_set;
    st.lists.num_colors = coloring.num_colors;
    st.lists.lists.assign(static_cast<std::size_t>(n), 0);
    for (int c : a.multis) {
        VertexSet cls = a.classes[static_cast<std::size_t>(c - 1)];
        int v = a.universal[static_cast<std::size_t>(c - 1)];
        st.s_set |= vbit(v);
        if (vs_size(cls) == 2) {
            int u = vs_first(cls & ~vbit(v));
            st.doubletons.push_back({u, v});
            st.u_set |= vbit(u);
            std::uint64_t li = 0;
            for (VertexSet q = a.q_set & ~g.neighbors(u); q; q &= q - 1)
                li |= std::uint64_t{1} << (coloring.colors[static_cast<std::size_t>(vs_first(q))] - 1);
            st.lists.lists[static_cast<std::size_t>(u)] = li;
            st.l_union |= li;
        } else if (vs_size(cls) == 3) {
            if (st.triple_class) abort_with_dump(g, coloring, "two oversized classes");
            st.triple_class = cls;
        } else {
            abort_with_dump(g, coloring, "class larger than three");
        }
    }
    return st;
}

WitnessOutcome witness_basic(const Graph& g, const Coloring& coloring, int k) {
    validate_input(g, coloring, k, 3);
    return finalize(g, coloring, basic_core(g, coloring, k), g.order() - 2 * k + 2);
}

WitnessOutcome witness_sharp(const Graph& g, const Coloring& coloring, int k) {
    validate_input(g, coloring, k, 5);
    int min_size = k <= 6 ? g.order() - 2 * k + 3 : 0;
    return finalize(g, coloring, sharp_core(g, coloring, k), min_size);
}

std::optional<Coloring> recolor_doubletons(const ColoringStructure& st) {
    if (st.k != 5) throw contract_error("the block recoloring applies to k = 5");
    auto rb = rotate_block(st);
    if (!rb) throw contract_error("S must induce a 5-cycle over five doubletons");
    for (const Doubleton& d : st.doubletons)
        if (st.lists.lists[static_cast<std::size_t>(d.u)] == 0)
            throw contract_error("every partner list must be nonempty");

    CaseTreeResult tr = c5_case_tree(rb->pattern);
    std::optional<Coloring> oracle = restricted_block_oracle(st, *rb);
    bool tree_ok = std::holds_alternative<CaseTreeColoring>(tr);
    if (tree_ok != oracle.has_value())
        abort_with_dump(st.g, st.coloring, "case tree disagrees with the exact list solver");
    if (!tree_ok) return std::nullopt;

    // report the tree's coloring over the block, indexed by ascending vertex
    const auto& tc = std::get<CaseTreeColoring>(tr);
    InducedSubgraph block = induced(st.g, st.s_set | st.u_set);
    Coloring out;
    out.colors.assign(block.to_parent.size(), 0);
    for (std::size_t i = 0; i < 5; ++i) {
        const Doubleton& d = rb->pairs[i];
        auto idx_of = [&](int v) {
            return static_cast<std::size_t>(std::find(block.to_parent.begin(), block.to_parent.end(), v) -
                                            block.to_parent.begin());
        };
        out.colors[idx_of(d.v)] = decode_color(*rb, tc.v_colors[i]);
        out.colors[idx_of(d.u)] = decode_color(*rb, tc.u_colors[i]);
    }
    out = Coloring::of(std::move(out.colors));
    if (!out.is_proper(block.graph))
        abort_with_dump(st.g, st.coloring, "case tree produced an improper block coloring");
    return out;
}

}  // namespace qc
