#include "qc/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <random>
#include <stdexcept>
#include <string>

namespace qc {

std::uint64_t erdos_szekeres_bound(int k, int q) {
    if (k < 1 || q < 1) throw contract_error("Ramsey parameters must be positive");
    // C(k+q-2, q-1) multiplicatively; each prefix is itself a binomial, so the
    // division is exact.
    std::uint64_t top = static_cast<std::uint64_t>(k) + static_cast<std::uint64_t>(q) - 2;
    std::uint64_t r = std::min<std::uint64_t>(q - 1, top - (q - 1));
    std::uint64_t acc = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        std::uint64_t factor = top - r + i;
        if (acc > UINT64_MAX / factor) throw std::overflow_error("binomial exceeds 64 bits");
        acc = acc * factor / i;
    }
    return acc;
}

double independence_guarantee(int n, int q) {
    if (n < 1 || q < 2) throw contract_error("need n >= 1 and q >= 2");
    double fact = 1.0;
    for (int i = 2; i <= q - 1; ++i) fact *= i;
    return std::pow(fact * n, 1.0 / (q - 1)) - q;
}

namespace {

int alpha_within(const Graph& g, VertexSet avail) {
    InducedSubgraph sub = induced(g, avail);
    return independence_number(sub.graph).size;
}

// Lexicographically smallest maximum independent set: force vertices in
// ascending order whenever the remainder still reaches the target size.
VertexSet lex_min_mis(const Graph& g, VertexSet avail) {
    int need = alpha_within(g, avail);
    VertexSet chosen = 0;
    VertexSet cand = avail;
    for (int v = 0; v < g.order() && need > 0; ++v) {
        if (!vs_has(cand, v)) continue;
        VertexSet rest = cand & ~vbit(v) & ~g.neighbors(v);
        if (1 + alpha_within(g, rest) == need) {
            chosen |= vbit(v);
            cand = rest;
            --need;
        }
    }
    return chosen;
}

}  // namespace

Coloring greedy_mis_coloring(const Graph& g) {
    Coloring col;
    col.colors.assign(static_cast<std::size_t>(g.order()), 0);
    VertexSet remaining = g.vertices();
    int round = 0;
    while (remaining) {
        ++round;
        VertexSet cls = lex_min_mis(g, remaining);
        for (VertexSet t = cls; t; t &= t - 1)
            col.colors[static_cast<std::size_t>(vs_first(t))] = round;
        remaining &= ~cls;
    }
    col.num_colors = round;
    return col;
}

Graph random_bipartite(int n, std::uint64_t seed) {
    Graph g(n);
    std::mt19937_64 rng(seed);
    int half = n / 2;
    for (int u = 0; u < half; ++u)
        for (int v = half; v < n; ++v)
            if (rng() & 1) g.add_edge(u, v);
    return g;
}

Graph mycielski(const Graph& g) {
    int n = g.order();
    if (2 * n + 1 > max_vertices) throw capacity_error("Mycielskian exceeds 64 vertices");
    Graph out(2 * n + 1);
    for (int u = 0; u < n; ++u)
        for (VertexSet t = g.neighbors(u); t; t &= t - 1) {
            int v = vs_first(t);
            if (v > u) out.add_edge(u, v);
            out.add_edge(u + n, v);  // shadow of u sees u's neighbors
        }
    for (int u = 0; u < n; ++u) out.add_edge(u + n, 2 * n);
    return out;
}

Graph mycielski_prefix(int n) {
    if (n > 63) throw capacity_error("mycielski prefix supports up to 63 vertices");
    if (n < 2) return edgeless(std::max(n, 0));
    Graph g = path(2);
    while (g.order() < n) {
        if (2 * g.order() + 1 > max_vertices) {
            // shrink first so the next step lands in [n, 64]
            g = induced(g, vs_below((n + 1) / 2)).graph;
        }
        g = mycielski(g);
    }
    return induced(g, vs_below(n)).graph;
}

ScalingReport scaling_check(int q, ScalingFamily family, const std::vector<int>& sizes,
                            std::uint64_t seed) {
    if (q < 3) throw contract_error("scaling check needs q >= 3");
    std::vector<int> ns(sizes);
    std::sort(ns.begin(), ns.end());
    {
        std::vector<int> distinct(ns);
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        if (distinct.size() < 2)
            throw contract_error("need at least two distinct sizes to fit an exponent");
    }

    auto make = [&](int n) -> Graph {
        switch (family) {
            case ScalingFamily::RandomBipartite:
                return random_bipartite(n, seed ^ static_cast<std::uint64_t>(n) * 0x9e3779b97f4a7c15ull);
            case ScalingFamily::OddCycle:
                return cycle(n % 2 == 1 ? n : n + 1);
            case ScalingFamily::MycielskiPrefix:
                return mycielski_prefix(n);
        }
        throw contract_error("unknown family");
    };

    ScalingReport rep;
    rep.q = q;
    rep.reference_exponent = static_cast<double>(q - 2) / (q - 1);

    std::vector<std::future<std::pair<int, int>>> work;
    for (int n : ns)
        work.push_back(std::async(std::launch::async, [&, n] {
            Graph g = make(n);
            int omega = clique_number(g).size;
            if (omega >= q)
                throw contract_error("family produced a graph with clique number " +
                                     std::to_string(omega) + " >= q");
            int alpha = independence_number(g).size;
            double guarantee = independence_guarantee(g.order(), q);
            double fact = 1.0;
            for (int i = 2; i <= q - 1; ++i) fact *= i;
            if (static_cast<double>(g.order()) + 1e-9 >= std::pow(guarantee + q, q - 1) / fact &&
                alpha < static_cast<int>(std::ceil(guarantee)))
                throw contract_error("pigeonhole bound alpha >= ceil(k(n)) violated");
            return std::make_pair(g.order(), greedy_mis_coloring(g).num_colors);
        }));
    for (auto& f : work) rep.samples.push_back(f.get());
    std::sort(rep.samples.begin(), rep.samples.end());

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [n, c] : rep.samples) {
        double x = std::log(static_cast<double>(n));
        double y = std::log(static_cast<double>(c));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double m = static_cast<double>(rep.samples.size());
    rep.fitted_exponent = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    return rep;
}

}  // namespace qc
