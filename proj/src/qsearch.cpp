#include "qc/qsearch.hpp"

#include <algorithm>
#include <thread>

#include "qc/solvers.hpp"

namespace qc {

namespace {

// Edge bit order matches graph6: (0,1),(0,2),(1,2),(0,3),... so lexicographic
// comparisons of masks and of encoded witnesses agree on what "smallest" means.
Graph graph_of_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if ((mask >> bit) & 1) g.add_edge(i, j);
    return g;
}

struct CellBest {
    int q = 0;
    std::uint64_t mask = 0;
    bool set = false;

    void offer(int omega, std::uint64_t mask_in) {
        if (!set || omega < q || (omega == q && mask_in < mask)) {
            q = omega;
            mask = mask_in;
            set = true;
        }
    }
    void merge(const CellBest& other) {
        if (other.set) offer(other.q, other.mask);
    }
};

int check_cap(int n, const QSearchOptions& opts) {
    if (n > opts.enumeration_cap || n > 10)
        throw capacity_error("exhaustive enumeration capped at n = " +
                             std::to_string(std::min(opts.enumeration_cap, 10)));
    if (n < 0) throw contract_error("n must be nonnegative");
    return n * (n - 1) / 2;
}

// chi(g) == c decided by two bounded colorability probes.
bool chi_equals(const Graph& g, int c) {
    if (!k_colorable(g, c)) return false;
    return c <= 1 || !k_colorable(g, c - 1);
}

template <typename Body>
void run_sharded(std::uint64_t total, int jobs, const Body& body) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || total < 2) {
        body(0, 0, total);
        return;
    }
    std::vector<std::thread> pool;
    std::uint64_t j = static_cast<std::uint64_t>(jobs);
    for (std::uint64_t s = 0; s < j; ++s) {
        std::uint64_t lo = total / j * s + std::min<std::uint64_t>(s, total % j);
        std::uint64_t hi = lo + total / j + (s < total % j ? 1 : 0);
        pool.emplace_back([&body, s, lo, hi] { body(static_cast<int>(s), lo, hi); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace

QTableEntry q_value(int n, int c, const QSearchOptions& opts) {
    int nedges = check_cap(n, opts);
    QTableEntry out{n, c, std::nullopt, ""};
    if (c < 1 || c > n) return out;

    std::uint64_t total = std::uint64_t{1} << nedges;
    int jobs = std::max(1, opts.jobs);
    std::vector<CellBest> shard(static_cast<std::size_t>(jobs));
    run_sharded(total, jobs, [&](int s, std::uint64_t lo, std::uint64_t hi) {
        CellBest& best = shard[static_cast<std::size_t>(s)];
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            Graph g = graph_of_mask(n, mask);
            int omega = clique_number(g).size;
            if (omega > c) continue;  // chi >= omega
            if (opts.omega_cutoff && best.set && omega >= best.q) continue;
            if (opts.alpha_filter && independence_number(g).size > n - c + 1) continue;
            if (!chi_equals(g, c)) continue;
            best.offer(omega, mask);
        }
    });

    CellBest best;
    for (const CellBest& s : shard) best.merge(s);
    if (best.set) {
        out.q = best.q;
        out.witness_graph6 = to_graph6(graph_of_mask(n, best.mask));
    }
    return out;
}

std::vector<QTableEntry> q_table(int n_max, const QSearchOptions& opts) {
    if (n_max >= 1) check_cap(n_max, opts);
    std::vector<QTableEntry> table;
    for (int n = 1; n <= n_max; ++n) {
        int nedges = check_cap(n, opts);
        std::uint64_t total = std::uint64_t{1} << nedges;
        int jobs = std::max(1, opts.jobs);
        // cells[shard][c-1]
        std::vector<std::vector<CellBest>> cells(
            static_cast<std::size_t>(jobs), std::vector<CellBest>(static_cast<std::size_t>(n)));
        run_sharded(total, jobs, [&](int s, std::uint64_t lo, std::uint64_t hi) {
            auto& row = cells[static_cast<std::size_t>(s)];
            for (std::uint64_t mask = lo; mask < hi; ++mask) {
                Graph g = graph_of_mask(n, mask);
                int omega = clique_number(g).size;
                int chi = chromatic_number(g).first;
                row[static_cast<std::size_t>(chi - 1)].offer(omega, mask);
            }
        });
        for (int c = 1; c <= n; ++c) {
            CellBest best;
            for (int s = 0; s < jobs; ++s)
                best.merge(cells[static_cast<std::size_t>(s)][static_cast<std::size_t>(c - 1)]);
            QTableEntry e{n, c, std::nullopt, ""};
            if (best.set) {
                e.q = best.q;
                e.witness_graph6 = to_graph6(graph_of_mask(n, best.mask));
            }
            table.push_back(std::move(e));
        }
    }
    return table;
}

std::vector<std::string> monotonicity_flags(const std::vector<QTableEntry>& table) {
    std::vector<std::string> flags;
    for (std::size_t i = 1; i < table.size(); ++i) {
        const QTableEntry& prev = table[i - 1];
        const QTableEntry& cur = table[i];
        if (cur.n == prev.n && cur.c == prev.c + 1 && prev.q && cur.q && *cur.q < *prev.q)
            flags.push_back("q(" + std::to_string(cur.n) + "," + std::to_string(cur.c) +
                            ") = " + std::to_string(*cur.q) + " < q(" + std::to_string(prev.n) +
                            "," + std::to_string(prev.c) + ") = " + std::to_string(*prev.q));
    }
    return flags;
}

}  // namespace qc
