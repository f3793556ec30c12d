#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qc/graph.hpp"
#include "qc/solvers.hpp"

namespace qc {

// Binomial Ramsey bound R(k,q) <= C(k+q-2, q-1), exact integer arithmetic;
// throws std::overflow_error when the value leaves 64 bits.
std::uint64_t erdos_szekeres_bound(int k, int q);

// ((q-1)! n)^(1/(q-1)) - q: the independent-set size forced in a graph on n
// vertices with no q-clique.
double independence_guarantee(int n, int q);

// Repeatedly extract an exact maximum independent set (lexicographically
// smallest among the maximum ones) and give it a fresh color.
Coloring greedy_mis_coloring(const Graph& g);

enum class ScalingFamily { RandomBipartite, OddCycle, MycielskiPrefix };

struct ScalingReport {
    int q = 0;
    std::vector<std::pair<int, int>> samples;  // (n, colors used), sorted by n
    double fitted_exponent = 0.0;
    double reference_exponent = 0.0;  // (q-2)/(q-1)
};

// Color family members with greedy_mis_coloring and fit colors ~ n^e by least
// squares on the log-log points. Every generated graph is solver-verified to
// have clique number below q, and the per-instance pigeonhole bound
// alpha >= ceil(independence_guarantee(n, q)) is asserted whenever
// n >= (guarantee + q)^(q-1) / (q-1)!.
ScalingReport scaling_check(int q, ScalingFamily family, const std::vector<int>& sizes,
                            std::uint64_t seed);

// Triangle-free helpers for scaling families.
Graph random_bipartite(int n, std::uint64_t seed);
Graph mycielski(const Graph& g);
Graph mycielski_prefix(int n);

}  // namespace qc
