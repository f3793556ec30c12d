#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qc/graph.hpp"

namespace qc {

// One cell of the Q table: the minimum clique number over all labeled graphs
// on n vertices with chromatic number c, plus a minimizing witness. q is empty
// when no graph qualifies (c < 1 or c > n).
struct QTableEntry {
    int n = 0;
    int c = 0;
    std::optional<int> q;
    std::string witness_graph6;
};

struct QSearchOptions {
    int jobs = 1;
    bool omega_cutoff = true;  // skip chi once omega cannot improve the cell
    bool alpha_filter = true;  // skip when alpha > n-c+1 (chi <= n-alpha+1 < c)
    int enumeration_cap = 8;   // full 2^(n(n-1)/2) enumeration above this is refused
};

// Exact minimum over all labeled graphs via edge-mask enumeration. The mask
// space is split into contiguous shards (high-order edge bits) across jobs;
// shard results merge by (min q, then lexicographically smallest mask), so the
// outcome is identical for every job count.
QTableEntry q_value(int n, int c, const QSearchOptions& opts = {});

// All cells (n, c) with 1 <= c <= n <= n_max, one enumeration pass per n.
std::vector<QTableEntry> q_table(int n_max, const QSearchOptions& opts = {});

// Rows where q decreases as c grows (reported, never asserted).
std::vector<std::string> monotonicity_flags(const std::vector<QTableEntry>& table);

}  // namespace qc
