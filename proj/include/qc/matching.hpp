#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qc/graph.hpp"

namespace qc {

// Bipartite graph between vertices (left) and colors (right), as index spaces
// 0..left_count-1 and 0..right_count-1. adj[i] has bit r set when left i is
// joined to right r. The optional id vectors carry caller-side labels.
struct BipartiteListGraph {
    int left_count = 0;
    int right_count = 0;
    std::vector<std::uint64_t> adj;
    std::vector<int> left_ids;
    std::vector<int> right_ids;
};

enum class Side { Left, Right };

// A set violating Hall's condition: |neighborhood| < |block|.
struct HallBlock {
    Side side = Side::Left;
    std::uint64_t block = 0;
    std::uint64_t neighborhood = 0;
};

// Maximum matching by augmenting paths; deterministic under the index order.
// Returns pairs (left, right).
std::vector<std::pair<int, int>> max_matching(const BipartiteListGraph& b);

// If no matching saturates `required` (a subset of the chosen side), extract a
// Hall block inside it via alternating reachability from an exposed vertex.
std::optional<HallBlock> hall_violator(const BipartiteListGraph& b, Side side,
                                       std::uint64_t required);

std::uint64_t bipartite_neighborhood(const BipartiteListGraph& b, Side side, std::uint64_t set);

}  // namespace qc
