#include "qc/matching.hpp"

namespace qc {

namespace {

struct Kuhn {
    const std::vector<std::uint64_t>* adj = nullptr;
    std::vector<int> match_right;  // right -> left or -1
    std::uint64_t visited = 0;     // rights seen in the current augmentation

    bool augment(int left) {
        for (std::uint64_t t = (*adj)[left] & ~visited; t; t &= t - 1) {
            int r = vs_first(t);
            visited |= vbit(r);
            if (match_right[r] < 0 || augment(match_right[r])) {
                match_right[r] = left;
                return true;
            }
        }
        return false;
    }
};

// Matching over a row subset; match_left[i] = -1 for unmatched or excluded rows.
std::vector<int> kuhn_rows(const std::vector<std::uint64_t>& adj, int left_count,
                           int right_count, std::uint64_t rows) {
    Kuhn k;
    k.adj = &adj;
    k.match_right.assign(static_cast<std::size_t>(right_count), -1);
    for (int i = 0; i < left_count; ++i) {
        if (!vs_has(rows, i)) continue;
        k.visited = 0;
        k.augment(i);
    }
    std::vector<int> match_left(static_cast<std::size_t>(left_count), -1);
    for (int r = 0; r < right_count; ++r)
        if (k.match_right[r] >= 0) match_left[static_cast<std::size_t>(k.match_right[r])] = r;
    return match_left;
}

std::vector<std::uint64_t> transpose(const BipartiteListGraph& b) {
    std::vector<std::uint64_t> t(static_cast<std::size_t>(b.right_count), 0);
    for (int i = 0; i < b.left_count; ++i)
        for (std::uint64_t a = b.adj[static_cast<std::size_t>(i)]; a; a &= a - 1)
            t[static_cast<std::size_t>(vs_first(a))] |= vbit(i);
    return t;
}

}  // namespace

std::vector<std::pair<int, int>> max_matching(const BipartiteListGraph& b) {
    std::vector<int> ml = kuhn_rows(b.adj, b.left_count, b.right_count, vs_below(b.left_count));
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < b.left_count; ++i)
        if (ml[static_cast<std::size_t>(i)] >= 0) out.emplace_back(i, ml[static_cast<std::size_t>(i)]);
    return out;
}

std::uint64_t bipartite_neighborhood(const BipartiteListGraph& b, Side side, std::uint64_t set) {
    std::uint64_t nb = 0;
    if (side == Side::Left) {
        for (std::uint64_t t = set; t; t &= t - 1) nb |= b.adj[static_cast<std::size_t>(vs_first(t))];
    } else {
        for (int i = 0; i < b.left_count; ++i)
            if (b.adj[static_cast<std::size_t>(i)] & set) nb |= vbit(i);
    }
    return nb;
}

std::optional<HallBlock> hall_violator(const BipartiteListGraph& b, Side side,
                                       std::uint64_t required) {
    // Work with `required` rows against the full other side; Right swaps roles.
    std::vector<std::uint64_t> adj;
    int rows, cols;
    if (side == Side::Left) {
        adj = b.adj;
        rows = b.left_count;
        cols = b.right_count;
    } else {
        adj = transpose(b);
        rows = b.right_count;
        cols = b.left_count;
    }
    if (required & ~vs_below(rows)) throw contract_error("required set outside the chosen side");

    std::vector<int> match_left = kuhn_rows(adj, rows, cols, required);
    std::vector<int> match_right(static_cast<std::size_t>(cols), -1);
    std::uint64_t exposed = 0;
    for (std::uint64_t t = required; t; t &= t - 1) {
        int i = vs_first(t);
        int r = match_left[static_cast<std::size_t>(i)];
        if (r >= 0)
            match_right[static_cast<std::size_t>(r)] = i;
        else
            exposed |= vbit(i);
    }
    if (!exposed) return std::nullopt;

    // Alternating reachability from every exposed required row: each reachable
    // column is matched (no augmenting path exists), so columns map back into
    // the block and |N(X)| = |X| - |exposed| < |X|.
    std::uint64_t xrows = exposed, xcols = 0;
    bool grew = true;
    while (grew) {
        grew = false;
        std::uint64_t reach = 0;
        for (std::uint64_t t = xrows; t; t &= t - 1)
            reach |= adj[static_cast<std::size_t>(vs_first(t))];
        for (std::uint64_t t = reach & ~xcols; t; t &= t - 1) {
            int c = vs_first(t);
            xcols |= vbit(c);
            int back = match_right[static_cast<std::size_t>(c)];
            if (back >= 0 && !vs_has(xrows, back)) {
                xrows |= vbit(back);
                grew = true;
            }
        }
    }
    return HallBlock{side, xrows, xcols};
}

}  // namespace qc
