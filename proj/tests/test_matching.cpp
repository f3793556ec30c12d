#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qc/matching.hpp"

using namespace qc;

TEST_SUITE_BEGIN("matching");

namespace {

BipartiteListGraph make(int left, int right, std::vector<std::uint64_t> adj) {
    BipartiteListGraph b;
    b.left_count = left;
    b.right_count = right;
    b.adj = std::move(adj);
    return b;
}

bool matching_valid(const BipartiteListGraph& b, const std::vector<std::pair<int, int>>& m) {
    std::uint64_t lefts = 0, rights = 0;
    for (auto [l, r] : m) {
        if (!(b.adj[static_cast<std::size_t>(l)] >> r & 1)) return false;
        if (vs_has(lefts, l) || vs_has(rights, r)) return false;
        lefts |= vbit(l);
        rights |= vbit(r);
    }
    return true;
}

}  // namespace

TEST_CASE("matching basics") {
    CHECK(max_matching(make(3, 2, {0, 0, 0})).empty());

    auto perfect = max_matching(make(3, 3, {0b001, 0b010, 0b100}));
    CHECK(perfect.size() == 3);

    // L1={a}, L2={a}, L3={a,b}: only two of three can be served
    BipartiteListGraph b = make(3, 2, {0b01, 0b01, 0b11});
    auto m = max_matching(b);
    CHECK(m.size() == 2);
    CHECK(matching_valid(b, m));
    CHECK(oracle::brute_max_matching(b) == 2);
}

TEST_CASE("hall violator extracts the stated blocks") {
    // two vertices whose lists are both exactly {a}
    BipartiteListGraph b = make(2, 1, {0b1, 0b1});
    auto blk = hall_violator(b, Side::Left, 0b11);
    REQUIRE(blk.has_value());
    CHECK(blk->side == Side::Left);
    CHECK(blk->block == 0b11);
    CHECK(blk->neighborhood == 0b1);
    CHECK(vs_size(blk->neighborhood) < vs_size(blk->block));

    // a perfect-matching instance has no violator on either side
    BipartiteListGraph ok = make(3, 3, {0b011, 0b110, 0b101});
    CHECK(!hall_violator(ok, Side::Left, 0b111).has_value());
    CHECK(!hall_violator(ok, Side::Right, 0b111).has_value());

    // right side: colors a,b reach only u_1, so {a,b} is a 2-1 block
    BipartiteListGraph r = make(3, 3, {0b011, 0b100, 0b100});
    auto rb = hall_violator(r, Side::Right, 0b111);
    REQUIRE(rb.has_value());
    CHECK(rb->side == Side::Right);
    CHECK(rb->block == 0b011);
    CHECK(rb->neighborhood == 0b001);

    CHECK_THROWS_AS(hall_violator(r, Side::Right, 0b11111), contract_error);
}

TEST_CASE("random instances: matching size and saturation agree with brute force") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        int left = 1 + static_cast<int>(rng() % 12);
        int right = 1 + static_cast<int>(rng() % 12);
        std::vector<std::uint64_t> adj;
        for (int i = 0; i < left; ++i) adj.push_back(rng() & vs_below(right));
        BipartiteListGraph b = make(left, right, adj);

        auto m = max_matching(b);
        CHECK(matching_valid(b, m));
        CHECK(static_cast<int>(m.size()) == oracle::brute_max_matching(b));

        for (Side side : {Side::Left, Side::Right}) {
            int limit = side == Side::Left ? left : right;
            std::uint64_t required = rng() & vs_below(limit);
            auto blk = hall_violator(b, side, required);
            bool saturable = oracle::brute_saturates(b, side, required);
            CHECK(blk.has_value() == !saturable);
            if (blk) {
                CHECK((blk->block & ~required) == 0);
                CHECK(vs_size(blk->neighborhood) < vs_size(blk->block));
                CHECK(bipartite_neighborhood(b, side == Side::Left ? Side::Left : Side::Right,
                                             blk->block) == blk->neighborhood);
            }
        }
    }
}

TEST_SUITE_END();
