#include <doctest.h>

#include "qc/qsearch.hpp"
#include "qc/solvers.hpp"

using namespace qc;

TEST_SUITE_BEGIN("qsearch");

TEST_CASE("cells at tiny sizes") {
    QTableEntry e = q_value(5, 3);
    REQUIRE(e.q.has_value());
    CHECK(*e.q == 2);
    // the witness must be a 5-cycle: triangle-free, chromatic number 3
    Graph w = from_graph6(e.witness_graph6);
    CHECK(w.order() == 5);
    CHECK(w.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(w.degree(v) == 2);
    CHECK(chromatic_number(w).first == 3);
    CHECK(clique_number(w).size == 2);

    CHECK(*q_value(6, 5).q == 5);
    CHECK(*q_value(4, 4).q == 4);

    CHECK(!q_value(4, 5).q.has_value());
    CHECK(!q_value(4, 0).q.has_value());
    CHECK_THROWS_AS(q_value(9, 3), capacity_error);
}

TEST_CASE("table rows at n <= 6 and witness consistency") {
    std::vector<QTableEntry> table = q_table(6);
    auto cell = [&](int n, int c) -> const QTableEntry& {
        for (const QTableEntry& e : table)
            if (e.n == n && e.c == c) return e;
        REQUIRE(false);
        return table.front();
    };
    for (int n = 1; n <= 6; ++n) {
        CHECK(*cell(n, n).q == n);
        if (n >= 2) CHECK(*cell(n, n - 1).q == n - 1);
    }
    CHECK(*cell(5, 3).q == 2);
    CHECK(*cell(5, 4).q == 4);
    CHECK(*cell(6, 4).q == 3);

    for (const QTableEntry& e : table) {
        REQUIRE(e.q.has_value());
        Graph w = from_graph6(e.witness_graph6);
        CHECK(chromatic_number(w).first == e.c);
        CHECK(clique_number(w).size == *e.q);
    }
    CHECK(monotonicity_flags(table).empty());
}

TEST_CASE("pruned per-cell search equals the plain table pass, bit for bit") {
    QSearchOptions plain;
    plain.omega_cutoff = false;
    plain.alpha_filter = false;
    for (int n = 1; n <= 6; ++n) {
        std::vector<QTableEntry> table = q_table(n);
        for (const QTableEntry& e : table) {
            if (e.n != n) continue;
            QTableEntry pruned = q_value(n, e.c);
            QTableEntry unpruned = q_value(n, e.c, plain);
            CHECK(pruned.q == e.q);
            CHECK(pruned.witness_graph6 == e.witness_graph6);
            CHECK(unpruned.q == e.q);
            CHECK(unpruned.witness_graph6 == e.witness_graph6);
        }
    }
}

TEST_CASE("worker count never changes the result") {
    QSearchOptions one, three;
    one.jobs = 1;
    three.jobs = 3;
    std::vector<QTableEntry> a = q_table(6, one);
    std::vector<QTableEntry> b = q_table(6, three);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].q == b[i].q);
        CHECK(a[i].witness_graph6 == b[i].witness_graph6);
    }
    QTableEntry x = q_value(6, 4, one);
    QTableEntry y = q_value(6, 4, three);
    CHECK(x.q == y.q);
    CHECK(x.witness_graph6 == y.witness_graph6);
}

TEST_SUITE_END();
