#include "qc/constructions.hpp"

#include <string>

namespace qc {

ConstructionReport kn_minus_odd_cycle(int n, int k) {
    if (k < 2 || n < 2 * k + 1)
        throw contract_error("kn_minus_odd_cycle requires n >= 2k+1 >= 5");
    Graph g = complete(n);
    int m = 2 * k + 1;
    for (int v = 0; v < m; ++v) g.remove_edge(v, (v + 1) % m);
    return {std::move(g), n - k, n - k - 1, n, k};
}

ConstructionReport jw_graph(int n, int k) {
    if (k < 1) throw contract_error("jw_graph requires k >= 1");
    int threshold = (5 * k + 1) / 2;
    if (n < threshold)
        throw contract_error("jw_graph requires n >= ceil(5k/2) = " + std::to_string(threshold));
    Graph base(0);
    if (k % 2 == 0) {
        for (int i = 0; i < k / 2; ++i) base = disjoint_union(base, cycle(5));
    } else {
        for (int i = 0; i < (k - 1) / 2; ++i) base = disjoint_union(base, cycle(5));
        base = disjoint_union(base, path(3));
    }
    Graph g = complement(base);
    while (g.order() < n) g = add_dominating_vertex(g);
    return {std::move(g), n - k, n - 2 * k + (k + 1) / 2, n, k};
}

int conjectured_q(int n, int k) {
    if (k < 0) throw contract_error("k must be nonnegative");
    return n - 2 * k + (k + 1) / 2;
}

VerifiedConstruction verify_construction(const ConstructionReport& r) {
    VerifiedConstruction out{r, 0, 0};
    out.chi = chromatic_number(r.graph).first;
    out.omega = clique_number(r.graph).size;
    if (out.chi != r.claimed_chi || out.omega != r.claimed_omega)
        throw claim_mismatch("construction (n=" + std::to_string(r.n) + ", k=" +
                             std::to_string(r.k) + ") claims chi=" + std::to_string(r.claimed_chi) +
                             " omega=" + std::to_string(r.claimed_omega) + " but solvers found chi=" +
                             std::to_string(out.chi) + " omega=" + std::to_string(out.omega));
    return out;
}

}  // namespace qc
