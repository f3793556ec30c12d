#pragma once

#include "qc/graph.hpp"
#include "qc/solvers.hpp"

namespace qc {

// An extremal-family graph together with its claimed chromatic and clique
// numbers; verify_construction enforces the claims with the exact solvers.
struct ConstructionReport {
    Graph graph;
    int claimed_chi = 0;
    int claimed_omega = 0;
    int n = 0;
    int k = 0;
};

struct VerifiedConstruction {
    ConstructionReport report;
    int chi = 0;
    int omega = 0;
};

// K_n with the edges of C_{2k+1} on vertices 0..2k removed.
// Requires n >= 2k+1 >= 5. Claims chi = n-k, omega = n-k-1.
ConstructionReport kn_minus_odd_cycle(int n, int k);

// Complement of (k/2) C_5 for even k, of ((k-1)/2) C_5 + P_3 for odd k, padded
// with dominating vertices up to order n. Requires n >= ceil(5k/2), k >= 1.
// Claims chi = n-k, omega = n-2k+ceil(k/2).
ConstructionReport jw_graph(int n, int k);

// The closed-form value n-2k+ceil(k/2), k >= 0.
int conjectured_q(int n, int k);

// Run the exact solvers against the claims; throws claim_mismatch on any
// disagreement.
VerifiedConstruction verify_construction(const ConstructionReport& r);

}  // namespace qc
