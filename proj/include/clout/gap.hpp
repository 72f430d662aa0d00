#pragma once

#include <optional>
#include <vector>

#include "clout/local_search.hpp"

namespace clout {

// A generated worst-case instance together with the two solutions whose cost
// ratio exhibits the gap: stated_local survives every small swap, stated_opt
// is the cheap configuration the search cannot reach.
struct GapInstance {
    Instance instance;
    std::vector<CenterId> stated_local;
    std::vector<CenterId> stated_opt;
};

// Facility family: one expensive center covering a pile of z colocated
// points, z cheap centers each covering a single far-away point. Swaps of
// size up to rho cannot let go of the cheap centers, so the search is stuck
// at cost z while opening the expensive center alone costs rho.
struct UflGapParams {
    int rho = 1;
    int z = 2;
};

// Cardinality family with rings: a heavy colocated pile B, k-1 ring clusters
// C_i of u points each (service cost beta per ring point), k-2 colocated
// piles D_j, and one wide ring E (service cost gamma per ring point). The
// stated local solution serves E and eats every C as outliers; the stated
// alternative pays (k-1)(u-1) beta. Ring radii are chosen so that one ring
// hop costs exactly beta resp. gamma under the instance's exponent q.
struct KClusterGapParams {
    int k = 3;
    int z = 8;          // must be a multiple of k-1; u = z/(k-1) >= k-1
    double beta = 1.0;  // per-point service cost inside a C ring
    double gamma = 2.0; // per-point service cost inside the E ring
    int n = 0;          // total points, 0 = default 5z
    double q = 1.0;
    int dim = 2;        // >= 2, rings live in the first two coordinates
};

GapInstance make_ufl_gap(const UflGapParams& params);
GapInstance make_kcluster_gap(const KClusterGapParams& params);

struct GapReport {
    bool local_certified = false;
    std::optional<SwapMove> counterexample;
    double local_cost = 0.0;
    double opt_cost = 0.0;
    double ratio = 0.0;                     // local_cost / opt_cost
    std::optional<bool> opt_confirmed;      // unset when brute force is off or too big
};

// Certifies the stated local solution at swap size rho, reports the cost
// ratio, and (when affordable) confirms the stated alternative against the
// brute-force optimum.
GapReport verify_gap(const Instance& inst, const std::vector<CenterId>& stated_local,
                     const std::vector<CenterId>& stated_opt, int rho,
                     bool confirm_opt = true);

}  // namespace clout
