#include "clout/gap.hpp"

#include <algorithm>
#include <cmath>

#include "clout/exact.hpp"

namespace clout {

namespace {

// Separation factor between translated clusters: big enough that no swap
// ever profits from serving a point across cluster boundaries.
constexpr double kSeparationFactor = 1e6;

constexpr double kTau = 6.283185307179586;

}  // namespace

GapInstance make_ufl_gap(const UflGapParams& params) {
    if (params.rho < 1) throw ValidationError("rho", "must be at least 1");
    if (params.z < 1) throw ValidationError("z", "must be at least 1");
    if (params.z < params.rho)
        throw ValidationError("z", "needs z >= rho for the stuck configuration");

    const int z = params.z;
    // All intra-cluster distances are zero here, so the unit baseline drives
    // the separation.
    const double L = kSeparationFactor;

    std::vector<std::vector<double>> centers;
    std::vector<std::vector<double>> points;
    std::vector<double> opening;

    // Center 0 next to the pile, opening cost rho; centers 1..z next to one
    // far point each, opening cost 1.
    centers.push_back({0.0, 0.0});
    opening.push_back(static_cast<double>(params.rho));
    for (int t = 1; t <= z; ++t) {
        centers.push_back({static_cast<double>(t) * L, 0.0});
        opening.push_back(1.0);
    }

    for (int t = 0; t < z; ++t) points.push_back({0.0, 0.0});
    for (int t = 1; t <= z; ++t) points.push_back({static_cast<double>(t) * L, 0.0});

    UflOutKind kind;
    kind.opening_costs = std::move(opening);

    GapInstance out;
    out.instance = make_instance(MetricSpace::from_euclidean(std::move(points), std::move(centers), 1.0),
                                 std::move(kind), z);
    for (CenterId i = 1; i <= z; ++i) out.stated_local.push_back(i);
    out.stated_opt = {0};
    return out;
}

GapInstance make_kcluster_gap(const KClusterGapParams& params) {
    const int k = params.k;
    const int z = params.z;
    if (k < 3) throw ValidationError("k", "needs k >= 3 so both square shapes exist");
    if (z < 1 || z % (k - 1) != 0)
        throw ValidationError("z", "must be a positive multiple of k-1");
    const int u = z / (k - 1);
    if (u < k - 1) throw ValidationError("z", "needs u = z/(k-1) >= k-1");
    if (!(params.beta > 0.0) || !(params.gamma > 0.0))
        throw ValidationError("beta", "ring costs must be positive");
    if (!(params.gamma < (u - 1) * params.beta) || !((u - 1) * params.beta < 2.0 * params.gamma))
        throw ValidationError("gamma", "requires gamma < (u-1) beta < 2 gamma");
    if (params.q < 1.0) throw ValidationError("q", "must be at least 1");
    if (params.dim < 2) throw ValidationError("dim", "rings need at least 2 dimensions");

    const int n = params.n > 0 ? params.n : 5 * z;
    const int in_rings = 2 * u * (k - 1);  // everything outside the pile B
    if (n <= in_rings)
        throw ValidationError("n", "needs more than 2u(k-1) points to leave the pile nonempty");

    // One ring hop must cost exactly beta (resp. gamma) under exponent q, so
    // the geometric radius is the q-th root of the target cost.
    const double r_c = std::pow(params.beta, 1.0 / params.q);
    const double r_e = std::pow(params.gamma, 1.0 / params.q);
    const double L = kSeparationFactor * 2.0 * std::max(r_c, r_e);

    const int dim = params.dim;
    auto at = [&](double x, double y) {
        std::vector<double> coords(static_cast<std::size_t>(dim), 0.0);
        coords[0] = x;
        coords[1] = y;
        return coords;
    };

    std::vector<std::vector<double>> centers;
    std::vector<std::vector<double>> points;

    // Cluster layout along the axis: B, C_1..C_{k-1}, D_1..D_{k-2}, E.
    int slot = 0;
    const double bx = static_cast<double>(slot++) * L;
    centers.push_back(at(bx, 0.0));                       // f(B) = 0
    for (int c = 0; c < k - 1; ++c) {                     // f(C_i) = 1..k-1
        const double cx = static_cast<double>(slot++) * L;
        centers.push_back(at(cx, 0.0));
        points.push_back(at(cx, 0.0));                    // ring center point
        for (int t = 0; t < u - 1; ++t) {
            const double ang = kTau * t / (u - 1);
            points.push_back(at(cx + r_c * std::cos(ang), r_c * std::sin(ang)));
        }
    }
    for (int d = 0; d < k - 2; ++d) {                     // f(D_j) = k..2k-3
        const double dx = static_cast<double>(slot++) * L;
        centers.push_back(at(dx, 0.0));
        for (int t = 0; t < u - 1; ++t) points.push_back(at(dx, 0.0));
    }
    const double ex = static_cast<double>(slot++) * L;    // f(E) = 2k-2
    centers.push_back(at(ex, 0.0));
    points.push_back(at(ex, 0.0));
    for (int t = 0; t < u + k - 3; ++t) {
        const double ang = kTau * t / (u + k - 3);
        points.push_back(at(ex + r_e * std::cos(ang), r_e * std::sin(ang)));
    }
    // The pile fills the remainder, colocated with f(B).
    const int pile = n - static_cast<int>(points.size());
    for (int t = 0; t < pile; ++t) points.push_back(at(bx, 0.0));

    KClusterOutKind kind;
    kind.k = k;
    kind.epsilon = 0.0;

    GapInstance out;
    out.instance = make_instance(
        MetricSpace::from_euclidean(std::move(points), std::move(centers), params.q), kind, z);
    out.stated_local.push_back(0);                          // f(B)
    for (CenterId i = k; i <= 2 * k - 3; ++i) out.stated_local.push_back(i);  // f(D_j)
    out.stated_local.push_back(2 * k - 2);                  // f(E)
    out.stated_opt.push_back(0);
    for (CenterId i = 1; i <= k - 1; ++i) out.stated_opt.push_back(i);        // f(C_i)
    return out;
}

GapReport verify_gap(const Instance& inst, const std::vector<CenterId>& stated_local,
                     const std::vector<CenterId>& stated_opt, int rho, bool confirm_opt) {
    GapReport report;
    const Solution local = evaluate(inst, stated_local);
    const Solution opt = evaluate(inst, stated_opt);
    report.local_cost = local.cost();
    report.opt_cost = opt.cost();
    report.ratio = local.cost() / opt.cost();

    const CertifyOutcome cert = certify_local_optimum(inst, local, rho);
    report.local_certified = cert.certified;
    report.counterexample = cert.counterexample;

    if (confirm_opt) {
        try {
            const ExactResult exact = solve_exact(inst);
            report.opt_confirmed = approx_eq(exact.cost, report.opt_cost);
        } catch (const BudgetError&) {
            report.opt_confirmed.reset();
        }
    }
    return report;
}

}  // namespace clout
