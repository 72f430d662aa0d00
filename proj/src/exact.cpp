#include "clout/exact.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace clout {

namespace {

// Cost of one open set without building a full Solution. Farthest-first with
// larger-id-first ties, summed in that order; the value matches evaluate up
// to accumulation order, which is irrelevant for picking the minimizer.
double light_cost(const Instance& inst, const std::vector<CenterId>& open,
                  std::vector<double>& dist_scratch, std::vector<PointId>& order_scratch) {
    const int n = inst.num_points();
    dist_scratch.resize(static_cast<std::size_t>(n));
    for (PointId j = 0; j < n; ++j) {
        double best = std::numeric_limits<double>::infinity();
        for (CenterId i : open) best = std::min(best, inst.metric.distance(j, i));
        dist_scratch[j] = best;
    }
    order_scratch.resize(static_cast<std::size_t>(n));
    std::iota(order_scratch.begin(), order_scratch.end(), 0);
    std::sort(order_scratch.begin(), order_scratch.end(), [&](PointId a, PointId b) {
        if (dist_scratch[a] != dist_scratch[b]) return dist_scratch[a] > dist_scratch[b];
        return a > b;
    });
    double total = 0.0;
    for (int t = inst.z; t < n; ++t) total += inst.metric.pow_q(dist_scratch[order_scratch[t]]);
    for (CenterId i : open) total += inst.opening_cost(i);
    return total;
}

std::uint64_t binomial_capped(int n, int k, std::uint64_t cap) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int t = 1; t <= k; ++t) {
        r = r * static_cast<std::uint64_t>(n - k + t) / static_cast<std::uint64_t>(t);
        if (r > cap) return cap + 1;
    }
    return r;
}

}  // namespace

ExactResult solve_exact(const Instance& inst, int size_cap, std::uint64_t max_subsets) {
    const int m = inst.num_centers();

    int lo = 1;
    int hi = m;
    if (inst.is_kcluster()) {
        // Extra centers never raise the service cost, so the size-k layer
        // already contains an optimum over all sets of size at most k.
        lo = hi = inst.kcluster().k;
    } else if (size_cap > 0) {
        hi = std::min(hi, size_cap);
    } else if (m > 20) {
        throw BudgetError("exact search over " + std::to_string(m) +
                          " candidates needs an explicit subset size cap");
    }

    std::uint64_t planned = 0;
    for (int s = lo; s <= hi; ++s) {
        planned += binomial_capped(m, s, max_subsets);
        if (planned > max_subsets)
            throw BudgetError("exact search would examine more than " +
                              std::to_string(max_subsets) + " subsets");
    }

    ExactResult result;
    double best_cost = std::numeric_limits<double>::infinity();
    std::vector<double> dist_scratch;
    std::vector<PointId> order_scratch;
    std::vector<CenterId> cur;
    cur.reserve(static_cast<std::size_t>(hi));

    // Depth-first over id-sorted prefixes visits subsets in lex order, so a
    // strict comparison keeps the lexicographically first minimizer.
    auto walk = [&](auto&& self, int start) -> void {
        const int size = static_cast<int>(cur.size());
        if (size >= lo) {
            ++result.subsets_examined;
            const double c = light_cost(inst, cur, dist_scratch, order_scratch);
            if (c < best_cost) {
                best_cost = c;
                result.open = cur;
            }
        }
        if (size == hi) return;
        for (CenterId i = start; i < m; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    walk(walk, 0);

    result.cost = evaluate(inst, result.open).cost();
    return result;
}

}  // namespace clout
