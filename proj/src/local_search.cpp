#include "clout/local_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "clout/json_util.hpp"

namespace clout {

namespace {

// Best single center by total service cost, ties to the smaller id.
CenterId best_single_center(const Instance& inst) {
    const int m = inst.num_centers();
    const int n = inst.num_points();
    CenterId best = 0;
    double best_cost = std::numeric_limits<double>::infinity();
    for (CenterId i = 0; i < m; ++i) {
        double c = 0.0;
        for (PointId j = 0; j < n; ++j) c += inst.metric.assign_cost(j, i);
        if (c < best_cost) {
            best_cost = c;
            best = i;
        }
    }
    return best;
}

// Center closest to the point currently worst served: the point farthest
// from the open set picks the next center. Deterministic, backend-agnostic.
std::optional<CenterId> next_farthest_center(const Instance& inst,
                                             const std::vector<CenterId>& open) {
    const int n = inst.num_points();
    const int m = inst.num_centers();
    PointId far_point = 0;
    double far_dist = -1.0;
    for (PointId j = 0; j < n; ++j) {
        double d = std::numeric_limits<double>::infinity();
        for (CenterId i : open) d = std::min(d, inst.metric.distance(j, i));
        if (d > far_dist) {
            far_dist = d;
            far_point = j;
        }
    }
    CenterId pick = kNoCenter;
    double pick_dist = std::numeric_limits<double>::infinity();
    for (CenterId i = 0; i < m; ++i) {
        if (std::binary_search(open.begin(), open.end(), i)) continue;
        const double d = inst.metric.distance(far_point, i);
        if (d < pick_dist) {
            pick_dist = d;
            pick = i;
        }
    }
    if (pick == kNoCenter) return std::nullopt;
    return pick;
}

void insert_sorted(std::vector<CenterId>& open, CenterId i) {
    open.insert(std::upper_bound(open.begin(), open.end(), i), i);
}

}  // namespace

std::vector<CenterId> greedy_farthest_seed(const Instance& inst) {
    std::vector<CenterId> open{best_single_center(inst)};

    if (inst.is_kcluster()) {
        const int target = inst.open_budget();
        while (static_cast<int>(open.size()) < target) {
            const auto next = next_farthest_center(inst, open);
            if (!next) break;
            insert_sorted(open, *next);
        }
        return open;
    }

    // Facility variant: grow while the full objective keeps dropping.
    double cur = evaluate(inst, open).cost();
    while (static_cast<int>(open.size()) < inst.num_centers()) {
        const auto next = next_farthest_center(inst, open);
        if (!next) break;
        std::vector<CenterId> grown = open;
        insert_sorted(grown, *next);
        const double grown_cost = evaluate(inst, grown).cost();
        if (grown_cost >= cur) break;
        open = std::move(grown);
        cur = grown_cost;
    }
    return open;
}

std::vector<CenterId> random_subset_seed(const Instance& inst, std::uint64_t seed) {
    const int m = inst.num_centers();
    std::mt19937_64 rng(splitmix64(seed));
    const int size = inst.is_kcluster()
                         ? inst.open_budget()
                         : 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(m));

    // Partial Fisher-Yates over the id range; no library distributions so
    // the draw is reproducible everywhere.
    std::vector<CenterId> ids(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) ids[static_cast<std::size_t>(i)] = i;
    for (int t = 0; t < size; ++t) {
        const std::size_t r =
            static_cast<std::size_t>(t) + rng() % static_cast<std::uint64_t>(m - t);
        std::swap(ids[static_cast<std::size_t>(t)], ids[r]);
    }
    std::vector<CenterId> open(ids.begin(), ids.begin() + size);
    std::sort(open.begin(), open.end());
    return open;
}

std::vector<CenterId> build_seed(const Instance& inst, const SeedPolicy& policy) {
    switch (policy.kind) {
        case SeedKind::GreedyFarthest:
            return greedy_farthest_seed(inst);
        case SeedKind::RandomSubset:
            return random_subset_seed(inst, policy.seed);
        case SeedKind::Explicit: {
            auto open = policy.explicit_centers;
            std::sort(open.begin(), open.end());
            return open;
        }
    }
    throw ValidationError("seed", "unknown seed policy");
}

SearchTrace local_search(const Instance& inst, const SearchConfig& config) {
    if (config.rho < 1) throw ValidationError("rho", "swap size must be at least 1");
    if (!(config.epsilon_stop > 0.0) || !std::isfinite(config.epsilon_stop))
        throw ValidationError("epsilon_stop", "must be a positive finite number");
    if (config.max_iterations < 1)
        throw ValidationError("max_iterations", "must be at least 1");

    SearchTrace trace;
    trace.final = evaluate(inst, build_seed(inst, config.seed));

    const double margin = config.epsilon_stop / inst.num_centers();

    while (true) {
        const double cost = trace.final.cost();
        if (cost <= kAbsTol) {
            trace.termination = Termination::LocalOptimum;
            break;
        }
        if (static_cast<long>(trace.steps.size()) >= config.max_iterations) {
            trace.termination = Termination::IterationCap;
            break;
        }

        // A move counts only if it clears the relative improvement margin.
        const double threshold = (1.0 - margin) * cost;
        std::optional<SwapMove> chosen;
        double chosen_cost = std::numeric_limits<double>::infinity();

        for_each_move(inst, trace.final, config.rho, [&](const SwapMove& move) {
            const double new_cost = cost + delta_of_swap(inst, trace.final, move);
            if (new_cost <= threshold && new_cost < chosen_cost) {
                chosen = move;
                chosen_cost = new_cost;
                if (config.pivot == PivotRule::FirstImprovement) return false;
            }
            return true;
        });

        if (!chosen) {
            trace.termination = Termination::LocalOptimum;
            break;
        }

        trace.final = apply_swap(inst, trace.final, *chosen);
        trace.steps.push_back({static_cast<long>(trace.steps.size()) + 1, *chosen, cost,
                               trace.final.cost()});
    }
    return trace;
}

CertifyOutcome certify_local_optimum(const Instance& inst, const Solution& sol, int rho,
                                     double slack) {
    CertifyOutcome out;
    const double cost = sol.cost();
    const double tol = std::max(slack * std::fabs(cost), kAbsTol);
    for_each_move(inst, sol, rho, [&](const SwapMove& move) {
        const double delta = delta_of_swap(inst, sol, move);
        if (delta < -tol) {
            out.certified = false;
            out.counterexample = move;
            out.delta = delta;
            return false;
        }
        return true;
    });
    return out;
}

bool trace_within_iteration_bound(const SearchTrace& trace, double epsilon_stop, int num_centers) {
    const long taken = static_cast<long>(trace.steps.size());
    if (taken == 0) return true;
    const double c0 = trace.initial_cost();
    const double cf = trace.final.cost();
    if (!(cf > 0.0)) return true;  // hit an exact zero; decay argument is moot
    const double shrink = 1.0 - epsilon_stop / num_centers;
    const double bound = std::log(c0 / cf) / std::log(1.0 / shrink) + 1.0;
    return static_cast<double>(taken) <= bound + 1e-9;
}

std::string save_trace(const SearchTrace& trace) {
    nlohmann::json doc = nlohmann::json::object();
    doc["termination"] =
        trace.termination == Termination::LocalOptimum ? "local-optimum" : "iteration-cap";
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : trace.steps) {
        nlohmann::json rec = nlohmann::json::object();
        rec["iteration"] = s.iteration;
        rec["add"] = s.move.add;
        rec["drop"] = s.move.drop;
        rec["cost_before"] = s.cost_before;
        rec["cost_after"] = s.cost_after;
        steps.push_back(std::move(rec));
    }
    doc["steps"] = std::move(steps);
    doc["solution"] = parse_json(save_solution(trace.final));
    return canonical_dump(doc);
}

void save_trace_file(const SearchTrace& trace, const std::string& path) {
    write_text_file(path, save_trace(trace));
}

}  // namespace clout
