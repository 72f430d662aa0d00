#include "clout/solution.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "clout/json_util.hpp"

namespace clout {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_sorted_unique(const std::vector<CenterId>& ids, int m, const char* what) {
    for (std::size_t t = 0; t < ids.size(); ++t) {
        if (ids[t] < 0 || ids[t] >= m)
            throw ValidationError(what, "center id " + std::to_string(ids[t]) + " out of range");
        if (t > 0 && ids[t] <= ids[t - 1])
            throw ValidationError(what, "ids must be strictly increasing");
    }
}

// Outlier order: farthest first, larger id first among ties. Taking the
// first z of this order drops ties with the larger id, keeping smaller ids
// assigned.
struct OutlierOrder {
    const std::vector<double>& dist;
    bool operator()(PointId a, PointId b) const {
        if (dist[a] != dist[b]) return dist[a] > dist[b];
        return a > b;
    }
};

// Completes sigma/outliers/totals from the nearest caches. Shared by
// evaluate and apply_swap so both produce identical state, including the
// order of floating-point accumulation (ascending point id).
void finalize_assignment(const Instance& inst, Solution& sol) {
    const int n = inst.num_points();
    const int z = inst.z;

    std::vector<PointId> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), OutlierOrder{sol.nearest_dist});

    std::vector<char> is_outlier(static_cast<std::size_t>(n), 0);
    sol.outliers.assign(order.begin(), order.begin() + z);
    std::sort(sol.outliers.begin(), sol.outliers.end());
    for (PointId j : sol.outliers) is_outlier[j] = 1;

    sol.sigma.resize(static_cast<std::size_t>(n));
    sol.total_assign = 0.0;
    for (PointId j = 0; j < n; ++j) {
        if (is_outlier[j]) {
            sol.sigma[j] = kNoCenter;
        } else {
            sol.sigma[j] = sol.nearest[j];
            sol.total_assign += inst.metric.pow_q(sol.nearest_dist[j]);
        }
    }

    sol.total_open = 0.0;
    for (CenterId i : sol.open) sol.total_open += inst.opening_cost(i);
}

// Ascending scan with strict improvement keeps the smallest id among equal
// distances, for both the best and the runner-up slot.
inline void scan_two_best(const Instance& inst, PointId j, const std::vector<CenterId>& open,
                          double& best_d, CenterId& best_i, double& sec_d, CenterId& sec_i) {
    best_d = kInf;
    best_i = kNoCenter;
    sec_d = kInf;
    sec_i = kNoCenter;
    for (CenterId i : open) {
        const double d = inst.metric.distance(j, i);
        if (d < best_d) {
            sec_d = best_d;
            sec_i = best_i;
            best_d = d;
            best_i = i;
        } else if (d < sec_d) {
            sec_d = d;
            sec_i = i;
        }
    }
}

struct Cand {
    double d;
    CenterId i;
};

inline bool cand_better(const Cand& a, const Cand& b) {
    return a.d < b.d || (a.d == b.d && a.i < b.i);
}

}  // namespace

std::string format_move(const SwapMove& move) {
    std::ostringstream ss;
    ss << "add{";
    for (std::size_t t = 0; t < move.add.size(); ++t) ss << (t ? "," : "") << move.add[t];
    ss << "} drop{";
    for (std::size_t t = 0; t < move.drop.size(); ++t) ss << (t ? "," : "") << move.drop[t];
    ss << "}";
    return ss.str();
}

Solution evaluate(const Instance& inst, std::vector<CenterId> open) {
    std::sort(open.begin(), open.end());
    check_sorted_unique(open, inst.num_centers(), "open");
    if (open.empty()) throw ValidationError("open", "at least one center must be open");
    if (static_cast<int>(open.size()) > inst.open_budget())
        throw ValidationError("open", "set exceeds the open-center budget");

    const int n = inst.num_points();
    Solution sol;
    sol.open = std::move(open);
    sol.nearest.resize(static_cast<std::size_t>(n));
    sol.nearest_dist.resize(static_cast<std::size_t>(n));
    sol.second.resize(static_cast<std::size_t>(n));
    sol.second_dist.resize(static_cast<std::size_t>(n));

    for (PointId j = 0; j < n; ++j)
        scan_two_best(inst, j, sol.open, sol.nearest_dist[j], sol.nearest[j], sol.second_dist[j],
                      sol.second[j]);

    finalize_assignment(inst, sol);
    return sol;
}

void validate_move(const Instance& inst, const Solution& sol, const SwapMove& move) {
    const int m = inst.num_centers();
    check_sorted_unique(move.add, m, "add");
    check_sorted_unique(move.drop, m, "drop");
    for (CenterId i : move.add)
        if (std::binary_search(sol.open.begin(), sol.open.end(), i))
            throw ValidationError("add", "center " + std::to_string(i) + " is already open");
    for (CenterId i : move.drop)
        if (!std::binary_search(sol.open.begin(), sol.open.end(), i))
            throw ValidationError("drop", "center " + std::to_string(i) + " is not open");
    const int new_size =
        static_cast<int>(sol.open.size() - move.drop.size() + move.add.size());
    if (new_size < 1) throw ValidationError("drop", "move would close every center");
    if (new_size > inst.open_budget())
        throw ValidationError("add", "move exceeds the open-center budget");
}

double delta_of_swap(const Instance& inst, const Solution& sol, const SwapMove& move) {
    validate_move(inst, sol, move);

    const int n = inst.num_points();
    std::vector<double> new_dist(static_cast<std::size_t>(n));
    std::vector<CenterId> survivors;  // only needed when a cache entry dies

    for (PointId j = 0; j < n; ++j) {
        Cand best{kInf, std::numeric_limits<CenterId>::max()};
        const bool nearest_dropped =
            std::binary_search(move.drop.begin(), move.drop.end(), sol.nearest[j]);
        if (!nearest_dropped) {
            best = Cand{sol.nearest_dist[j], sol.nearest[j]};
        } else if (sol.second[j] != kNoCenter &&
                   !std::binary_search(move.drop.begin(), move.drop.end(), sol.second[j])) {
            best = Cand{sol.second_dist[j], sol.second[j]};
        } else {
            if (survivors.empty()) {
                for (CenterId i : sol.open)
                    if (!std::binary_search(move.drop.begin(), move.drop.end(), i))
                        survivors.push_back(i);
            }
            for (CenterId i : survivors) {
                const Cand c{inst.metric.distance(j, i), i};
                if (cand_better(c, best)) best = c;
            }
        }
        for (CenterId i : move.add) {
            const Cand c{inst.metric.distance(j, i), i};
            if (cand_better(c, best)) best = c;
        }
        new_dist[j] = best.d;
    }

    std::vector<PointId> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), OutlierOrder{new_dist});
    std::vector<char> is_outlier(static_cast<std::size_t>(n), 0);
    for (int t = 0; t < inst.z; ++t) is_outlier[order[t]] = 1;

    double new_assign = 0.0;
    for (PointId j = 0; j < n; ++j)
        if (!is_outlier[j]) new_assign += inst.metric.pow_q(new_dist[j]);

    // Summed over the merged set in ascending id order so the result matches
    // evaluate on the swapped set bit-for-bit.
    double new_open_total = 0.0;
    if (!inst.is_kcluster()) {
        std::vector<CenterId> merged;
        merged.reserve(sol.open.size() + move.add.size());
        std::set_difference(sol.open.begin(), sol.open.end(), move.drop.begin(), move.drop.end(),
                            std::back_inserter(merged));
        merged.insert(merged.end(), move.add.begin(), move.add.end());
        std::sort(merged.begin(), merged.end());
        for (CenterId i : merged) new_open_total += inst.opening_cost(i);
    }

    return (new_assign + new_open_total) - (sol.total_assign + sol.total_open);
}

Solution apply_swap(const Instance& inst, const Solution& sol, const SwapMove& move) {
    validate_move(inst, sol, move);

    const int n = inst.num_points();
    Solution out;
    out.open.reserve(sol.open.size() + move.add.size());
    std::set_difference(sol.open.begin(), sol.open.end(), move.drop.begin(), move.drop.end(),
                        std::back_inserter(out.open));
    out.open.insert(out.open.end(), move.add.begin(), move.add.end());
    std::sort(out.open.begin(), out.open.end());

    out.nearest.resize(static_cast<std::size_t>(n));
    out.nearest_dist.resize(static_cast<std::size_t>(n));
    out.second.resize(static_cast<std::size_t>(n));
    out.second_dist.resize(static_cast<std::size_t>(n));

    const Cand sentinel{kInf, std::numeric_limits<CenterId>::max()};
    for (PointId j = 0; j < n; ++j) {
        const bool nearest_dropped =
            std::binary_search(move.drop.begin(), move.drop.end(), sol.nearest[j]);
        const bool second_dropped =
            sol.second[j] != kNoCenter &&
            std::binary_search(move.drop.begin(), move.drop.end(), sol.second[j]);
        if (nearest_dropped || second_dropped) {
            scan_two_best(inst, j, out.open, out.nearest_dist[j], out.nearest[j],
                          out.second_dist[j], out.second[j]);
            continue;
        }
        // Both cached centers survive; only the added centers can displace
        // them, so merge candidates under the (distance, id) order.
        Cand best{sol.nearest_dist[j], sol.nearest[j]};
        Cand sec = sol.second[j] != kNoCenter ? Cand{sol.second_dist[j], sol.second[j]} : sentinel;
        for (CenterId i : move.add) {
            const Cand c{inst.metric.distance(j, i), i};
            if (cand_better(c, best)) {
                sec = best;
                best = c;
            } else if (cand_better(c, sec)) {
                sec = c;
            }
        }
        out.nearest_dist[j] = best.d;
        out.nearest[j] = best.i;
        out.second_dist[j] = sec.d;
        out.second[j] = sec.d == kInf ? kNoCenter : sec.i;
    }

    finalize_assignment(inst, out);
    return out;
}

std::string save_solution(const Solution& sol) {
    nlohmann::json doc = nlohmann::json::object();
    doc["open"] = sol.open;
    doc["outliers"] = sol.outliers;
    doc["sigma"] = sol.sigma;
    doc["cost"] = sol.cost();
    return canonical_dump(doc);
}

void save_solution_file(const Solution& sol, const std::string& path) {
    write_text_file(path, save_solution(sol));
}

std::vector<CenterId> open_set_from_solution(const std::string& json_text) {
    const nlohmann::json doc = parse_json(json_text);
    const auto it = doc.find("open");
    if (!doc.is_object() || it == doc.end() || !it->is_array())
        throw ValidationError("open", "solution document needs an \"open\" array");
    std::vector<CenterId> open;
    for (const auto& v : *it) {
        if (!v.is_number_integer()) throw ValidationError("open", "expected integer center ids");
        open.push_back(v.get<CenterId>());
    }
    return open;
}

std::vector<CenterId> open_set_from_solution_file(const std::string& path) {
    return open_set_from_solution(read_text_file(path));
}

}  // namespace clout
