#pragma once

#include <climits>
#include <cmath>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "clout/common.hpp"
#include "clout/metric.hpp"

namespace clout {

// Facility-location variant: every candidate center carries an opening cost.
// A bare scalar means the same cost for all centers and is preserved as such
// when the instance is written back out.
struct UflOutKind {
    std::optional<double> uniform_cost;  // set iff given as a scalar
    std::vector<double> opening_costs;   // always one entry per center
};

// Cardinality variant: at most k clusters, optionally relaxed to a budget of
// floor((1+epsilon) k) open centers.
struct KClusterOutKind {
    int k = 1;
    double epsilon = 0.0;

    int budget() const {
        // Nudge before flooring: (1+eps)*k can land just below an integer.
        return static_cast<int>(std::floor((1.0 + epsilon) * k + 1e-9));
    }
};

using ProblemKind = std::variant<UflOutKind, KClusterOutKind>;

struct LoadOptions {
    bool allow_degenerate_outliers = false;  // permit z == |points|
    bool validate_triangle = false;          // audit explicit matrices
};

struct Instance {
    MetricSpace metric;
    ProblemKind kind;
    int z = 0;  // number of points left unassigned

    std::vector<std::string> point_labels;   // optional, empty or size n
    std::vector<std::string> center_labels;  // optional, empty or size m

    int num_points() const { return metric.num_points(); }
    int num_centers() const { return metric.num_centers(); }

    bool is_kcluster() const { return std::holds_alternative<KClusterOutKind>(kind); }

    const KClusterOutKind& kcluster() const { return std::get<KClusterOutKind>(kind); }
    const UflOutKind& ufl() const { return std::get<UflOutKind>(kind); }

    // Max open centers a solution may use. Facility instances are limited
    // only by the candidate pool.
    int open_budget() const {
        return is_kcluster() ? kcluster().budget() : num_centers();
    }

    double opening_cost(CenterId i) const {
        if (const auto* u = std::get_if<UflOutKind>(&kind)) return u->opening_costs[i];
        return 0.0;
    }

    bool operator==(const Instance& other) const;
};

// Validates invariants shared by every construction path (JSON and in-code).
Instance make_instance(MetricSpace metric, ProblemKind kind, int z,
                       std::vector<std::string> point_labels = {},
                       std::vector<std::string> center_labels = {},
                       const LoadOptions& options = {});

Instance load_instance(const std::string& json_text, const LoadOptions& options = {});
Instance load_instance_file(const std::string& path, const LoadOptions& options = {});

std::string save_instance(const Instance& inst);
void save_instance_file(const Instance& inst, const std::string& path);

}  // namespace clout
