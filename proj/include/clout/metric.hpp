#pragma once

#include <cstddef>
#include <vector>

#include "clout/common.hpp"

namespace clout {

enum class MetricBackend { Matrix, Euclidean, Graph };

struct GraphSpec {
    struct Edge {
        int u;
        int v;
        double w;
    };
    int num_vertices = 0;
    std::vector<Edge> edges;            // undirected, nonnegative weights
    std::vector<int> point_vertices;    // embedding of point j
    std::vector<int> center_vertices;   // embedding of center i
};

// Point-to-candidate-center distances with an attached cost exponent q >= 1.
// Assignment costs are distance^q (q=1 median-style, q=2 means-style).
//
// Matrix and Graph backends materialise the full n x m table at construction;
// the Euclidean backend computes distances on demand until precompute() is
// called. Instances are immutable after construction except for precompute(),
// so concurrent readers are safe once setup is done.
class MetricSpace {
public:
    MetricSpace() = default;  // empty; assign from a factory before use

    static MetricSpace from_matrix(std::vector<std::vector<double>> dist, double q);
    static MetricSpace from_euclidean(std::vector<std::vector<double>> points,
                                      std::vector<std::vector<double>> centers, double q);
    static MetricSpace from_graph(GraphSpec graph, double q);

    MetricBackend backend() const { return backend_; }
    int num_points() const { return n_; }
    int num_centers() const { return m_; }
    double exponent() const { return q_; }

    double distance(PointId j, CenterId i) const {
        if (table_ready_) return table_[static_cast<std::size_t>(j) * m_ + i];
        return euclidean_distance(j, i);
    }

    double assign_cost(PointId j, CenterId i) const { return pow_q(distance(j, i)); }

    double pow_q(double d) const {
        if (q_ == 1.0) return d;
        if (q_ == 2.0) return d * d;
        return std::pow(d, q_);
    }

    // Fills the distance table unless it would exceed budget_entries.
    // Returns true when the table is available afterwards. Cached values are
    // produced by the same code path as on-demand lookups.
    bool precompute(std::size_t budget_entries = kDefaultPrecomputeBudget);
    bool precomputed() const { return table_ready_; }

    // Rectangle-inequality audit for explicit matrices: d(j,i) must not beat
    // every detour d(j,i') + d(j',i') + d(j',i) by more than tol. O(n * m^2).
    // Geometric and shortest-path backends satisfy this by construction, so
    // the check is a no-op for them.
    void validate_triangle(double tol = kRelTol) const;

    // Raw backend data, retained for serialisation round-trips.
    const std::vector<std::vector<double>>& matrix_rows() const { return matrix_; }
    const std::vector<std::vector<double>>& point_coords() const { return points_; }
    const std::vector<std::vector<double>>& center_coords() const { return centers_; }
    const GraphSpec& graph() const { return graph_; }

    bool operator==(const MetricSpace& other) const;

    static constexpr std::size_t kDefaultPrecomputeBudget = 1u << 24;

private:
    double euclidean_distance(PointId j, CenterId i) const;
    void build_graph_table();

    MetricBackend backend_ = MetricBackend::Matrix;
    double q_ = 1.0;
    int n_ = 0;
    int m_ = 0;

    std::vector<double> table_;  // row-major n x m, valid iff table_ready_
    bool table_ready_ = false;

    std::vector<std::vector<double>> matrix_;   // Matrix backend input
    std::vector<std::vector<double>> points_;   // Euclidean backend input
    std::vector<std::vector<double>> centers_;
    GraphSpec graph_;                           // Graph backend input
};

}  // namespace clout
