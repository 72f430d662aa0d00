#include "clout/metric.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

namespace clout {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_exponent(double q) {
    if (!(q >= 1.0) || !std::isfinite(q))
        throw ValidationError("q", "cost exponent must be finite and >= 1");
}

void check_weight(double w, const std::string& where) {
    if (!std::isfinite(w) || w < 0.0)
        throw ValidationError(where, "must be finite and nonnegative");
}

}  // namespace

MetricSpace MetricSpace::from_matrix(std::vector<std::vector<double>> dist, double q) {
    check_exponent(q);
    if (dist.empty()) throw ValidationError("distance_matrix", "needs at least one row");
    const std::size_t cols = dist[0].size();
    if (cols == 0) throw ValidationError("distance_matrix", "needs at least one column");
    for (std::size_t r = 0; r < dist.size(); ++r) {
        if (dist[r].size() != cols)
            throw ValidationError("distance_matrix[" + std::to_string(r) + "]", "ragged row");
        for (std::size_t c = 0; c < cols; ++c)
            check_weight(dist[r][c], "distance_matrix[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }

    MetricSpace ms;
    ms.backend_ = MetricBackend::Matrix;
    ms.q_ = q;
    ms.n_ = static_cast<int>(dist.size());
    ms.m_ = static_cast<int>(cols);
    ms.table_.reserve(static_cast<std::size_t>(ms.n_) * ms.m_);
    for (const auto& row : dist)
        for (double d : row) ms.table_.push_back(d);
    ms.table_ready_ = true;
    ms.matrix_ = std::move(dist);
    return ms;
}

MetricSpace MetricSpace::from_euclidean(std::vector<std::vector<double>> points,
                                        std::vector<std::vector<double>> centers, double q) {
    check_exponent(q);
    if (points.empty()) throw ValidationError("points", "needs at least one point");
    if (centers.empty()) throw ValidationError("centers", "needs at least one center");
    const std::size_t dim = points[0].size();
    if (dim == 0) throw ValidationError("points", "zero-dimensional coordinates");
    auto check_coords = [&](const std::vector<std::vector<double>>& rows, const char* name) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != dim)
                throw ValidationError(std::string(name) + "[" + std::to_string(r) + "]",
                                      "dimension mismatch");
            for (double x : rows[r])
                if (!std::isfinite(x))
                    throw ValidationError(std::string(name) + "[" + std::to_string(r) + "]",
                                          "coordinate not finite");
        }
    };
    check_coords(points, "points");
    check_coords(centers, "centers");

    MetricSpace ms;
    ms.backend_ = MetricBackend::Euclidean;
    ms.q_ = q;
    ms.n_ = static_cast<int>(points.size());
    ms.m_ = static_cast<int>(centers.size());
    ms.points_ = std::move(points);
    ms.centers_ = std::move(centers);
    return ms;
}

MetricSpace MetricSpace::from_graph(GraphSpec graph, double q) {
    check_exponent(q);
    if (graph.num_vertices <= 0) throw ValidationError("graph.num_vertices", "must be positive");
    if (graph.point_vertices.empty()) throw ValidationError("graph.point_vertices", "needs at least one point");
    if (graph.center_vertices.empty()) throw ValidationError("graph.center_vertices", "needs at least one center");
    auto check_vertex = [&](int v, const std::string& where) {
        if (v < 0 || v >= graph.num_vertices)
            throw ValidationError(where, "vertex id out of range");
    };
    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
        const auto& ed = graph.edges[e];
        check_vertex(ed.u, "graph.edges[" + std::to_string(e) + "]");
        check_vertex(ed.v, "graph.edges[" + std::to_string(e) + "]");
        check_weight(ed.w, "graph.edges[" + std::to_string(e) + "]");
    }
    for (std::size_t j = 0; j < graph.point_vertices.size(); ++j)
        check_vertex(graph.point_vertices[j], "graph.point_vertices[" + std::to_string(j) + "]");
    for (std::size_t i = 0; i < graph.center_vertices.size(); ++i)
        check_vertex(graph.center_vertices[i], "graph.center_vertices[" + std::to_string(i) + "]");

    MetricSpace ms;
    ms.backend_ = MetricBackend::Graph;
    ms.q_ = q;
    ms.n_ = static_cast<int>(graph.point_vertices.size());
    ms.m_ = static_cast<int>(graph.center_vertices.size());
    ms.graph_ = std::move(graph);
    ms.build_graph_table();
    return ms;
}

double MetricSpace::euclidean_distance(PointId j, CenterId i) const {
    const auto& p = points_[j];
    const auto& c = centers_[i];
    double s = 0.0;
    for (std::size_t d = 0; d < p.size(); ++d) {
        const double diff = p[d] - c[d];
        s += diff * diff;
    }
    return std::sqrt(s);
}

bool MetricSpace::precompute(std::size_t budget_entries) {
    if (table_ready_) return true;
    const std::size_t entries = static_cast<std::size_t>(n_) * static_cast<std::size_t>(m_);
    if (entries > budget_entries) return false;
    table_.resize(entries);
    for (PointId j = 0; j < n_; ++j)
        for (CenterId i = 0; i < m_; ++i)
            table_[static_cast<std::size_t>(j) * m_ + i] = euclidean_distance(j, i);
    table_ready_ = true;
    return true;
}

void MetricSpace::build_graph_table() {
    const int V = graph_.num_vertices;
    std::vector<std::vector<std::pair<int, double>>> adj(V);
    for (const auto& e : graph_.edges) {
        adj[e.u].emplace_back(e.v, e.w);
        adj[e.v].emplace_back(e.u, e.w);
    }

    table_.assign(static_cast<std::size_t>(n_) * m_, kInf);

    if (V <= 64) {
        // Dense all-pairs pass; cheap at this size.
        std::vector<double> d(static_cast<std::size_t>(V) * V, kInf);
        for (int v = 0; v < V; ++v) d[static_cast<std::size_t>(v) * V + v] = 0.0;
        for (const auto& e : graph_.edges) {
            auto& duv = d[static_cast<std::size_t>(e.u) * V + e.v];
            duv = std::min(duv, e.w);
            auto& dvu = d[static_cast<std::size_t>(e.v) * V + e.u];
            dvu = std::min(dvu, e.w);
        }
        for (int k = 0; k < V; ++k)
            for (int i = 0; i < V; ++i) {
                const double dik = d[static_cast<std::size_t>(i) * V + k];
                if (dik == kInf) continue;
                for (int j = 0; j < V; ++j) {
                    const double cand = dik + d[static_cast<std::size_t>(k) * V + j];
                    auto& dij = d[static_cast<std::size_t>(i) * V + j];
                    if (cand < dij) dij = cand;
                }
            }
        for (PointId j = 0; j < n_; ++j)
            for (CenterId i = 0; i < m_; ++i)
                table_[static_cast<std::size_t>(j) * m_ + i] =
                    d[static_cast<std::size_t>(graph_.point_vertices[j]) * V + graph_.center_vertices[i]];
    } else {
        // One Dijkstra per candidate center.
        std::vector<double> dist(V);
        using Item = std::pair<double, int>;
        for (CenterId i = 0; i < m_; ++i) {
            std::fill(dist.begin(), dist.end(), kInf);
            std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
            dist[graph_.center_vertices[i]] = 0.0;
            pq.emplace(0.0, graph_.center_vertices[i]);
            while (!pq.empty()) {
                auto [dv, v] = pq.top();
                pq.pop();
                if (dv > dist[v]) continue;
                for (auto [w, len] : adj[v]) {
                    const double cand = dv + len;
                    if (cand < dist[w]) {
                        dist[w] = cand;
                        pq.emplace(cand, w);
                    }
                }
            }
            for (PointId j = 0; j < n_; ++j)
                table_[static_cast<std::size_t>(j) * m_ + i] = dist[graph_.point_vertices[j]];
        }
    }

    for (PointId j = 0; j < n_; ++j)
        for (CenterId i = 0; i < m_; ++i)
            if (!std::isfinite(table_[static_cast<std::size_t>(j) * m_ + i]))
                throw ValidationError("graph",
                                      "point " + std::to_string(j) + " cannot reach center " +
                                          std::to_string(i));
    table_ready_ = true;
}

void MetricSpace::validate_triangle(double tol) const {
    if (backend_ != MetricBackend::Matrix) return;

    // Center-to-center distance is only observable through the points:
    // D(i,i') = min_j d(j,i) + d(j,i').
    std::vector<double> cc(static_cast<std::size_t>(m_) * m_, kInf);
    for (CenterId a = 0; a < m_; ++a)
        for (CenterId b = 0; b < m_; ++b) {
            double best = kInf;
            for (PointId j = 0; j < n_; ++j)
                best = std::min(best, distance(j, a) + distance(j, b));
            cc[static_cast<std::size_t>(a) * m_ + b] = best;
        }

    for (PointId j = 0; j < n_; ++j)
        for (CenterId a = 0; a < m_; ++a)
            for (CenterId b = 0; b < m_; ++b) {
                const double direct = distance(j, a);
                const double detour = distance(j, b) + cc[static_cast<std::size_t>(b) * m_ + a];
                if (direct > detour + tol_for(direct, detour, tol))
                    throw ValidationError("distance_matrix",
                                          "rectangle inequality violated at point " +
                                              std::to_string(j) + ", centers " + std::to_string(a) +
                                              "," + std::to_string(b));
            }
}

bool MetricSpace::operator==(const MetricSpace& other) const {
    if (backend_ != other.backend_ || q_ != other.q_ || n_ != other.n_ || m_ != other.m_)
        return false;
    switch (backend_) {
        case MetricBackend::Matrix:
            return matrix_ == other.matrix_;
        case MetricBackend::Euclidean:
            return points_ == other.points_ && centers_ == other.centers_;
        case MetricBackend::Graph: {
            const auto& g = graph_;
            const auto& h = other.graph_;
            if (g.num_vertices != h.num_vertices || g.point_vertices != h.point_vertices ||
                g.center_vertices != h.center_vertices || g.edges.size() != h.edges.size())
                return false;
            for (std::size_t e = 0; e < g.edges.size(); ++e)
                if (g.edges[e].u != h.edges[e].u || g.edges[e].v != h.edges[e].v ||
                    g.edges[e].w != h.edges[e].w)
                    return false;
            return true;
        }
    }
    return false;
}

}  // namespace clout
