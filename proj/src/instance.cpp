#include "clout/instance.hpp"

#include <algorithm>

#include "clout/json_util.hpp"

namespace clout {

namespace {

using nlohmann::json;

double get_number(const json& j, const std::string& field) {
    const auto it = j.find(field);
    if (it == j.end() || !it->is_number())
        throw ValidationError(field, "expected a number");
    return it->get<double>();
}

int get_int(const json& j, const std::string& field) {
    const auto it = j.find(field);
    if (it == j.end() || !it->is_number_integer())
        throw ValidationError(field, "expected an integer");
    return it->get<int>();
}

std::vector<std::vector<double>> get_coord_rows(const json& arr, const std::string& field) {
    if (!arr.is_array()) throw ValidationError(field, "expected an array of coordinate rows");
    std::vector<std::vector<double>> rows;
    rows.reserve(arr.size());
    for (std::size_t r = 0; r < arr.size(); ++r) {
        const auto& row = arr[r];
        if (!row.is_array())
            throw ValidationError(field + "[" + std::to_string(r) + "]", "expected an array");
        std::vector<double> out;
        out.reserve(row.size());
        for (const auto& x : row) {
            if (!x.is_number())
                throw ValidationError(field + "[" + std::to_string(r) + "]", "expected numbers");
            out.push_back(x.get<double>());
        }
        rows.push_back(std::move(out));
    }
    return rows;
}

std::vector<std::string> get_labels(const json& j, const std::string& field, std::size_t expected) {
    const auto it = j.find(field);
    if (it == j.end()) return {};
    if (!it->is_array()) throw ValidationError(field, "expected an array of strings");
    std::vector<std::string> out;
    for (const auto& s : *it) {
        if (!s.is_string()) throw ValidationError(field, "expected an array of strings");
        out.push_back(s.get<std::string>());
    }
    if (out.size() != expected)
        throw ValidationError(field, "label count does not match element count");
    return out;
}

}  // namespace

Instance make_instance(MetricSpace metric, ProblemKind kind, int z,
                       std::vector<std::string> point_labels,
                       std::vector<std::string> center_labels, const LoadOptions& options) {
    const int n = metric.num_points();
    const int m = metric.num_centers();

    if (z < 0) throw ValidationError("z", "must be nonnegative");
    if (z > n) throw ValidationError("z", "cannot exceed the number of points");
    if (z == n && !options.allow_degenerate_outliers)
        throw ValidationError("z", "would discard every point (pass the degenerate flag to allow)");

    if (auto* u = std::get_if<UflOutKind>(&kind)) {
        if (u->uniform_cost) {
            if (!std::isfinite(*u->uniform_cost) || *u->uniform_cost < 0.0)
                throw ValidationError("opening_costs", "must be finite and nonnegative");
            u->opening_costs.assign(static_cast<std::size_t>(m), *u->uniform_cost);
        }
        if (static_cast<int>(u->opening_costs.size()) != m)
            throw ValidationError("opening_costs", "need one cost per center");
        for (double f : u->opening_costs)
            if (!std::isfinite(f) || f < 0.0)
                throw ValidationError("opening_costs", "must be finite and nonnegative");
    } else {
        const auto& kc = std::get<KClusterOutKind>(kind);
        if (kc.k < 1) throw ValidationError("k", "must be at least 1");
        if (kc.k > m) throw ValidationError("k", "cannot exceed the number of candidate centers");
        if (!std::isfinite(kc.epsilon) || kc.epsilon < 0.0)
            throw ValidationError("epsilon", "must be finite and nonnegative");
        if (kc.budget() > m)
            throw ValidationError("epsilon", "budget floor((1+epsilon)k) exceeds the candidate pool");
    }

    if (!point_labels.empty() && static_cast<int>(point_labels.size()) != n)
        throw ValidationError("point_labels", "label count does not match points");
    if (!center_labels.empty() && static_cast<int>(center_labels.size()) != m)
        throw ValidationError("center_labels", "label count does not match centers");

    if (options.validate_triangle) metric.validate_triangle();

    Instance inst;
    inst.metric = std::move(metric);
    inst.kind = std::move(kind);
    inst.z = z;
    inst.point_labels = std::move(point_labels);
    inst.center_labels = std::move(center_labels);
    return inst;
}

Instance load_instance(const std::string& json_text, const LoadOptions& options) {
    const json doc = parse_json(json_text);
    if (!doc.is_object()) throw ValidationError("json", "top-level document must be an object");

    const auto kind_it = doc.find("kind");
    if (kind_it == doc.end() || !kind_it->is_string())
        throw ValidationError("kind", "expected \"ufl-out\" or \"kcluster-out\"");
    const std::string kind_name = kind_it->get<std::string>();

    const double q = doc.contains("q") ? get_number(doc, "q") : 1.0;
    const int z = get_int(doc, "z");

    const bool has_points = doc.contains("points") || doc.contains("centers");
    const bool has_matrix = doc.contains("distance_matrix");
    const bool has_graph = doc.contains("graph");
    if (static_cast<int>(has_points) + static_cast<int>(has_matrix) + static_cast<int>(has_graph) != 1)
        throw ValidationError("json",
                              "exactly one of points/centers, distance_matrix, graph required");

    MetricSpace metric = [&] {
        if (has_points) {
            if (!doc.contains("points")) throw ValidationError("points", "required with centers");
            if (!doc.contains("centers")) throw ValidationError("centers", "required with points");
            return MetricSpace::from_euclidean(get_coord_rows(doc["points"], "points"),
                                               get_coord_rows(doc["centers"], "centers"), q);
        }
        if (has_matrix)
            return MetricSpace::from_matrix(get_coord_rows(doc["distance_matrix"], "distance_matrix"), q);

        const auto& g = doc["graph"];
        if (!g.is_object()) throw ValidationError("graph", "expected an object");
        GraphSpec spec;
        spec.num_vertices = get_int(g, "num_vertices");
        const auto edges_it = g.find("edges");
        if (edges_it == g.end() || !edges_it->is_array())
            throw ValidationError("graph.edges", "expected an array of [u, v, w] triples");
        for (std::size_t e = 0; e < edges_it->size(); ++e) {
            const auto& triple = (*edges_it)[e];
            if (!triple.is_array() || triple.size() != 3 || !triple[0].is_number_integer() ||
                !triple[1].is_number_integer() || !triple[2].is_number())
                throw ValidationError("graph.edges[" + std::to_string(e) + "]",
                                      "expected [u, v, w]");
            spec.edges.push_back({triple[0].get<int>(), triple[1].get<int>(), triple[2].get<double>()});
        }
        auto get_vertex_list = [&](const char* field) {
            const auto it = g.find(field);
            if (it == g.end() || !it->is_array())
                throw ValidationError(std::string("graph.") + field, "expected an array of vertex ids");
            std::vector<int> out;
            for (const auto& v : *it) {
                if (!v.is_number_integer())
                    throw ValidationError(std::string("graph.") + field, "expected integers");
                out.push_back(v.get<int>());
            }
            return out;
        };
        spec.point_vertices = get_vertex_list("point_vertices");
        spec.center_vertices = get_vertex_list("center_vertices");
        return MetricSpace::from_graph(std::move(spec), q);
    }();

    ProblemKind kind;
    if (kind_name == "ufl-out") {
        UflOutKind u;
        const auto oc = doc.find("opening_costs");
        if (oc == doc.end()) {
            u.uniform_cost = 1.0;
        } else if (oc->is_number()) {
            u.uniform_cost = oc->get<double>();
        } else if (oc->is_array()) {
            for (const auto& f : *oc) {
                if (!f.is_number()) throw ValidationError("opening_costs", "expected numbers");
                u.opening_costs.push_back(f.get<double>());
            }
        } else {
            throw ValidationError("opening_costs", "expected a number or an array");
        }
        kind = std::move(u);
    } else if (kind_name == "kcluster-out") {
        KClusterOutKind kc;
        kc.k = get_int(doc, "k");
        kc.epsilon = doc.contains("epsilon") ? get_number(doc, "epsilon") : 0.0;
        kind = kc;
    } else {
        throw ValidationError("kind", "unknown kind \"" + kind_name + "\"");
    }

    auto point_labels = get_labels(doc, "point_labels", metric.num_points());
    auto center_labels = get_labels(doc, "center_labels", metric.num_centers());

    return make_instance(std::move(metric), std::move(kind), z, std::move(point_labels),
                         std::move(center_labels), options);
}

Instance load_instance_file(const std::string& path, const LoadOptions& options) {
    return load_instance(read_text_file(path), options);
}

std::string save_instance(const Instance& inst) {
    json doc = json::object();
    doc["z"] = inst.z;
    doc["q"] = inst.metric.exponent();

    if (const auto* u = std::get_if<UflOutKind>(&inst.kind)) {
        doc["kind"] = "ufl-out";
        if (u->uniform_cost) doc["opening_costs"] = *u->uniform_cost;
        else doc["opening_costs"] = u->opening_costs;
    } else {
        const auto& kc = std::get<KClusterOutKind>(inst.kind);
        doc["kind"] = "kcluster-out";
        doc["k"] = kc.k;
        doc["epsilon"] = kc.epsilon;
    }

    switch (inst.metric.backend()) {
        case MetricBackend::Euclidean:
            doc["points"] = inst.metric.point_coords();
            doc["centers"] = inst.metric.center_coords();
            break;
        case MetricBackend::Matrix:
            doc["distance_matrix"] = inst.metric.matrix_rows();
            break;
        case MetricBackend::Graph: {
            const auto& g = inst.metric.graph();
            json gj = json::object();
            gj["num_vertices"] = g.num_vertices;
            json edges = json::array();
            for (const auto& e : g.edges) edges.push_back(json::array({e.u, e.v, e.w}));
            gj["edges"] = std::move(edges);
            gj["point_vertices"] = g.point_vertices;
            gj["center_vertices"] = g.center_vertices;
            doc["graph"] = std::move(gj);
            break;
        }
    }

    if (!inst.point_labels.empty()) doc["point_labels"] = inst.point_labels;
    if (!inst.center_labels.empty()) doc["center_labels"] = inst.center_labels;

    return canonical_dump(doc);
}

void save_instance_file(const Instance& inst, const std::string& path) {
    write_text_file(path, save_instance(inst));
}

bool Instance::operator==(const Instance& other) const {
    if (!(metric == other.metric) || z != other.z) return false;
    if (point_labels != other.point_labels || center_labels != other.center_labels) return false;
    if (kind.index() != other.kind.index()) return false;
    if (const auto* u = std::get_if<UflOutKind>(&kind)) {
        const auto& v = std::get<UflOutKind>(other.kind);
        return u->uniform_cost == v.uniform_cost && u->opening_costs == v.opening_costs;
    }
    const auto& a = std::get<KClusterOutKind>(kind);
    const auto& b = std::get<KClusterOutKind>(other.kind);
    return a.k == b.k && a.epsilon == b.epsilon;
}

}  // namespace clout
