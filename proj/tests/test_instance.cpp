#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "clout/gap.hpp"
#include "clout/instance.hpp"

using namespace clout;

namespace {

const char* kKClusterDoc = R"({
  "kind": "kcluster-out",
  "k": 2,
  "epsilon": 0.5,
  "z": 1,
  "q": 2,
  "points": [[0.0, 0.0], [1.0, 0.0], [10.0, 10.0]],
  "centers": [[0.0, 0.0], [1.0, 0.0], [10.0, 10.0]]
})";

const char* kUflMatrixDoc = R"({
  "kind": "ufl-out",
  "z": 0,
  "opening_costs": [3.0, 0.25],
  "distance_matrix": [[1.0, 2.0], [0.5, 0.125]]
})";

}  // namespace

TEST_CASE("kcluster document loads with all fields") {
    const Instance inst = load_instance(kKClusterDoc);
    CHECK(inst.is_kcluster());
    CHECK(inst.num_points() == 3);
    CHECK(inst.num_centers() == 3);
    CHECK(inst.z == 1);
    CHECK(inst.metric.exponent() == 2.0);
    CHECK(inst.kcluster().k == 2);
    CHECK(inst.kcluster().epsilon == 0.5);
    CHECK(inst.open_budget() == 3);  // floor(1.5 * 2)
}

TEST_CASE("budget is floor((1+epsilon)k) and is validated against the pool") {
    // 1.2 * 5 lands just under 6.0 in floating point; the floor must still be 6.
    const std::string doc = R"({
      "kind": "kcluster-out", "k": 5, "epsilon": 0.2, "z": 0,
      "distance_matrix": [[0,0,0,0,0,0],[0,0,0,0,0,0],[0,0,0,0,0,0],
                          [0,0,0,0,0,0],[0,0,0,0,0,0],[0,0,0,0,0,0]]
    })";
    const Instance inst = load_instance(doc);
    CHECK(inst.open_budget() == 6);

    KClusterOutKind kc;
    kc.k = 3;
    kc.epsilon = 0.0;
    CHECK(kc.budget() == 3);
    kc.epsilon = 0.34;
    CHECK(kc.budget() == 4);
}

TEST_CASE("ufl matrix document loads with per-center costs") {
    const Instance inst = load_instance(kUflMatrixDoc);
    CHECK_FALSE(inst.is_kcluster());
    CHECK(inst.metric.exponent() == 1.0);  // q defaults to 1
    CHECK(inst.opening_cost(0) == 3.0);
    CHECK(inst.opening_cost(1) == 0.25);
    CHECK(inst.open_budget() == 2);  // no cardinality cap: every center may open
    CHECK_FALSE(inst.ufl().uniform_cost.has_value());
}

TEST_CASE("absent opening costs mean uniform one, scalar means uniform") {
    const std::string base = R"({"kind": "ufl-out", "z": 0, "distance_matrix": [[1.0, 2.0]])";
    const Instance absent = load_instance(base + "}");
    CHECK(absent.opening_cost(0) == 1.0);
    CHECK(absent.opening_cost(1) == 1.0);
    CHECK(absent.ufl().uniform_cost == 1.0);

    const Instance scalar = load_instance(base + R"(, "opening_costs": 2.5})");
    CHECK(scalar.opening_cost(0) == 2.5);
    CHECK(scalar.ufl().uniform_cost == 2.5);
}

TEST_CASE("save then load is the identity on every backend") {
    // Euclidean, with doubles that do not have short decimal forms.
    {
        Instance inst = make_instance(
            MetricSpace::from_euclidean({{0.1, 0.2}, {1e-17, 3.0}}, {{2.0 / 3.0, 1e6}}, 2.0),
            KClusterOutKind{1, 0.0}, 1, {"a", "b"}, {"c"});
        const std::string text = save_instance(inst);
        const Instance back = load_instance(text);
        CHECK(back == inst);
        CHECK(save_instance(back) == text);  // canonical form is a fixed point
    }
    // Matrix with scalar opening cost.
    {
        const Instance inst = load_instance(
            R"({"kind": "ufl-out", "z": 1, "q": 1.5, "opening_costs": 0.7,
                "distance_matrix": [[0.3, 0.9], [1.7, 0.0]]})");
        const Instance back = load_instance(save_instance(inst));
        CHECK(back == inst);
        CHECK(back.ufl().uniform_cost == 0.7);
        CHECK(save_instance(back) == save_instance(inst));
    }
    // Graph.
    {
        GraphSpec g;
        g.num_vertices = 4;
        g.edges = {{0, 1, 0.5}, {1, 2, 0.25}, {2, 3, 0.125}};
        g.point_vertices = {0, 3};
        g.center_vertices = {1, 2};
        const Instance inst =
            make_instance(MetricSpace::from_graph(std::move(g), 1.0), UflOutKind{1.0, {}}, 0);
        const Instance back = load_instance(save_instance(inst));
        CHECK(back == inst);
        CHECK(back.metric.distance(0, 1) == 0.75);
        CHECK(save_instance(back) == save_instance(inst));
    }
}

TEST_CASE("generated gap instances survive the round trip byte for byte") {
    const GapInstance ufl = make_ufl_gap({2, 5});
    const std::string a = save_instance(ufl.instance);
    CHECK(load_instance(a) == ufl.instance);
    CHECK(save_instance(load_instance(a)) == a);

    KClusterGapParams p;
    p.k = 3;
    p.z = 8;
    p.beta = 1.0;
    p.gamma = 1.75;
    p.q = 2.0;
    const GapInstance ring = make_kcluster_gap(p);
    const std::string b = save_instance(ring.instance);
    CHECK(load_instance(b) == ring.instance);
    CHECK(save_instance(load_instance(b)) == b);
}

TEST_CASE("labels are preserved and validated") {
    const std::string doc = R"({
      "kind": "ufl-out", "z": 0, "distance_matrix": [[1.0], [2.0]],
      "point_labels": ["p0", "p1"], "center_labels": ["hub"]
    })";
    const Instance inst = load_instance(doc);
    CHECK(inst.point_labels == std::vector<std::string>{"p0", "p1"});
    CHECK(inst.center_labels == std::vector<std::string>{"hub"});
    const Instance back = load_instance(save_instance(inst));
    CHECK(back.point_labels == inst.point_labels);

    const std::string bad = R"({
      "kind": "ufl-out", "z": 0, "distance_matrix": [[1.0], [2.0]],
      "point_labels": ["only-one"]
    })";
    CHECK_THROWS_AS(load_instance(bad), ValidationError);
}

TEST_CASE("load rejects malformed documents with field context") {
    auto field_of = [](const std::string& doc) {
        try {
            load_instance(doc);
        } catch (const ValidationError& e) {
            return std::string(e.field());
        }
        return std::string("(no error)");
    };

    CHECK(field_of("not json at all") == "json");
    CHECK(field_of(R"({"z": 0, "distance_matrix": [[1.0]]})") == "kind");
    CHECK(field_of(R"({"kind": "mystery", "z": 0, "distance_matrix": [[1.0]]})") == "kind");
    CHECK(field_of(R"({"kind": "ufl-out", "distance_matrix": [[1.0]]})") == "z");
    CHECK(field_of(R"({"kind": "ufl-out", "z": 0})") == "json");  // no backend at all
    CHECK(field_of(R"({"kind": "ufl-out", "z": 0, "distance_matrix": [[1.0]],
                       "points": [[0.0]], "centers": [[0.0]]})") == "json");
    CHECK(field_of(R"({"kind": "kcluster-out", "z": 0, "distance_matrix": [[1.0]]})") == "k");
    CHECK(field_of(R"({"kind": "ufl-out", "z": 0, "opening_costs": "free",
                       "distance_matrix": [[1.0]]})") == "opening_costs");
    CHECK(field_of(R"({"kind": "ufl-out", "z": 0, "graph": {"num_vertices": 1,
                       "point_vertices": [0], "center_vertices": [0]}})") == "graph.edges");
}

TEST_CASE("semantic validation catches impossible parameters") {
    const std::string mat1 = R"("distance_matrix": [[1.0]])";
    CHECK_THROWS_AS(load_instance(R"({"kind": "ufl-out", "z": 2, )" + mat1 + "}"),
                    ValidationError);
    CHECK_THROWS_AS(load_instance(R"({"kind": "ufl-out", "z": -1, )" + mat1 + "}"),
                    ValidationError);
    CHECK_THROWS_AS(load_instance(R"({"kind": "kcluster-out", "k": 2, "z": 0, )" + mat1 + "}"),
                    ValidationError);
    CHECK_THROWS_AS(load_instance(R"({"kind": "kcluster-out", "k": 0, "z": 0, )" + mat1 + "}"),
                    ValidationError);
    CHECK_THROWS_AS(
        load_instance(R"({"kind": "kcluster-out", "k": 1, "epsilon": -0.1, "z": 0, )" + mat1 + "}"),
        ValidationError);
    CHECK_THROWS_AS(load_instance(R"({"kind": "ufl-out", "z": 0, "opening_costs": -1.0, )" +
                                  mat1 + "}"),
                    ValidationError);
    // Budget floor((1+eps)k) must fit in the candidate pool.
    CHECK_THROWS_AS(
        load_instance(R"({"kind": "kcluster-out", "k": 1, "epsilon": 1.0, "z": 0, )" + mat1 + "}"),
        ValidationError);
}

TEST_CASE("dropping every point requires the degenerate flag") {
    const std::string doc = R"({"kind": "ufl-out", "z": 1, "distance_matrix": [[1.0]]})";
    CHECK_THROWS_AS(load_instance(doc), ValidationError);
    LoadOptions opt;
    opt.allow_degenerate_outliers = true;
    const Instance inst = load_instance(doc, opt);
    CHECK(inst.z == inst.num_points());
}

TEST_CASE("optional triangle audit runs on load") {
    const std::string doc = R"({
      "kind": "ufl-out", "z": 0,
      "distance_matrix": [[0.1, 0.1], [100.0, 0.0]]
    })";
    CHECK_NOTHROW(load_instance(doc));
    LoadOptions opt;
    opt.validate_triangle = true;
    CHECK_THROWS_AS(load_instance(doc, opt), ValidationError);
}
