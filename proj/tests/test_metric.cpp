#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "clout/metric.hpp"

using namespace clout;

namespace {

// Reference all-pairs shortest paths, written independently of the library:
// plain Floyd-Warshall over the full vertex set, ascending k, i, j.
std::vector<std::vector<double>> reference_apsp(int V, const std::vector<GraphSpec::Edge>& edges) {
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<std::vector<double>> d(V, std::vector<double>(V, inf));
    for (int v = 0; v < V; ++v) d[v][v] = 0.0;
    for (const auto& e : edges) {
        d[e.u][e.v] = std::min(d[e.u][e.v], e.w);
        d[e.v][e.u] = std::min(d[e.v][e.u], e.w);
    }
    for (int k = 0; k < V; ++k)
        for (int i = 0; i < V; ++i)
            for (int j = 0; j < V; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    return d;
}

GraphSpec random_connected_graph(std::mt19937_64& rng, int V, int extra_edges) {
    GraphSpec g;
    g.num_vertices = V;
    auto w = [&] { return static_cast<double>(rng() % 1000) / 100.0; };
    for (int v = 1; v < V; ++v)
        g.edges.push_back({static_cast<int>(rng() % static_cast<std::uint64_t>(v)), v, w()});
    for (int e = 0; e < extra_edges; ++e) {
        const int u = static_cast<int>(rng() % static_cast<std::uint64_t>(V));
        const int v = static_cast<int>(rng() % static_cast<std::uint64_t>(V));
        if (u != v) g.edges.push_back({u, v, w()});
    }
    return g;
}

}  // namespace

TEST_CASE("matrix backend returns entries as given") {
    const std::vector<std::vector<double>> d{{1.0, 2.5}, {0.0, 7.0}, {3.0, 4.0}};
    const MetricSpace ms = MetricSpace::from_matrix(d, 1.0);
    CHECK(ms.num_points() == 3);
    CHECK(ms.num_centers() == 2);
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 2; ++i) CHECK(ms.distance(j, i) == d[j][i]);
    CHECK(ms.precomputed());
}

TEST_CASE("assignment cost is distance to the exponent") {
    const std::vector<std::vector<double>> d{{3.0}};
    CHECK(MetricSpace::from_matrix(d, 1.0).assign_cost(0, 0) == 3.0);
    CHECK(MetricSpace::from_matrix(d, 2.0).assign_cost(0, 0) == 9.0);
    CHECK(MetricSpace::from_matrix(d, 1.5).assign_cost(0, 0) == doctest::Approx(std::pow(3.0, 1.5)).epsilon(1e-12));
}

TEST_CASE("matrix validation rejects bad input") {
    CHECK_THROWS_AS(MetricSpace::from_matrix({}, 1.0), ValidationError);
    CHECK_THROWS_AS(MetricSpace::from_matrix({{1.0}, {1.0, 2.0}}, 1.0), ValidationError);
    CHECK_THROWS_AS(MetricSpace::from_matrix({{-1.0}}, 1.0), ValidationError);
    CHECK_THROWS_AS(MetricSpace::from_matrix({{std::nan("")}}, 1.0), ValidationError);
    CHECK_THROWS_AS(MetricSpace::from_matrix({{1.0}}, 0.5), ValidationError);
}

TEST_CASE("euclidean distances match the closed form") {
    const MetricSpace ms =
        MetricSpace::from_euclidean({{0.0, 0.0}, {3.0, 4.0}}, {{0.0, 0.0}, {3.0, 0.0}}, 2.0);
    CHECK(ms.distance(0, 0) == 0.0);
    CHECK(ms.distance(1, 0) == 5.0);
    CHECK(ms.distance(0, 1) == 3.0);
    CHECK(ms.distance(1, 1) == 4.0);
    CHECK(ms.assign_cost(1, 0) == 25.0);
}

TEST_CASE("euclidean validation rejects bad coordinates") {
    CHECK_THROWS_AS(MetricSpace::from_euclidean({}, {{0.0}}, 1.0), ValidationError);
    CHECK_THROWS_AS(MetricSpace::from_euclidean({{0.0}}, {}, 1.0), ValidationError);
    CHECK_THROWS_AS(MetricSpace::from_euclidean({{0.0, 1.0}}, {{0.0}}, 1.0), ValidationError);
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(MetricSpace::from_euclidean({{inf}}, {{0.0}}, 1.0), ValidationError);
}

TEST_CASE("precompute changes nothing about the values") {
    std::mt19937_64 rng(42);
    std::vector<std::vector<double>> pts(20, std::vector<double>(3));
    std::vector<std::vector<double>> ctr(6, std::vector<double>(3));
    for (auto& row : pts)
        for (double& x : row) x = static_cast<double>(rng() % 1000) / 250.0;
    for (auto& row : ctr)
        for (double& x : row) x = static_cast<double>(rng() % 1000) / 250.0;

    MetricSpace ms = MetricSpace::from_euclidean(pts, ctr, 2.0);
    CHECK_FALSE(ms.precomputed());
    std::vector<double> before;
    for (int j = 0; j < ms.num_points(); ++j)
        for (int i = 0; i < ms.num_centers(); ++i) before.push_back(ms.distance(j, i));

    CHECK(ms.precompute());
    CHECK(ms.precomputed());
    std::size_t t = 0;
    for (int j = 0; j < ms.num_points(); ++j)
        for (int i = 0; i < ms.num_centers(); ++i) CHECK(ms.distance(j, i) == before[t++]);
}

TEST_CASE("precompute declines when the table would blow the budget") {
    MetricSpace ms = MetricSpace::from_euclidean({{0.0}, {1.0}, {2.0}}, {{0.0}, {1.0}}, 1.0);
    CHECK_FALSE(ms.precompute(5));  // 3 x 2 table needs 6 entries
    CHECK_FALSE(ms.precomputed());
    CHECK(ms.distance(2, 0) == 2.0);
    CHECK(ms.precompute(6));
}

TEST_CASE("small graphs match the dense reference exactly") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        const int V = 3 + static_cast<int>(rng() % 30);
        GraphSpec g = random_connected_graph(rng, V, V);
        const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(V));
        const int m = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(V));
        for (int j = 0; j < n; ++j)
            g.point_vertices.push_back(static_cast<int>(rng() % static_cast<std::uint64_t>(V)));
        for (int i = 0; i < m; ++i)
            g.center_vertices.push_back(static_cast<int>(rng() % static_cast<std::uint64_t>(V)));

        const auto ref = reference_apsp(V, g.edges);
        const auto pv = g.point_vertices;
        const auto cv = g.center_vertices;
        const MetricSpace ms = MetricSpace::from_graph(std::move(g), 1.0);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < m; ++i) CHECK(ms.distance(j, i) == ref[pv[j]][cv[i]]);
    }
}

TEST_CASE("padding a graph past the dense cutoff keeps the same distances") {
    // The same topology solved by the dense pass (small) and the per-center
    // pass (after padding with pendant vertices) must agree.
    std::mt19937_64 rng(19);
    GraphSpec small = random_connected_graph(rng, 12, 15);
    for (int j = 0; j < 8; ++j)
        small.point_vertices.push_back(static_cast<int>(rng() % 12));
    for (int i = 0; i < 4; ++i)
        small.center_vertices.push_back(static_cast<int>(rng() % 12));

    GraphSpec big = small;
    big.num_vertices = 80;
    for (int v = 12; v < 80; ++v) big.edges.push_back({0, v, 1000.0});

    const MetricSpace ms_small = MetricSpace::from_graph(small, 1.0);
    const MetricSpace ms_big = MetricSpace::from_graph(big, 1.0);
    for (int j = 0; j < ms_small.num_points(); ++j)
        for (int i = 0; i < ms_small.num_centers(); ++i)
            CHECK(ms_small.distance(j, i) ==
                  doctest::Approx(ms_big.distance(j, i)).epsilon(1e-12));
}

TEST_CASE("disconnected point-center pairs are rejected") {
    GraphSpec g;
    g.num_vertices = 4;
    g.edges = {{0, 1, 1.0}, {2, 3, 1.0}};
    g.point_vertices = {0};
    g.center_vertices = {3};
    CHECK_THROWS_AS(MetricSpace::from_graph(std::move(g), 1.0), ValidationError);
}

TEST_CASE("graph validation rejects bad ids and weights") {
    GraphSpec g;
    g.num_vertices = 2;
    g.edges = {{0, 5, 1.0}};
    g.point_vertices = {0};
    g.center_vertices = {1};
    CHECK_THROWS_AS(MetricSpace::from_graph(g, 1.0), ValidationError);
    g.edges = {{0, 1, -2.0}};
    CHECK_THROWS_AS(MetricSpace::from_graph(g, 1.0), ValidationError);
}

TEST_CASE("triangle audit accepts consistent matrices and flags planted violations") {
    // Distances realised by points on a line: passes.
    const MetricSpace good = MetricSpace::from_matrix(
        {{0.0, 2.0}, {1.0, 1.0}, {2.0, 0.0}}, 1.0);
    CHECK_NOTHROW(good.validate_triangle());

    // Point 0 is close to both centers but point 1 claims an enormous gap to
    // center 0 while sitting on top of center 1.
    const MetricSpace bad = MetricSpace::from_matrix(
        {{0.1, 0.1}, {100.0, 0.0}}, 1.0);
    CHECK_THROWS_AS(bad.validate_triangle(), ValidationError);

    // Geometric backends pass by construction.
    const MetricSpace eu = MetricSpace::from_euclidean({{0.0}}, {{1.0}}, 1.0);
    CHECK_NOTHROW(eu.validate_triangle());
}

TEST_CASE("metric equality compares backend data") {
    const MetricSpace a = MetricSpace::from_matrix({{1.0, 2.0}}, 1.0);
    const MetricSpace b = MetricSpace::from_matrix({{1.0, 2.0}}, 1.0);
    const MetricSpace c = MetricSpace::from_matrix({{1.0, 2.1}}, 1.0);
    const MetricSpace d = MetricSpace::from_matrix({{1.0, 2.0}}, 2.0);
    CHECK(a == b);
    CHECK_FALSE(a == c);
    CHECK_FALSE(a == d);
}
