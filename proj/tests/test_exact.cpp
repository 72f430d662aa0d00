#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <limits>
#include <random>
#include <vector>

#include "clout/exact.hpp"
#include "clout/gap.hpp"
#include "clout/random_instance.hpp"

using namespace clout;

namespace {

// Reference minimum: literally evaluate every candidate subset, tracking the
// lexicographically first among equal costs (subsets compared as sorted id
// vectors, generated in increasing mask order which is NOT lex order, so the
// reference does its own comparison).
struct BruteBest {
    std::vector<CenterId> open;
    double cost = std::numeric_limits<double>::infinity();
};

BruteBest brute_best(const Instance& inst, int lo, int hi) {
    const int m = inst.num_centers();
    BruteBest best;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        const int size = __builtin_popcount(mask);
        if (size < lo || size > hi || size > inst.open_budget()) continue;
        std::vector<CenterId> open;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) open.push_back(i);
        const double c = evaluate(inst, open).cost();
        if (c < best.cost || (c == best.cost && open < best.open)) {
            best.cost = c;
            best.open = open;
        }
    }
    return best;
}

}  // namespace

TEST_CASE("choosing k from k candidates examines exactly one subset") {
    const Instance inst = load_instance(
        R"({"kind": "kcluster-out", "k": 3, "z": 1,
            "distance_matrix": [[1.0, 2.0, 3.0], [4.0, 5.0, 6.0], [7.0, 8.0, 9.0]]})");
    const ExactResult res = solve_exact(inst);
    CHECK(res.open == std::vector<CenterId>{0, 1, 2});
    CHECK(res.subsets_examined == 1);
    CHECK(res.cost == evaluate(inst, res.open).cost());
}

TEST_CASE("cardinality instances match the reference over size-k subsets") {
    std::mt19937_64 rng(61);
    for (int rep = 0; rep < 40; ++rep) {
        RandomInstanceSpec spec;
        spec.kind = RandomInstanceSpec::Kind::KCluster;
        spec.n = 5 + static_cast<int>(rng() % 8);
        spec.m = 3 + static_cast<int>(rng() % 4);
        if (spec.m > spec.n) spec.m = spec.n;
        spec.k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(spec.m));
        spec.z = static_cast<int>(rng() % 3);
        spec.q = (rep % 2 == 0) ? 2.0 : 1.0;
        const Instance inst = random_instance(spec, rng());

        const ExactResult res = solve_exact(inst);
        const BruteBest want = brute_best(inst, spec.k, spec.k);
        CHECK(res.cost == doctest::Approx(want.cost).epsilon(1e-12));
        CHECK(res.open == want.open);
        CHECK(res.cost == evaluate(inst, res.open).cost());
    }
}

TEST_CASE("facility instances match the reference over every nonempty subset") {
    std::mt19937_64 rng(67);
    for (int rep = 0; rep < 40; ++rep) {
        RandomInstanceSpec spec;
        spec.kind = RandomInstanceSpec::Kind::Ufl;
        spec.n = 5 + static_cast<int>(rng() % 8);
        spec.m = 2 + static_cast<int>(rng() % 5);
        if (spec.m > spec.n) spec.m = spec.n;
        spec.z = static_cast<int>(rng() % 3);
        spec.opening_cost = 0.1 + static_cast<double>(rng() % 10) / 5.0;
        const Instance inst = random_instance(spec, rng());

        const ExactResult res = solve_exact(inst);
        const BruteBest want = brute_best(inst, 1, inst.num_centers());
        CHECK(res.cost == doctest::Approx(want.cost).epsilon(1e-12));
        CHECK(res.open == want.open);
    }
}

TEST_CASE("equal-cost optima resolve to the lexicographically first subset") {
    // Two identical centers: {0} and {1} tie, {0} must win; opening costs
    // make the pair {0,1} strictly worse.
    const Instance inst = load_instance(
        R"({"kind": "ufl-out", "z": 0, "opening_costs": 1.0,
            "distance_matrix": [[2.0, 2.0], [3.0, 3.0]]})");
    const ExactResult res = solve_exact(inst);
    CHECK(res.open == std::vector<CenterId>{0});
}

TEST_CASE("subset counting is exact") {
    const Instance inst = load_instance(
        R"({"kind": "ufl-out", "z": 0,
            "distance_matrix": [[1.0, 1.0, 1.0, 1.0]]})");
    const ExactResult res = solve_exact(inst);
    CHECK(res.subsets_examined == 15);  // 2^4 - 1

    const Instance kc = load_instance(
        R"({"kind": "kcluster-out", "k": 2, "z": 0,
            "distance_matrix": [[1.0, 1.0, 1.0, 1.0]]})");
    CHECK(solve_exact(kc).subsets_examined == 6);  // C(4,2)
}

TEST_CASE("the size cap restricts the facility enumeration") {
    // Opening is nearly free, so the unrestricted optimum opens both centers;
    // capped at one subset size the single best center wins.
    const Instance inst = load_instance(
        R"({"kind": "ufl-out", "z": 0, "opening_costs": 0.001,
            "distance_matrix": [[0.0, 9.0], [9.0, 0.0]]})");
    CHECK(solve_exact(inst).open == std::vector<CenterId>{0, 1});
    const ExactResult capped = solve_exact(inst, 1);
    CHECK(capped.open.size() == 1);
    CHECK(capped.subsets_examined == 2);
}

TEST_CASE("enumeration budgets are enforced up front") {
    // 2^21 - 1 nonempty subsets of 21 centers: refused without a size cap.
    std::vector<std::vector<double>> row(1, std::vector<double>(21, 1.0));
    const Instance big =
        make_instance(MetricSpace::from_matrix(row, 1.0), UflOutKind{1.0, {}}, 0);
    CHECK_THROWS_AS(solve_exact(big), BudgetError);
    CHECK_NOTHROW(solve_exact(big, 1));

    const Instance small = load_instance(
        R"({"kind": "ufl-out", "z": 0, "distance_matrix": [[1.0, 1.0, 1.0]]})");
    CHECK_THROWS_AS(solve_exact(small, 0, 3), BudgetError);  // 7 subsets > 3
    CHECK_NOTHROW(solve_exact(small, 0, 7));
}

TEST_CASE("the oracle confirms the stated alternative of the ring family") {
    KClusterGapParams p;
    p.k = 3;
    p.z = 8;
    p.beta = 1.0;
    p.gamma = 2.0;
    const GapInstance gap = make_kcluster_gap(p);
    const ExactResult res = solve_exact(gap.instance);
    const double stated = evaluate(gap.instance, gap.stated_opt).cost();
    CHECK(res.cost == doctest::Approx(stated).epsilon(1e-9));
}

TEST_CASE("subsets smaller than k never beat the best k-subset") {
    // Service cost only improves as centers are added, which is why the
    // cardinality oracle may enumerate exactly the size-k subsets.
    std::mt19937_64 rng(71);
    for (int rep = 0; rep < 20; ++rep) {
        RandomInstanceSpec spec;
        spec.kind = RandomInstanceSpec::Kind::KCluster;
        spec.n = 8;
        spec.m = 5;
        spec.k = 2;
        spec.z = 1;
        const Instance inst = random_instance(spec, rng());
        const ExactResult best = solve_exact(inst);
        const double lo = best.cost - 1e-9 * std::max(1.0, best.cost);
        const BruteBest anyone = brute_best(inst, 1, inst.num_centers());
        CHECK(anyone.cost >= lo);  // nothing under the budget beats the oracle
    }
}
