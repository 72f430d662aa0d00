#include "clout/random_instance.hpp"

#include <cmath>
#include <random>

namespace clout {

double uniform_unit(std::uint64_t word) {
    return std::ldexp(static_cast<double>(word >> 11), -53);
}

Instance random_instance(const RandomInstanceSpec& spec, std::uint64_t seed) {
    if (spec.n < 1 || spec.m < 1) throw ValidationError("n", "need at least one point and center");
    if (spec.m > spec.n) throw ValidationError("m", "centers are drawn from the points");
    if (spec.dim < 1) throw ValidationError("dim", "dimension must be positive");

    std::mt19937_64 rng(splitmix64(seed));

    std::vector<std::vector<double>> points(static_cast<std::size_t>(spec.n));
    for (auto& row : points) {
        row.resize(static_cast<std::size_t>(spec.dim));
        for (double& x : row) x = uniform_unit(rng());
    }

    // Uniform m-subset of the points via partial Fisher-Yates.
    std::vector<int> ids(static_cast<std::size_t>(spec.n));
    for (int t = 0; t < spec.n; ++t) ids[static_cast<std::size_t>(t)] = t;
    for (int t = 0; t < spec.m; ++t) {
        const std::size_t r =
            static_cast<std::size_t>(t) + rng() % static_cast<std::uint64_t>(spec.n - t);
        std::swap(ids[static_cast<std::size_t>(t)], ids[r]);
    }
    std::vector<std::vector<double>> centers;
    centers.reserve(static_cast<std::size_t>(spec.m));
    for (int t = 0; t < spec.m; ++t) centers.push_back(points[static_cast<std::size_t>(ids[t])]);

    ProblemKind kind;
    if (spec.kind == RandomInstanceSpec::Kind::KCluster) {
        KClusterOutKind kc;
        kc.k = spec.k;
        kc.epsilon = spec.epsilon;
        kind = kc;
    } else {
        UflOutKind u;
        u.uniform_cost = spec.opening_cost;
        kind = std::move(u);
    }

    return make_instance(MetricSpace::from_euclidean(std::move(points), std::move(centers), spec.q),
                         std::move(kind), spec.z);
}

}  // namespace clout
