#pragma once

#include <cstdint>

#include "clout/instance.hpp"

namespace clout {

// Random planar instances for sweeps and property tests: points uniform in
// the unit cube, candidate centers a uniform subset of the points. Fully
// determined by the seed.
struct RandomInstanceSpec {
    enum class Kind { KCluster, Ufl };

    Kind kind = Kind::KCluster;
    int n = 10;
    int m = 5;
    int dim = 2;
    int z = 0;
    double q = 1.0;
    int k = 2;               // KCluster only
    double epsilon = 0.0;    // KCluster only
    double opening_cost = 1.0;  // Ufl only (uniform)
};

Instance random_instance(const RandomInstanceSpec& spec, std::uint64_t seed);

// Uniform double in [0, 1) built from raw generator words; reproducible on
// every platform, unlike library distributions.
double uniform_unit(std::uint64_t word);

}  // namespace clout
