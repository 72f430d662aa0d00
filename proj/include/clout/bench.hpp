#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clout/instance.hpp"

namespace clout {

// Randomized head-to-head of the swap search against brute force. Each row
// draws its own instance from the given ranges with a seed derived from
// (seed, row index), so reports are reproducible and rows are independent.
struct BenchConfig {
    int count = 20;
    std::uint64_t seed = 1;

    int n_min = 8, n_max = 14;
    int m_min = 4, m_max = 7;
    int k_min = 1, k_max = 3;
    int z_min = 0, z_max = 3;
    std::vector<double> qs{1.0, 2.0};
    double instance_epsilon = 0.0;  // cluster budget slack
    int dim = 2;

    int rho = 1;
    double epsilon_stop = 0.01;
    long max_iterations = 100000;

    int threads = 1;
    std::uint64_t oracle_cap = 2000000;  // skip brute force above this many subsets
};

struct BenchRow {
    std::uint64_t row_seed = 0;
    int n = 0, m = 0, k = 0, z = 0;
    double q = 1.0;
    int rho = 1;
    double search_cost = 0.0;
    std::optional<double> exact_cost;  // unset when brute force was skipped
    std::optional<double> ratio;       // search / exact
    long iterations = 0;
    double wall_ms = 0.0;
    bool iteration_bound_ok = true;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    std::optional<double> mean_ratio;
    std::optional<double> max_ratio;
};

BenchReport run_bench(const BenchConfig& config);

std::string bench_to_json(const BenchReport& report);
std::string bench_to_csv(const BenchReport& report);

}  // namespace clout
