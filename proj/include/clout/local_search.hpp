#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clout/moves.hpp"
#include "clout/solution.hpp"

namespace clout {

enum class PivotRule { FirstImprovement, BestImprovement };
enum class SeedKind { GreedyFarthest, RandomSubset, Explicit };
enum class Termination { LocalOptimum, IterationCap };

struct SeedPolicy {
    SeedKind kind = SeedKind::GreedyFarthest;
    std::uint64_t seed = 0;                  // RandomSubset only
    std::vector<CenterId> explicit_centers;  // Explicit only
};

struct SearchConfig {
    int rho = 1;
    // A move is taken only when it cuts the cost by a relative epsilon/|C|
    // margin, which caps the number of iterations at a polynomial.
    double epsilon_stop = 1e-6;
    PivotRule pivot = PivotRule::FirstImprovement;
    long max_iterations = 100000;
    SeedPolicy seed;
};

struct IterationRecord {
    long iteration;  // 1-based
    SwapMove move;
    double cost_before;
    double cost_after;
};

struct SearchTrace {
    std::vector<IterationRecord> steps;
    Solution final;
    Termination termination = Termination::LocalOptimum;

    double initial_cost() const {
        return steps.empty() ? final.cost() : steps.front().cost_before;
    }
};

SearchTrace local_search(const Instance& inst, const SearchConfig& config);

// Deterministic warm starts.
std::vector<CenterId> greedy_farthest_seed(const Instance& inst);
std::vector<CenterId> random_subset_seed(const Instance& inst, std::uint64_t seed);
std::vector<CenterId> build_seed(const Instance& inst, const SeedPolicy& policy);

struct CertifyOutcome {
    bool certified = true;
    std::optional<SwapMove> counterexample;  // first improving move in walk order
    double delta = 0.0;                      // its cost change
};

// Exhaustive neighborhood audit: flags the first move that beats the given
// solution by more than max(slack * cost, 1e-12).
CertifyOutcome certify_local_optimum(const Instance& inst, const Solution& sol, int rho,
                                     double slack = kRelTol);

// Accepted-step count must stay within the geometric-decay bound implied by
// the acceptance margin.
bool trace_within_iteration_bound(const SearchTrace& trace, double epsilon_stop, int num_centers);

std::string save_trace(const SearchTrace& trace);
void save_trace_file(const SearchTrace& trace, const std::string& path);

}  // namespace clout
