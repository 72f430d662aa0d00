#pragma once

#include <cstdint>
#include <vector>

#include "clout/solution.hpp"

namespace clout {

inline constexpr std::uint64_t kDefaultSubsetBudget = 10000000;

struct ExactResult {
    std::vector<CenterId> open;  // lexicographically first minimizer
    double cost = 0.0;           // equals evaluate(inst, open).cost()
    std::uint64_t subsets_examined = 0;
};

// Brute force over open-center sets: all size-k subsets for cardinality
// instances, every nonempty subset for facility instances (capped at subset
// size size_cap when given; required once there are more than 20 candidates).
// Throws BudgetError when the enumeration would exceed max_subsets.
ExactResult solve_exact(const Instance& inst, int size_cap = 0,
                        std::uint64_t max_subsets = kDefaultSubsetBudget);

}  // namespace clout
