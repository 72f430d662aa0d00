#pragma once

#include <string>
#include <vector>

#include "clout/instance.hpp"

namespace clout {

// Open a set P of closed centers, shut a set Q of open ones. Both lists are
// kept sorted ascending; either may be empty, but not both for a real move.
struct SwapMove {
    std::vector<CenterId> add;   // P
    std::vector<CenterId> drop;  // Q

    int size() const { return static_cast<int>(add.size() + drop.size()); }
    bool operator==(const SwapMove& other) const = default;
};

std::string format_move(const SwapMove& move);

// Full assignment state for one open-center set. The nearest/second caches
// hold raw distances; assignment costs are distance^q. The z points with the
// largest service distance are left unassigned (sigma -1); among equal
// distances the larger point id is dropped first, so smaller ids stay
// assigned.
struct Solution {
    std::vector<CenterId> open;       // sorted ascending
    std::vector<CenterId> sigma;      // per point; kNoCenter for outliers
    std::vector<PointId> outliers;    // sorted ascending, size exactly z

    std::vector<CenterId> nearest;        // per point, smallest id among ties
    std::vector<double> nearest_dist;
    std::vector<CenterId> second;         // kNoCenter when |open| == 1
    std::vector<double> second_dist;

    double total_assign = 0.0;  // sum of distance^q over assigned points
    double total_open = 0.0;    // opening costs (zero for cardinality kinds)

    double cost() const { return total_assign + total_open; }
};

// Builds the full state for the given open set. Throws ValidationError on
// duplicate/out-of-range ids, an empty set, or a busted budget.
Solution evaluate(const Instance& inst, std::vector<CenterId> open);

// Cost change of applying the move, computed against the caches; agrees
// bit-for-bit with evaluate on the swapped set. The base solution is not
// modified.
double delta_of_swap(const Instance& inst, const Solution& sol, const SwapMove& move);

// Applies the move and repairs the caches: points whose nearest or second
// center was dropped are rescanned, everyone else merges the added centers
// into their cached top two. Field-for-field equal to evaluate on the new set.
Solution apply_swap(const Instance& inst, const Solution& sol, const SwapMove& move);

// Move legality against a base solution (disjointness, range, budget,
// nonempty result). Throws ValidationError when violated.
void validate_move(const Instance& inst, const Solution& sol, const SwapMove& move);

std::string save_solution(const Solution& sol);
void save_solution_file(const Solution& sol, const std::string& path);

// Reads back just the open-center set; everything else is recomputable.
std::vector<CenterId> open_set_from_solution(const std::string& json_text);
std::vector<CenterId> open_set_from_solution_file(const std::string& path);

}  // namespace clout
