#pragma once

#include <functional>
#include <vector>

#include "clout/solution.hpp"

namespace clout {

using MoveVisitor = std::function<bool(const SwapMove&)>;

// Visits every legal swap of size up to rho against the base solution:
// add-sets drawn from closed centers, drop-sets from open ones, results
// nonempty and within the open budget, and the do-nothing move excluded.
//
// Order is total size |P|+|Q| ascending, then (P, Q) lexicographic by id
// sequence. The visitor returns false to stop early; the function reports
// whether the walk ran to completion.
bool for_each_move(const Instance& inst, const Solution& sol, int rho, const MoveVisitor& visit);

// Materialised variant for tests and small neighborhoods.
std::vector<SwapMove> enumerate_moves(const Instance& inst, const Solution& sol, int rho);

}  // namespace clout
