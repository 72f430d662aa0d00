#include "clout/moves.hpp"

#include <algorithm>

namespace clout {

namespace {

// Lexicographic subset walk: the current prefix is visited before it is
// extended, and extensions use strictly larger ids, so subsets of sizes in
// [lo, hi] appear in lex order of their id sequences.
bool subsets_lex(const std::vector<CenterId>& ids, int lo, int hi, std::size_t start,
                 std::vector<CenterId>& cur, const std::function<bool(const std::vector<CenterId>&)>& fn) {
    const int size = static_cast<int>(cur.size());
    if (size >= lo && !fn(cur)) return false;
    if (size == hi) return true;
    for (std::size_t t = start; t < ids.size(); ++t) {
        cur.push_back(ids[t]);
        if (!subsets_lex(ids, lo, hi, t + 1, cur, fn)) return false;
        cur.pop_back();
    }
    return true;
}

}  // namespace

bool for_each_move(const Instance& inst, const Solution& sol, int rho, const MoveVisitor& visit) {
    if (rho < 1) throw ValidationError("rho", "swap size must be at least 1");

    const int m = inst.num_centers();
    const int budget = inst.open_budget();
    const int open_count = static_cast<int>(sol.open.size());

    std::vector<CenterId> closed;
    closed.reserve(static_cast<std::size_t>(m) - sol.open.size());
    for (CenterId i = 0; i < m; ++i)
        if (!std::binary_search(sol.open.begin(), sol.open.end(), i)) closed.push_back(i);

    SwapMove move;
    move.add.reserve(static_cast<std::size_t>(rho));
    move.drop.reserve(static_cast<std::size_t>(rho));

    for (int total = 1; total <= 2 * rho; ++total) {
        const int add_lo = std::max(0, total - std::min(rho, open_count));
        const int add_hi = std::min({rho, total, static_cast<int>(closed.size())});
        if (add_lo > add_hi) continue;

        std::vector<CenterId> cur_add;
        const bool done = subsets_lex(
            closed, add_lo, add_hi, 0, cur_add, [&](const std::vector<CenterId>& add) {
                const int drop_size = total - static_cast<int>(add.size());
                if (drop_size > open_count) return true;
                const int result = open_count - drop_size + static_cast<int>(add.size());
                if (result < 1 || result > budget) return true;
                move.add = add;
                std::vector<CenterId> cur_drop;
                return subsets_lex(sol.open, drop_size, drop_size, 0, cur_drop,
                                   [&](const std::vector<CenterId>& drop) {
                                       move.drop = drop;
                                       return visit(move);
                                   });
            });
        if (!done) return false;
    }
    return true;
}

std::vector<SwapMove> enumerate_moves(const Instance& inst, const Solution& sol, int rho) {
    std::vector<SwapMove> out;
    for_each_move(inst, sol, rho, [&](const SwapMove& move) {
        out.push_back(move);
        return true;
    });
    return out;
}

}  // namespace clout
