#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace clout {

using PointId = int;
using CenterId = int;

inline constexpr CenterId kNoCenter = -1;

// Default comparison tolerances for cost values. Swap deltas are small
// differences of large sums, so comparisons are relative with an absolute
// floor.
inline constexpr double kRelTol = 1e-9;
inline constexpr double kAbsTol = 1e-12;

inline double tol_for(double a, double b, double rel = kRelTol, double abs = kAbsTol) {
    return std::max(abs, rel * std::max(std::fabs(a), std::fabs(b)));
}

inline bool approx_eq(double a, double b, double rel = kRelTol, double abs = kAbsTol) {
    return std::fabs(a - b) <= tol_for(a, b, rel, abs);
}

inline bool approx_le(double a, double b, double rel = kRelTol, double abs = kAbsTol) {
    return a <= b + tol_for(a, b, rel, abs);
}

// Invalid input: malformed documents, violated invariants, bad arguments.
// Carries the offending field path so CLI diagnostics can point at it.
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string field, const std::string& reason)
        : std::runtime_error(field + ": " + reason), field_(std::move(field)) {}

    const std::string& field() const { return field_; }

private:
    std::string field_;
};

// Combinatorial work limit exceeded (exact solver, precompute budgets).
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// splitmix64 step, used to derive independent per-row/per-trial seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    return splitmix64(seed ^ splitmix64(salt));
}

}  // namespace clout
