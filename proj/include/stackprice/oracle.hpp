#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "stackprice/exact.hpp"
#include "stackprice/instance.hpp"
#include "stackprice/report.hpp"

namespace stackprice {

inline constexpr std::size_t kDefaultEnumerationLimit = 100000;
inline constexpr std::size_t kDefaultTupleLimit = 1000000;

/// All inclusion-minimal feasible subnetworks of a follower: simple
/// source-sink paths, spanning trees, or minimal vertex covers of the
/// follower's edges. Sorted. Throws LimitExceeded past `limit` sets.
std::vector<ItemSet> enumerate_feasible(const Instance& inst, std::size_t follower,
                                        std::size_t limit = kDefaultEnumerationLimit);

// ---------------------------------------------------------------------------
// Exact LP

struct LinearConstraint {
  std::vector<ExactNumber> coefficients;  // one per variable
  ExactNumber rhs;                        // sum coefficients * x <= rhs
};

/// maximize objective . x subject to the constraints and x >= 0.
struct LinearProgram {
  std::vector<std::string> variables;
  std::vector<ExactNumber> objective;
  std::vector<LinearConstraint> constraints;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  ExactNumber value;
  std::vector<ExactNumber> solution;
  std::size_t pivots = 0;
};

/// Two-phase simplex in exact arithmetic with Bland's rule.
LpResult lp_solve(const LinearProgram& lp);

// ---------------------------------------------------------------------------
// Revenue maximization for fixed targets

struct TargetPricing {
  PriceAssignment prices;
  ExactNumber revenue;  // sum_j d_j r(S_j) at `prices`
};

/// Revenue-maximizing prices under which each target is a minimum-weight
/// choice of its follower, or nullopt when none exist.
///
/// Priceable items outside every target are priced +infinity; every other
/// price comes from the LP
///   max sum_j d_j p(S_j cap E_p)
///   s.t. p(S_j cap E_p) - p(S' cap E_p) <= c(S' cap E_f) - c(S_j cap E_f)
/// over every alternative S' of follower j, p >= 0. Rows against an
/// alternative with a smaller fixed part must hold strictly (at equality the
/// follower would take the alternative); nullopt also covers the case where
/// the LP optimum is only a supremum because of that. Throws
/// ValidationError when a target is not a feasible subnetwork of its
/// follower.
std::optional<TargetPricing> optimal_prices_for_targets(const Instance& inst, const std::vector<ItemSet>& targets,
                                                        std::size_t limit = kDefaultEnumerationLimit);

/// r* by exhausting target tuples. Diagnostics: tuples, lp_solved, r_star.
/// Throws LimitExceeded when a family exceeds `enumeration_limit` or the
/// number of distinct target tuples exceeds `tuple_limit`.
SolveReport exact_optimum(const Instance& inst, std::size_t tuple_limit = kDefaultTupleLimit,
                          std::size_t enumeration_limit = kDefaultEnumerationLimit);

}  // namespace stackprice
