#pragma once

#include "stackprice/flow.hpp"
#include "stackprice/instance.hpp"
#include "stackprice/report.hpp"

namespace stackprice {

/// Exact revenue maximization for a single vertex-cover follower on a
/// bipartite graph whose priceable vertices all lie on one side.
///
/// Phase one computes a maximum flow with priceable capacities 0 (value
/// c_n); phase two raises them to +infinity and keeps augmenting (value c_0).
/// Each priceable vertex is priced at the final flow on its source arc.
///
/// Diagnostics: c0, cn, revenue_bound (= c0 - cn), phase1_paths,
/// phase2_paths, fixed_path_violations (phase-two paths not starting at a
/// priceable vertex), cover_violations (priceable vertices missing from the
/// cover read off the final flow at the computed prices). `trace` has one
/// line per augmenting path.
///
/// Throws UnsupportedError for multiple followers, non-vertex-cover or
/// non-bipartite instances, or priceable vertices on both sides.
SolveReport solve_one_sided(const Instance& inst);

/// Two one-sided runs, each with the other side's priceable vertices priced
/// +infinity; returns the better pricing (ties to the A-side run). Each run
/// earns c_0 minus the cheapest cover using only its side's priceable
/// vertices for free, and those two amounts add up to at least r*.
/// Extra diagnostics: run_a_revenue, run_b_revenue, chosen_side (0 = A).
SolveReport solve_two_sided(const Instance& inst);

}  // namespace stackprice
