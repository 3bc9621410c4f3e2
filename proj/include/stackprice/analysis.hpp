#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "stackprice/exact.hpp"
#include "stackprice/instance.hpp"

namespace stackprice {

/// (j, c_j, Delta_j): cheapest fixed part of a subnetwork with at most j
/// priceable items, and its saving over the all-fixed baseline c_0.
struct ProfilePoint {
  std::size_t j = 0;
  ExactNumber cost;
  ExactNumber delta;
};

/// Threshold structure of one follower under uniform prices.
///
/// `hull` lists the upper-hull indices i_0 = 0 < i_1 < ... < i_l of the
/// points (j, Delta_j); `thetas[k-1]` is the true threshold of i_k, strictly
/// decreasing. `points` always contains the hull points and, when the full
/// table is known, every j = 0..m.
struct ThresholdProfile {
  std::vector<ProfilePoint> points;
  std::vector<std::size_t> hull;
  std::vector<ExactNumber> thetas;
  bool complete = false;  // points covers every j

  const ProfilePoint* point(std::size_t j) const;
};

struct HullResult {
  std::vector<std::size_t> hull;
  std::vector<ExactNumber> thetas;
};

/// Upper convex hull of (j, deltas[j]) by a monotone-chain scan, collinear
/// points dropped and zero-slope tail removed, with thresholds
/// theta_{i_k} = (Delta_{i_k} - Delta_{i_{k-1}}) / (i_k - i_{k-1}).
/// Throws ValidationError unless deltas[0] == 0 and deltas is non-decreasing.
HullResult hull_from_deltas(std::span<const ExactNumber> deltas);

/// Lower envelope of the uniform-price response lines c_S + |S cap E_p| p,
/// found by probing best_response at line intersections.
ThresholdProfile parametric_profile(const Instance& inst, std::size_t follower);

/// c_j for a shortest-path follower via a layered Dijkstra over
/// (vertex, priceable items used). +infinity when no path with <= j
/// priceable edges exists. Throws UnsupportedError for other goals.
ExactNumber constrained_fixed_cost(const Instance& inst, std::size_t follower, std::size_t j);

/// Delta at the last hull index; an upper bound on the follower's revenue.
ExactNumber revenue_upper_bound(const ThresholdProfile& profile);

/// Profile with the full c_j table: layered Dijkstra for shortest-path
/// followers, brute-force enumeration (up to `limit` subnetworks) for the
/// others. Falls back to the hull-only profile when enumeration is too big.
ThresholdProfile full_profile(const Instance& inst, std::size_t follower, std::size_t limit = 100000);

/// Tab-separated table: j, c_j, Delta_j, on-hull flag, theta.
void write_profile_table(std::ostream& os, const ThresholdProfile& profile);

}  // namespace stackprice
