#pragma once

#include <map>
#include <string>
#include <vector>

#include "stackprice/exact.hpp"
#include "stackprice/followers.hpp"
#include "stackprice/instance.hpp"

namespace stackprice {

/// Outcome of a pricing algorithm.
///
/// `revenue` is always the realized demand-weighted revenue of the
/// `per_follower` responses at `prices`. Algorithm-specific numbers (bounds,
/// guarantee factors, flow values, invariant counters) go to `diagnostics`.
struct SolveReport {
  std::string algorithm;
  PriceAssignment prices;
  ExactNumber revenue;
  std::vector<Response> per_follower;
  std::map<std::string, ExactNumber> diagnostics;
  std::vector<std::string> trace;
};

/// Best responses of every follower at `p` and the weighted revenue sum.
struct Outcome {
  ExactNumber revenue;
  std::vector<Response> responses;
};
Outcome evaluate_prices(const Instance& inst, const PriceAssignment& p);

}  // namespace stackprice
