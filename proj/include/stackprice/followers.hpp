#pragma once

#include <compare>
#include <cstddef>

#include "stackprice/exact.hpp"
#include "stackprice/instance.hpp"

namespace stackprice {

/// Weight perturbed by negated revenue, ordered lexicographically.
///
/// Minimizing it picks a minimum-weight subnetwork and, among those, one of
/// maximum leader revenue. A fixed item contributes (c, 0), a priceable item
/// (p, -p); both are >= (0, 0), so shortest-path, greedy and flow algorithms
/// stay valid over this monoid.
struct PerturbedWeight {
  ExactNumber weight;
  ExactNumber neg_revenue;

  static PerturbedWeight fixed(const ExactNumber& cost) { return {cost, ExactNumber(0)}; }
  static PerturbedWeight priced(const ExactNumber& price) { return {price, -price}; }

  ExactNumber revenue() const { return -neg_revenue; }

  PerturbedWeight& operator+=(const PerturbedWeight& o) {
    weight += o.weight;
    neg_revenue += o.neg_revenue;
    return *this;
  }
  PerturbedWeight& operator-=(const PerturbedWeight& o) {
    weight -= o.weight;
    neg_revenue -= o.neg_revenue;
    return *this;
  }
  friend PerturbedWeight operator+(PerturbedWeight a, const PerturbedWeight& b) { return a += b; }
  friend PerturbedWeight operator-(PerturbedWeight a, const PerturbedWeight& b) { return a -= b; }
  friend bool operator==(const PerturbedWeight&, const PerturbedWeight&) = default;
  friend std::strong_ordering operator<=>(const PerturbedWeight& a, const PerturbedWeight& b) {
    if (auto c = a.weight <=> b.weight; c != 0) return c;
    return a.neg_revenue <=> b.neg_revenue;
  }
};

/// A follower's choice under fixed prices.
struct Response {
  ItemSet chosen;
  ExactNumber weight;
  ExactNumber revenue;
  std::size_t priceable_used = 0;

  /// weight - revenue, the fixed-cost part of the choice.
  ExactNumber fixed_cost() const { return weight - revenue; }
};

/// Minimum-weight feasible subnetwork of follower `follower`, ties resolved
/// in favour of leader revenue. Items priced +infinity are unavailable.
///
/// Remaining ties (equal weight and revenue) are resolved deterministically:
/// Dijkstra relaxes arcs in item order and only on strict improvement,
/// Kruskal breaks key ties by item id, and the cover solver returns the
/// source-side-minimal minimum cut.
///
/// Throws ValidationError when the follower cannot be served and
/// UnsupportedError for a non-bipartite vertex-cover follower.
Response best_response(const Instance& inst, std::size_t follower, const PriceAssignment& p);

/// c_0: weight of the best response with every priceable item removed.
ExactNumber baseline_cost(const Instance& inst, std::size_t follower);

}  // namespace stackprice
