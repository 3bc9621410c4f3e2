#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "stackprice/exact.hpp"
#include "stackprice/instance.hpp"

namespace stackprice {

/// Shortest-path chain v0 .. vm of priceable edges e1 .. em plus fixed
/// shortcuts f_j = (v_j, vm) of cost m (H_m - H_j), j = 0 .. m-1. One
/// follower v0 -> vm. Optimum m H_m at p(e_j) = m/j; one price earns m.
Instance gen_harmonic(long m);

struct SingleMindedCustomer {
  std::vector<std::string> bundle;  // product ids
  ExactNumber budget;
};

/// Vertex game: a priceable vertex per product, a fixed vertex per customer
/// (cost = budget) joined to her bundle, and one cover follower per customer.
Instance gen_from_single_minded(const std::vector<SingleMindedCustomer>& customers);

/// sum_j [budget_j >= p(bundle_j)] p(bundle_j)
ExactNumber single_minded_revenue(const std::vector<SingleMindedCustomer>& customers, const PriceAssignment& p);

struct UnitDemandCustomer {
  std::vector<std::string> alternatives;  // product ids
  ExactNumber budget;
  ExactNumber demand{1};
};

/// Directed edge game: product i is a priceable edge u_i -> w_i; customer j
/// gets s_j -> u_i and w_i -> t_j at cost 0 for each alternative, a fixed
/// s_j -> t_j edge at her budget, and a follower s_j -> t_j with her demand.
Instance gen_from_unit_demand(const std::vector<UnitDemandCustomer>& customers);

/// sum_j d_j min_i p_i over alternatives, counted when that minimum is at
/// most budget_j.
ExactNumber unit_demand_revenue(const std::vector<UnitDemandCustomer>& customers, const PriceAssignment& p);

enum class RandomShape { graph, bipartite };

/// Random instance parameters. Probabilities are exact rationals in [0, 1].
///
/// graph: vertices v0.., each vertex pair gets an edge with
/// `edge_probability` (both orders when `directed`), priceable with
/// `priceable_probability`. Fixed edges are then added between components
/// of the fixed subgraph (or s -> t for directed followers) so every
/// follower has an all-fixed choice. Followers are shortest-path, or
/// spanning-tree with `spanning_tree_probability` (undirected only).
///
/// bipartite: parts a1.., b1.. with at least one vertex each, one cover
/// follower over all edges. One-sided puts priceable vertices in part A
/// only; two-sided fixes a random endpoint of any edge between two
/// priceable vertices.
///
/// Fixed costs are integers in [cost_min, cost_max] divided by
/// `cost_denominator`. Weighted demands are q/4 with q in [2, 16]. Draws
/// exceeding `max_edges` are thrown away and redrawn from the same stream.
struct RandomParams {
  std::uint64_t seed = 1;
  RandomShape shape = RandomShape::graph;
  std::size_t min_vertices = 3;
  std::size_t max_vertices = 8;
  std::size_t max_edges = 12;
  ExactNumber edge_probability{1, 3};
  ExactNumber priceable_probability{1, 2};
  long cost_min = 1;
  long cost_max = 10;
  long cost_denominator = 1;
  std::size_t followers = 1;
  ExactNumber spanning_tree_probability{0};
  bool directed = false;
  bool weighted = false;
  bool two_sided = false;
};

/// Deterministic in the seed: std::mt19937_64 with an explicit rejection
/// mapping to ranges, so the output is the same on every platform.
Instance gen_random(const RandomParams& params);

/// Uniform integer in [lo, hi] by rejection on raw 64-bit draws.
long uniform_integer(std::mt19937_64& rng, long lo, long hi);
/// True with probability `p` (exact: compares a 32-bit draw with p 2^32).
bool bernoulli(std::mt19937_64& rng, const ExactNumber& p);

}  // namespace stackprice
