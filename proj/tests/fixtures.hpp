#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stackprice/instance.hpp"
#include "stackprice/instances.hpp"

namespace fixtures {

using namespace stackprice;

// s-t with priceable e1 and fixed f1 of cost 5.
Instance example_a();
// A = {a1 priceable, a2 cost 3}, B = {b1 cost 2, b2 cost 4}; edges a1b1, a1b2, a2b2.
Instance instance_c();
// A = {a1 priceable, a2 cost 4}, B = {b1 cost 5, b2 priceable}; edges a1b1, a2b1, a2b2.
Instance two_sided_d();

PriceAssignment prices(std::initializer_list<std::pair<const char*, ExactNumber>> entries);

// Parameter sets of the seeded corpora shared by unit and acceptance tests.
RandomParams sp_mst_params(std::uint64_t seed);      // one follower, <= 8 vertices, <= 12 edges
RandomParams one_sided_params(std::uint64_t seed);   // bipartite, <= 10 vertices
RandomParams two_sided_params(std::uint64_t seed);   // bipartite, both sides priceable
RandomParams multi_follower_params(std::uint64_t seed);  // unit demands, 2-3 followers
RandomParams weighted_params(std::uint64_t seed);    // demands in [1/2, 4]

}  // namespace fixtures
