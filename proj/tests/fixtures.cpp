#include "fixtures.hpp"

namespace fixtures {

Instance example_a() {
  return parse_instance(R"({
    "game": "edge", "vertices": ["s", "t"],
    "items": [{"id": "e1", "kind": "priceable", "u": "s", "v": "t"},
              {"id": "f1", "kind": "fixed", "cost": "5", "u": "s", "v": "t"}],
    "followers": [{"type": "shortest_path", "source": "s", "sink": "t"}]})");
}

Instance instance_c() {
  return parse_instance(R"({
    "game": "vertex", "vertices": ["a1", "a2", "b1", "b2"],
    "items": [{"id": "a1", "kind": "priceable"}, {"id": "a2", "kind": "fixed", "cost": "3"},
              {"id": "b1", "kind": "fixed", "cost": "2"}, {"id": "b2", "kind": "fixed", "cost": "4"}],
    "edges": [{"id": "a1b1", "u": "a1", "v": "b1"}, {"id": "a1b2", "u": "a1", "v": "b2"},
              {"id": "a2b2", "u": "a2", "v": "b2"}],
    "followers": [{"type": "vertex_cover", "edges": ["a1b1", "a1b2", "a2b2"]}]})");
}

Instance two_sided_d() {
  return parse_instance(R"({
    "game": "vertex", "vertices": ["a1", "a2", "b1", "b2"],
    "items": [{"id": "a1", "kind": "priceable"}, {"id": "a2", "kind": "fixed", "cost": "4"},
              {"id": "b1", "kind": "fixed", "cost": "5"}, {"id": "b2", "kind": "priceable"}],
    "edges": [{"id": "a1b1", "u": "a1", "v": "b1"}, {"id": "a2b1", "u": "a2", "v": "b1"},
              {"id": "a2b2", "u": "a2", "v": "b2"}],
    "followers": [{"type": "vertex_cover", "edges": ["a1b1", "a2b1", "a2b2"]}]})");
}

PriceAssignment prices(std::initializer_list<std::pair<const char*, ExactNumber>> entries) {
  PriceAssignment p;
  for (const auto& [id, value] : entries) p.set(id, value);
  return p;
}

RandomParams sp_mst_params(std::uint64_t seed) {
  RandomParams q;
  q.seed = seed;
  q.min_vertices = 3;
  q.max_vertices = 8;
  q.max_edges = 12;
  q.edge_probability = ExactNumber(1, 3);
  q.priceable_probability = ExactNumber(1, 2);
  q.spanning_tree_probability = ExactNumber(1, 3);
  // Every fourth instance uses fractional costs so the grid has to reach below 1.
  q.cost_denominator = seed % 4 == 0 ? 3 : 1;
  return q;
}

RandomParams one_sided_params(std::uint64_t seed) {
  RandomParams q;
  q.seed = seed;
  q.shape = RandomShape::bipartite;
  q.min_vertices = 2;
  q.max_vertices = 10;
  q.max_edges = 20;
  q.edge_probability = ExactNumber(2, 5);
  q.priceable_probability = ExactNumber(1, 2);
  return q;
}

RandomParams two_sided_params(std::uint64_t seed) {
  RandomParams q = one_sided_params(seed);
  q.two_sided = true;
  q.min_vertices = 3;
  return q;
}

RandomParams multi_follower_params(std::uint64_t seed) {
  RandomParams q;
  q.seed = seed;
  q.min_vertices = 3;
  q.max_vertices = 6;
  q.max_edges = 9;
  q.edge_probability = ExactNumber(2, 5);
  q.priceable_probability = ExactNumber(2, 5);
  q.spanning_tree_probability = ExactNumber(1, 4);
  q.followers = 2 + seed % 2;
  return q;
}

RandomParams weighted_params(std::uint64_t seed) {
  RandomParams q = multi_follower_params(seed);
  q.weighted = true;
  q.followers = 1 + seed % 3;
  q.directed = seed % 5 == 0;
  return q;
}

}  // namespace fixtures
