#include <doctest.h>

#include "fixtures.hpp"
#include "stackprice/error.hpp"
#include "stackprice/flow.hpp"
#include "stackprice/oracle.hpp"

using namespace stackprice;
using fixtures::prices;

namespace {

std::optional<ExactNumber> capacity(const FlowNetwork& net, const std::string& from, const std::string& to) {
  for (const auto& arc : net.arcs()) {
    if (net.nodes()[arc.from].name == from && net.nodes()[arc.to].name == to)
      return arc.capacity ? arc.capacity->weight : ExactNumber::infinity();
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("dual network of instance C") {
  const Instance c = fixtures::instance_c();
  FlowNetwork net = build_dual_network(c, prices({{"a1", 0}}));
  CHECK(net.nodes().size() == 6);
  CHECK(net.arcs().size() == 7);
  CHECK(capacity(net, "s", "a1") == ExactNumber(0));
  CHECK(capacity(net, "s", "a2") == ExactNumber(3));
  CHECK(capacity(net, "b1", "t") == ExactNumber(2));
  CHECK(capacity(net, "b2", "t") == ExactNumber(4));
  CHECK(capacity(net, "a1", "b1")->is_infinite());
  CHECK(capacity(net, "a1", "b2")->is_infinite());
  CHECK(capacity(net, "a2", "b2")->is_infinite());

  MaxFlowResult r = max_flow(net, c);
  CHECK(r.value == ExactNumber(3));
  CHECK(r.cover.cover == ItemSet{"a1", "a2"});
  CHECK(r.cover.cost == ExactNumber(3));

  FlowNetwork priced = build_dual_network(c, prices({{"a1", 3}}));
  CHECK(max_flow(priced, c).value == ExactNumber(6));
}

TEST_CASE("small networks") {
  const Instance edge = parse_instance(R"({"game": "vertex", "vertices": ["a", "b"],
    "items": [{"id": "a", "kind": "fixed", "cost": "2"}, {"id": "b", "kind": "fixed", "cost": "1"}],
    "edges": [{"id": "ab", "u": "a", "v": "b"}],
    "followers": [{"type": "vertex_cover", "edges": ["ab"]}]})");
  FlowNetwork net = build_dual_network(edge, PriceAssignment{});
  MaxFlowResult r = max_flow(net, edge);
  CHECK(r.value == ExactNumber(1));
  CHECK(r.cover.cover == ItemSet{"b"});

  const Instance empty = parse_instance(R"({"game": "vertex", "vertices": ["a", "b"],
    "items": [{"id": "a", "kind": "fixed", "cost": "2"}, {"id": "b", "kind": "priceable"}],
    "followers": [{"type": "vertex_cover", "edges": []}]})");
  FlowNetwork none = build_dual_network(empty, prices({{"b", 1}}));
  for (std::size_t n = 2; n < none.nodes().size(); ++n) CHECK(none.degree(n) == 0);
  CHECK(max_flow(none, empty).value == ExactNumber(0));

  const Instance tri = parse_instance(R"({"game": "vertex", "vertices": ["x", "y", "z"],
    "items": [{"id": "x", "kind": "fixed", "cost": "1"}, {"id": "y", "kind": "fixed", "cost": "1"},
              {"id": "z", "kind": "fixed", "cost": "1"}],
    "edges": [{"id": "xy", "u": "x", "v": "y"}, {"id": "yz", "u": "y", "v": "z"}, {"id": "xz", "u": "x", "v": "z"}],
    "followers": [{"type": "vertex_cover", "edges": ["xy", "yz", "xz"]}]})");
  CHECK_THROWS_AS(build_dual_network(tri, PriceAssignment{}), UnsupportedError);
}

TEST_CASE("max flow equals the cheapest cover") {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const Instance inst = gen_random(seed % 2 ? fixtures::one_sided_params(seed) : fixtures::two_sided_params(seed));
    PriceAssignment p;
    for (std::size_t i : inst.priceable_items()) p.set(inst.items()[i].id, ExactNumber(static_cast<long>(rng() % 13), 2));
    FlowNetwork net = build_dual_network(inst, p);
    const MaxFlowResult r = max_flow(net, inst);

    ExactNumber cheapest = ExactNumber::infinity();
    for (const auto& s : enumerate_feasible(inst, 0)) cheapest = min(cheapest, weight_and_revenue(inst, p, s).weight);
    CHECK(r.value == cheapest);
    CHECK(r.cover.cost == r.value);
    // The cut is a cover.
    for (const auto& e : inst.edges()) CHECK((r.cover.cover.count(e.u) + r.cover.cover.count(e.v)) > 0);
  }
}
