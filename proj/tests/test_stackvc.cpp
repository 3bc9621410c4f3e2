#include <doctest.h>

#include "fixtures.hpp"
#include "stackprice/analysis.hpp"
#include "stackprice/error.hpp"
#include "stackprice/oracle.hpp"
#include "stackprice/stackvc.hpp"

using namespace stackprice;

TEST_CASE("instance C") {
  const SolveReport r = solve_one_sided(fixtures::instance_c());
  CHECK(r.prices.at("a1") == ExactNumber(3));
  CHECK(r.revenue == ExactNumber(3));
  CHECK(r.diagnostics.at("c0") == ExactNumber(6));
  CHECK(r.diagnostics.at("cn") == ExactNumber(3));
  CHECK(r.diagnostics.at("revenue_bound") == ExactNumber(3));
  CHECK(r.diagnostics.at("fixed_path_violations") == ExactNumber(0));
  CHECK(r.diagnostics.at("cover_violations") == ExactNumber(0));
  CHECK(r.per_follower[0].chosen == ItemSet{"a1", "a2"});
  CHECK(r.trace == std::vector<std::string>{"phase 1: s -> a2 -> b2 -> t (+3)", "phase 2: s -> a1 -> b1 -> t (+2)",
                                            "phase 2: s -> a1 -> b2 -> t (+1)"});
}

TEST_CASE("degenerate one-sided inputs") {
  const Instance lonely = parse_instance(R"({"game": "vertex", "vertices": ["a1", "a2", "b1"],
    "items": [{"id": "a1", "kind": "priceable"}, {"id": "a2", "kind": "priceable"},
              {"id": "b1", "kind": "fixed", "cost": "2"}],
    "edges": [{"id": "e", "u": "a1", "v": "b1"}],
    "followers": [{"type": "vertex_cover", "edges": ["e"]}]})");
  SolveReport r = solve_one_sided(lonely);
  CHECK(r.prices.at("a2") == ExactNumber(0));
  CHECK(r.prices.at("a1") == ExactNumber(2));
  CHECK(r.revenue == ExactNumber(2));

  const Instance fixed_only = parse_instance(R"({"game": "vertex", "vertices": ["a", "b"],
    "items": [{"id": "a", "kind": "fixed", "cost": "2"}, {"id": "b", "kind": "fixed", "cost": "1"}],
    "edges": [{"id": "ab", "u": "a", "v": "b"}],
    "followers": [{"type": "vertex_cover", "edges": ["ab"]}]})");
  r = solve_one_sided(fixed_only);
  CHECK(r.revenue == ExactNumber(0));
  CHECK(r.prices.empty());
  CHECK(r.diagnostics.at("c0") == r.diagnostics.at("cn"));
}

TEST_CASE("unsupported inputs") {
  CHECK_THROWS_AS(solve_one_sided(fixtures::two_sided_d()), UnsupportedError);
  CHECK_THROWS_AS(solve_one_sided(fixtures::example_a()), UnsupportedError);
  const Instance two = gen_from_single_minded({{{"p1"}, ExactNumber(2)}, {{"p1"}, ExactNumber(3)}});
  CHECK_THROWS_AS(solve_one_sided(two), UnsupportedError);
  CHECK_THROWS_AS(solve_two_sided(two), UnsupportedError);
}

TEST_CASE("two-sided solver") {
  const SolveReport one = solve_one_sided(fixtures::instance_c());
  const SolveReport both = solve_two_sided(fixtures::instance_c());
  CHECK(both.prices == one.prices);
  CHECK(both.revenue == one.revenue);

  const SolveReport d = solve_two_sided(fixtures::two_sided_d());
  CHECK(d.revenue == ExactNumber(5));
  CHECK(d.prices.at("a1") == ExactNumber(5));
  CHECK(d.prices.at("b2").is_infinite());
  CHECK(d.diagnostics.at("run_a_revenue") == ExactNumber(5));
  CHECK(d.diagnostics.at("run_b_revenue") == ExactNumber(4));
}

TEST_CASE("one-sided revenue is optimal on random instances") {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    const Instance inst = gen_random(fixtures::one_sided_params(seed));
    const SolveReport r = solve_one_sided(inst);
    const SolveReport opt = exact_optimum(inst);
    CHECK(r.revenue == opt.revenue);
    CHECK(r.revenue == inst.followers()[0].demand * r.diagnostics.at("revenue_bound"));
    CHECK(r.diagnostics.at("revenue_bound") == r.diagnostics.at("c0") - r.diagnostics.at("cn"));
    CHECK(r.diagnostics.at("revenue_bound") == revenue_upper_bound(parametric_profile(inst, 0)));
    CHECK(r.diagnostics.at("fixed_path_violations") == ExactNumber(0));
    CHECK(r.diagnostics.at("cover_violations") == ExactNumber(0));
  }
}

TEST_CASE("two-sided revenue is within a factor two on random instances") {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    const Instance inst = gen_random(fixtures::two_sided_params(seed));
    const SolveReport r = solve_two_sided(inst);
    const SolveReport opt = exact_optimum(inst);
    CHECK(ExactNumber(2) * r.revenue >= opt.revenue);
    CHECK(r.revenue <= opt.revenue);
  }
}
