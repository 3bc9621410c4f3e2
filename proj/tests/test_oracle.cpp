#include <doctest.h>

#include "fixtures.hpp"
#include "stackprice/error.hpp"
#include "stackprice/followers.hpp"
#include "stackprice/oracle.hpp"
#include "stackprice/singleprice.hpp"

using namespace stackprice;

namespace {

LinearProgram lp(std::vector<std::vector<long>> rows, std::vector<long> rhs, std::vector<long> objective) {
  LinearProgram p;
  for (std::size_t j = 0; j < objective.size(); ++j) {
    p.variables.push_back("x" + std::to_string(j));
    p.objective.emplace_back(objective[j]);
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    LinearConstraint c;
    for (long a : rows[r]) c.coefficients.emplace_back(a);
    c.rhs = ExactNumber(rhs[r]);
    p.constraints.push_back(c);
  }
  return p;
}

}  // namespace

TEST_CASE("enumeration of feasible subnetworks") {
  CHECK(enumerate_feasible(fixtures::example_a(), 0) == std::vector<ItemSet>{{"e1"}, {"f1"}});
  CHECK(enumerate_feasible(gen_harmonic(2), 0) == std::vector<ItemSet>{{"e1", "e2"}, {"e1", "f1"}, {"f0"}});
  CHECK(enumerate_feasible(fixtures::instance_c(), 0) == std::vector<ItemSet>{{"a1", "a2"}, {"a1", "b2"}, {"b1", "b2"}});
  CHECK(enumerate_feasible(gen_harmonic(6), 0).size() == 7);
  CHECK_THROWS_AS(enumerate_feasible(gen_harmonic(6), 0, 3), LimitExceeded);

  // K4 has 16 spanning trees.
  const Instance k4 = parse_instance(R"({"game": "edge", "vertices": ["a", "b", "c", "d"],
    "items": [{"id": "ab", "kind": "fixed", "cost": "1", "u": "a", "v": "b"},
              {"id": "ac", "kind": "fixed", "cost": "1", "u": "a", "v": "c"},
              {"id": "ad", "kind": "fixed", "cost": "1", "u": "a", "v": "d"},
              {"id": "bc", "kind": "fixed", "cost": "1", "u": "b", "v": "c"},
              {"id": "bd", "kind": "fixed", "cost": "1", "u": "b", "v": "d"},
              {"id": "cd", "kind": "priceable", "u": "c", "v": "d"}],
    "followers": [{"type": "spanning_tree"}]})");
  CHECK(enumerate_feasible(k4, 0).size() == 16);
}

TEST_CASE("exact simplex") {
  LpResult r = lp_solve(lp({{1}}, {5}, {1}));
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == ExactNumber(5));
  CHECK(r.solution[0] == ExactNumber(5));

  r = lp_solve(lp({{1, 1}, {1, 0}}, {3, 3}, {1, 1}));
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == ExactNumber(3));

  CHECK(lp_solve(lp({{1}, {-1}}, {2, -3}, {1})).status == LpStatus::infeasible);
  CHECK(lp_solve(lp({{-1}}, {1}, {1})).status == LpStatus::unbounded);

  // Needs phase one: x >= 2, y >= 1, x + y <= 4, maximize x + 2y.
  r = lp_solve(lp({{-1, 0}, {0, -1}, {1, 1}}, {-2, -1, 4}, {1, 2}));
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == ExactNumber(6));
  CHECK(r.solution == std::vector<ExactNumber>{2, 2});
}

TEST_CASE("random LPs: solutions are feasible and not beaten by sampled points") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 3, m = 1 + rng() % 4;
    std::vector<std::vector<long>> rows(m, std::vector<long>(n));
    std::vector<long> rhs(m), obj(n);
    for (auto& row : rows)
      for (auto& a : row) a = static_cast<long>(rng() % 7) - 2;
    for (auto& b : rhs) b = static_cast<long>(rng() % 9) - 2;
    for (auto& c : obj) c = static_cast<long>(rng() % 5);
    // Box keeps it bounded.
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<long> box(n, 0);
      box[j] = 1;
      rows.push_back(box);
      rhs.push_back(6);
    }
    const LinearProgram p = lp(rows, rhs, obj);
    const LpResult r = lp_solve(p);
    if (r.status == LpStatus::unbounded) FAIL("box constraints make every LP bounded");
    // Integer grid points 0..6 in each coordinate.
    std::optional<ExactNumber> grid_best;
    std::vector<long> x(n, 0);
    for (;;) {
      bool ok = true;
      for (std::size_t i = 0; i < rows.size() && ok; ++i) {
        long lhs = 0;
        for (std::size_t j = 0; j < n; ++j) lhs += rows[i][j] * x[j];
        ok = lhs <= rhs[i];
      }
      if (ok) {
        long v = 0;
        for (std::size_t j = 0; j < n; ++j) v += obj[j] * x[j];
        if (!grid_best || ExactNumber(v) > *grid_best) grid_best = ExactNumber(v);
      }
      std::size_t j = 0;
      while (j < n && ++x[j] > 6) x[j++] = 0;
      if (j == n) break;
    }
    if (r.status == LpStatus::infeasible) {
      CHECK_FALSE(grid_best);
      continue;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      ExactNumber lhs(0);
      for (std::size_t j = 0; j < n; ++j) lhs += ExactNumber(rows[i][j]) * r.solution[j];
      CHECK(lhs <= ExactNumber(rhs[i]));
    }
    for (const auto& x_j : r.solution) CHECK(x_j >= ExactNumber(0));
    ExactNumber v(0);
    for (std::size_t j = 0; j < n; ++j) v += ExactNumber(obj[j]) * r.solution[j];
    CHECK(v == r.value);
    if (grid_best) CHECK(*grid_best <= r.value);
  }
}

TEST_CASE("prices for targets") {
  auto a = optimal_prices_for_targets(fixtures::example_a(), {{"e1"}});
  REQUIRE(a);
  CHECK(a->revenue == ExactNumber(5));
  CHECK(a->prices.at("e1") == ExactNumber(5));

  auto h = optimal_prices_for_targets(gen_harmonic(2), {{"e1", "e2"}});
  REQUIRE(h);
  CHECK(h->revenue == ExactNumber(3));
  CHECK(h->prices.at("e1") + h->prices.at("e2") == ExactNumber(3));

  auto f = optimal_prices_for_targets(fixtures::example_a(), {{"f1"}});
  REQUIRE(f);
  CHECK(f->revenue == ExactNumber(0));

  CHECK_THROWS_AS(optimal_prices_for_targets(fixtures::example_a(), {{"e1", "f1"}}), ValidationError);
  CHECK_THROWS_AS(optimal_prices_for_targets(fixtures::example_a(), {}), ValidationError);
}

TEST_CASE("exact optimum of worked instances") {
  CHECK(exact_optimum(fixtures::example_a()).revenue == ExactNumber(5));
  SolveReport h = exact_optimum(gen_harmonic(3));
  CHECK(h.revenue == ExactNumber(11, 2));
  CHECK(h.diagnostics.at("r_star") == ExactNumber(11, 2));
  CHECK(exact_optimum(fixtures::instance_c()).revenue == ExactNumber(3));
  CHECK(exact_optimum(fixtures::two_sided_d()).revenue == ExactNumber(5));
  CHECK_THROWS_AS(exact_optimum(gen_harmonic(6), 3), LimitExceeded);
  CHECK_THROWS_AS(exact_optimum(gen_harmonic(6), kDefaultTupleLimit, 3), LimitExceeded);
}

TEST_CASE("target prices round-trip through best response") {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const Instance inst = gen_random(seed % 2 ? fixtures::sp_mst_params(seed) : fixtures::weighted_params(seed));
    std::vector<std::vector<ItemSet>> families;
    for (std::size_t f = 0; f < inst.follower_count(); ++f) families.push_back(enumerate_feasible(inst, f));
    // Diagonal tuples: target i of each follower (mod family size).
    std::size_t widest = 0;
    for (const auto& fam : families) widest = std::max(widest, fam.size());
    for (std::size_t i = 0; i < widest; ++i) {
      std::vector<ItemSet> targets;
      for (const auto& fam : families) targets.push_back(fam[i % fam.size()]);
      auto tp = optimal_prices_for_targets(inst, targets);
      if (!tp) continue;
      ExactNumber total(0);
      for (std::size_t f = 0; f < targets.size(); ++f) {
        const Response r = best_response(inst, f, tp->prices);
        const auto want = weight_and_revenue(inst, tp->prices, targets[f]);
        CHECK(r.weight == want.weight);
        CHECK(r.revenue == want.revenue);
        total += inst.followers()[f].demand * r.revenue;
      }
      CHECK(total == tp->revenue);
    }
  }
}

TEST_CASE("optimum dominates single price and respects the envelope bound") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Instance inst = gen_random(fixtures::sp_mst_params(seed));
    const SolveReport opt = exact_optimum(inst);
    const SolveReport sp = run_single_price(inst, ExactNumber(1, 4));
    CHECK(sp.revenue <= opt.revenue);
    CHECK(opt.revenue <= sp.diagnostics.at("upper_bound"));
    CHECK(evaluate_prices(inst, opt.prices).revenue == opt.revenue);
  }
}
