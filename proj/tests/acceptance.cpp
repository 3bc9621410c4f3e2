// One line per acceptance criterion; exit status 1 when any line fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "stackprice/analysis.hpp"
#include "stackprice/error.hpp"
#include "stackprice/followers.hpp"
#include "stackprice/oracle.hpp"
#include "stackprice/singleprice.hpp"
#include "stackprice/stackvc.hpp"

using namespace stackprice;

namespace {

const ExactNumber kEpsilon(1, 4);

struct Tally {
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::string first;

  void fail(const std::string& what) {
    if (violations++ == 0) first = what;
  }
  void check(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
};

int failures = 0;
std::map<int, std::string> lines;

void report(int number, const std::string& name, const Tally& t, std::size_t required, const std::string& extra,
            double seconds) {
  const bool pass = t.violations == 0 && t.instances >= required;
  if (!pass) ++failures;
  std::ostringstream out;
  out << "criterion " << number << " (" << name << "): " << (pass ? "PASS" : "FAIL") << "  instances "
            << t.instances << ", violations " << t.violations;
  if (!extra.empty()) out << ", " << extra;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", seconds);
  out << ", " << buf << " s";
  if (t.violations) out << "; first: " << t.first;
  if (t.instances < required) out << "; needs " << required;
  lines[number] = out.str();
}

double since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string tag(const char* family, std::uint64_t seed) { return std::string(family) + " seed " + std::to_string(seed); }

ExactNumber envelope_bound(const Instance& inst) {
  ExactNumber total(0);
  for (std::size_t j = 0; j < inst.follower_count(); ++j)
    total += inst.followers()[j].demand * revenue_upper_bound(parametric_profile(inst, j));
  return total;
}

}  // namespace

int main() {
  Tally fact3;
  double fact3_seconds = 0;
  auto check_fact3 = [&](const Instance& inst, const ExactNumber& r_star, const std::string& what) {
    const auto start = std::chrono::steady_clock::now();
    ++fact3.instances;
    fact3.check(r_star <= envelope_bound(inst), what);
    fact3_seconds += since(start);
  };

  {  // 1
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    std::string ratios;
    for (long m = 1; m <= 6; ++m) {
      const Instance h = gen_harmonic(m);
      const ExactNumber r_star = exact_optimum(h).revenue;
      const ExactNumber sp = run_single_price(h, kEpsilon).revenue;
      const ExactNumber hm = harmonic(static_cast<int>(m));
      ++t.instances;
      t.check(r_star == ExactNumber(m) * hm, "m=" + std::to_string(m) + " r*=" + r_star.str());
      t.check(sp == ExactNumber(m), "m=" + std::to_string(m) + " single-price=" + sp.str());
      t.check(!sp.is_zero() && r_star / sp == hm, "m=" + std::to_string(m) + " ratio");
      ratios += (ratios.empty() ? "" : " ") + (r_star / sp).str();
      check_fact3(h, r_star, "harmonic m=" + std::to_string(m));
    }
    const double secs = since(start);
    t.check(secs < 5.0, "runtime over 5 s");
    report(1, "harmonic tightness", t, 6, "ratios " + ratios, secs);
  }

  {  // 2, 3, 10 share the corpus
    const auto start = std::chrono::steady_clock::now();
    Tally t2, t3, t10;
    std::size_t targets = 0;
    double secs3 = 0, secs10 = 0;
    for (std::uint64_t seed = 1; seed <= 500; ++seed) {
      const Instance inst = gen_random(fixtures::sp_mst_params(seed));
      const std::string what = tag("sp/mst", seed);
      const ExactNumber r_star = exact_optimum(inst).revenue;
      const ExactNumber sp = run_single_price(inst, kEpsilon).revenue;
      const ExactNumber bound = (ExactNumber(1) + kEpsilon) * harmonic(static_cast<int>(inst.priceable_count())) * sp;
      ++t2.instances;
      t2.check(r_star <= bound, what);
      check_fact3(inst, r_star, what);

      auto s3 = std::chrono::steady_clock::now();
      if (inst.followers()[0].goal == Goal::shortest_path) {
        ++t3.instances;
        const ThresholdProfile env = parametric_profile(inst, 0);
        std::vector<ExactNumber> deltas;
        const ExactNumber c0 = constrained_fixed_cost(inst, 0, 0);
        for (std::size_t j = 0; j <= inst.priceable_count(); ++j)
          deltas.push_back(c0 - constrained_fixed_cost(inst, 0, j));
        const HullResult direct = hull_from_deltas(deltas);
        t3.check(env.hull == direct.hull, what + " hull");
        t3.check(env.thetas == direct.thetas, what + " thetas");
        for (std::size_t k = 1; k < direct.hull.size(); ++k) {
          const std::size_t ik = direct.hull[k], prev = direct.hull[k - 1];
          t3.check(direct.thetas[k - 1] * ExactNumber(static_cast<long>(ik - prev)) == deltas[ik] - deltas[prev],
                   what + " slope identity");
        }
      }
      secs3 += since(s3);

      auto s10 = std::chrono::steady_clock::now();
      ++t10.instances;
      for (const ItemSet& target : enumerate_feasible(inst, 0)) {
        auto tp = optimal_prices_for_targets(inst, {target});
        if (!tp) continue;
        ++targets;
        const Response r = best_response(inst, 0, tp->prices);
        const auto want = weight_and_revenue(inst, tp->prices, target);
        t10.check(r.weight == want.weight && r.revenue == want.revenue, what + " target");
      }
      secs10 += since(s10);
    }
    const double total = since(start);
    report(2, "single-price bound, one follower", t2, 500, "", total - secs3 - secs10);
    report(3, "envelope equals hull of constrained costs", t3, 1, "", secs3);
    report(10, "target prices round-trip", t10, 500, std::to_string(targets) + " feasible targets", secs10);
  }

  {  // 5, 6
    const auto start = std::chrono::steady_clock::now();
    Tally t5, t6;
    {
      const SolveReport c = solve_one_sided(fixtures::instance_c());
      ++t5.instances;
      t5.check(c.prices.at("a1") == ExactNumber(3) && c.revenue == ExactNumber(3), "instance C");
    }
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
      const Instance inst = gen_random(fixtures::one_sided_params(seed));
      const std::string what = tag("one-sided", seed);
      const SolveReport r = solve_one_sided(inst);
      const ExactNumber r_star = exact_optimum(inst).revenue;
      ++t5.instances;
      t5.check(r.revenue == r_star, what + " revenue " + r.revenue.str() + " vs r* " + r_star.str());
      t5.check(r.revenue == r.diagnostics.at("c0") - r.diagnostics.at("cn"), what + " c0 - cn");
      ++t6.instances;
      t6.check(r.diagnostics.at("fixed_path_violations").is_zero(), what + " fixed path in phase 2");
      t6.check(r.diagnostics.at("cover_violations").is_zero(), what + " priceable vertex left out");
      check_fact3(inst, r_star, what);
    }
    const double secs = since(start);
    report(5, "one-sided cover pricing is optimal", t5, 301, "", secs);
    report(6, "flow invariants", t6, 300, "", 0);
  }

  {  // 7
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    ExactNumber worst(1);
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
      const Instance inst = gen_random(fixtures::two_sided_params(seed));
      const SolveReport r = solve_two_sided(inst);
      const ExactNumber r_star = exact_optimum(inst).revenue;
      ++t.instances;
      t.check(ExactNumber(2) * r.revenue >= r_star, tag("two-sided", seed));
      if (!r.revenue.is_zero()) worst = max(worst, r_star / r.revenue);
      check_fact3(inst, r_star, tag("two-sided", seed));
    }
    report(7, "two-sided cover pricing within factor 2", t, 300, "worst ratio " + worst.str(), since(start));
  }

  {  // 8
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    std::size_t over_limit = 0;
    for (std::uint64_t seed = 1; t.instances < 200 && seed <= 2000; ++seed) {
      const Instance inst = gen_random(fixtures::multi_follower_params(seed));
      ExactNumber r_star;
      try {
        r_star = exact_optimum(inst).revenue;
      } catch (const LimitExceeded&) {
        ++over_limit;
        continue;
      }
      const ExactNumber sp = run_single_price(inst, kEpsilon).revenue;
      const ExactNumber factor = (ExactNumber(1) + kEpsilon) *
                                 (harmonic(static_cast<int>(inst.follower_count())) +
                                  harmonic(static_cast<int>(inst.priceable_count())));
      ++t.instances;
      t.check(r_star <= factor * sp, tag("multi", seed));
      check_fact3(inst, r_star, tag("multi", seed));
    }
    report(8, "single-price bound, several followers", t, 200, std::to_string(over_limit) + " over the tuple limit",
           since(start));
  }

  {  // 9
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    std::size_t over_limit = 0;
    for (std::uint64_t seed = 1; t.instances < 200 && seed <= 2000; ++seed) {
      const Instance inst = gen_random(fixtures::weighted_params(seed));
      ExactNumber r_star;
      try {
        r_star = exact_optimum(inst).revenue;
      } catch (const LimitExceeded&) {
        ++over_limit;
        continue;
      }
      const ExactNumber sp = run_single_price(inst, kEpsilon).revenue;
      const ExactNumber m(static_cast<long>(inst.priceable_count()));
      ++t.instances;
      t.check(r_star <= (ExactNumber(1) + kEpsilon) * m * m * sp, tag("weighted", seed));
      check_fact3(inst, r_star, tag("weighted", seed));
    }
    report(9, "single-price bound, weighted followers", t, 200, std::to_string(over_limit) + " over the tuple limit",
           since(start));
  }

  report(4, "envelope bound dominates the optimum", fact3, 1, "", fact3_seconds);

  {  // 11
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    std::mt19937_64 rng(2024);
    const std::vector<std::string> products = {"p1", "p2", "p3", "p4"};
    for (int input = 0; input < 120; ++input) {
      std::vector<SingleMindedCustomer> sm;
      std::vector<UnitDemandCustomer> ud;
      const long customers = uniform_integer(rng, 1, 4);
      for (long c = 0; c < customers; ++c) {
        std::vector<std::string> pick;
        for (const auto& p : products)
          if (bernoulli(rng, ExactNumber(1, 2))) pick.push_back(p);
        if (pick.empty()) pick.push_back(products[static_cast<std::size_t>(uniform_integer(rng, 0, 3))]);
        sm.push_back({pick, ExactNumber(uniform_integer(rng, 0, 12), 2)});
        ud.push_back({pick, ExactNumber(uniform_integer(rng, 0, 12), 2), ExactNumber(uniform_integer(rng, 1, 8), 2)});
      }
      const Instance a = gen_from_single_minded(sm);
      const Instance b = gen_from_unit_demand(ud);
      ++t.instances;
      for (int round = 0; round < 8; ++round) {
        PriceAssignment p, pa, pb;
        for (const auto& id : products) p.set(id, ExactNumber(uniform_integer(rng, 0, 14), 2));
        for (std::size_t i : a.priceable_items()) pa.set(a.items()[i].id, p.at(a.items()[i].id));
        for (std::size_t i : b.priceable_items()) pb.set(b.items()[i].id, p.at(b.items()[i].id));
        t.check(evaluate_prices(a, pa).revenue == single_minded_revenue(sm, p),
                "single-minded input " + std::to_string(input));
        t.check(evaluate_prices(b, pb).revenue == unit_demand_revenue(ud, p),
                "unit-demand input " + std::to_string(input));
      }
    }
    report(11, "reductions match the pricing objective", t, 100, "", since(start));
  }

  for (const auto& [number, line] : lines) std::cout << line << '\n';
  return failures == 0 ? 0 : 1;
}
