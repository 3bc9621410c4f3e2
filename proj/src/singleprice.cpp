#include "stackprice/singleprice.hpp"

#include "stackprice/analysis.hpp"
#include "stackprice/error.hpp"
#include "stackprice/followers.hpp"

namespace stackprice {

Outcome evaluate_prices(const Instance& inst, const PriceAssignment& p) {
  Outcome out{ExactNumber(0), {}};
  for (std::size_t f = 0; f < inst.follower_count(); ++f) {
    Response r = best_response(inst, f, p);
    out.revenue += inst.followers()[f].demand * r.revenue;
    out.responses.push_back(std::move(r));
  }
  return out;
}

std::vector<ExactNumber> candidate_grid(const Instance& inst, const ExactNumber& epsilon) {
  if (epsilon.is_infinite() || epsilon.sign() <= 0) throw ValidationError("epsilon must be a positive rational");
  const std::size_t m = inst.priceable_count();
  if (m == 0) return {};

  ValidationReport valid = validate(inst);
  if (!valid.ok) throw ValidationError(valid.message);
  ExactNumber top(0);
  for (const auto& c0 : valid.baseline) top = max(top, c0);
  if (top.is_zero()) return {};

  mpz_class den = 1;
  for (const Item& it : inst.items()) {
    if (!it.priceable()) den = lcm_denominator(den, it.cost);
  }
  const ExactNumber base = ExactNumber(1) + epsilon;
  const ExactNumber floor_price =
      ExactNumber(1) / (base * ExactNumber(static_cast<long>(m)) * ExactNumber(mpq_class(den)));

  int hi = 0;
  while (pow(base, hi) < top) ++hi;
  while (pow(base, hi - 1) >= top) --hi;
  int lo = 0;
  while (pow(base, lo) > floor_price) --lo;
  while (pow(base, lo + 1) <= floor_price) ++lo;

  std::vector<ExactNumber> grid;
  for (int j = lo; j <= hi; ++j) grid.push_back(pow(base, j));
  return grid;
}

Outcome revenue_at_single_price(const Instance& inst, const ExactNumber& price) {
  return evaluate_prices(inst, PriceAssignment::uniform(inst, price));
}

ExactNumber single_price_guarantee(const Instance& inst, const ExactNumber& epsilon) {
  const int m = static_cast<int>(inst.priceable_count());
  const int k = static_cast<int>(inst.follower_count());
  const ExactNumber scale = ExactNumber(1) + epsilon;
  if (k == 1) return scale * harmonic(m);
  if (inst.unweighted()) return scale * (harmonic(k) + harmonic(m));
  return scale * ExactNumber(static_cast<long>(m) * m);
}

SolveReport run_single_price(const Instance& inst, const ExactNumber& epsilon) {
  std::vector<ExactNumber> grid = candidate_grid(inst, epsilon);

  SolveReport report;
  report.algorithm = "single-price";
  std::optional<ExactNumber> best_price;
  Outcome best{ExactNumber(0), {}};
  for (const ExactNumber& price : grid) {
    Outcome o = revenue_at_single_price(inst, price);
    if (!best_price || o.revenue > best.revenue) {
      best_price = price;
      best = std::move(o);
    }
  }
  if (!best_price) {
    // Nothing worth pricing: every priceable item is dropped from play.
    best = evaluate_prices(inst, PriceAssignment::uniform(inst, ExactNumber::infinity()));
    report.prices = PriceAssignment::uniform(inst, ExactNumber::infinity());
  } else {
    report.prices = PriceAssignment::uniform(inst, *best_price);
    report.diagnostics["best_price"] = *best_price;
  }
  report.revenue = best.revenue;
  report.per_follower = std::move(best.responses);

  ExactNumber bound(0);
  for (std::size_t f = 0; f < inst.follower_count(); ++f) {
    bound += inst.followers()[f].demand * revenue_upper_bound(parametric_profile(inst, f));
  }
  report.diagnostics["candidates"] = ExactNumber(static_cast<long>(grid.size()));
  report.diagnostics["epsilon"] = epsilon;
  report.diagnostics["guarantee_factor"] = single_price_guarantee(inst, epsilon);
  report.diagnostics["upper_bound"] = bound;
  return report;
}

}  // namespace stackprice
