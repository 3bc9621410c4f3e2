#pragma once

#include <vector>

#include "stackprice/exact.hpp"
#include "stackprice/instance.hpp"
#include "stackprice/report.hpp"

namespace stackprice {

/// Candidate prices (1+eps)^j, ascending.
///
/// The upper end is the smallest power >= max_i c_0(i). The lower end is the
/// largest power <= 1/((1+eps) m D), D being the lcm of the fixed-cost
/// denominators: every positive hull threshold is a multiple of 1/D divided
/// by at most m, so each one has a candidate within a (1+eps) factor below
/// it. Empty when m = 0 or every c_0 is 0. Throws ValidationError for
/// eps <= 0.
std::vector<ExactNumber> candidate_grid(const Instance& inst, const ExactNumber& epsilon);

/// Puts `price` on every priceable item and sums demand-weighted revenue.
Outcome revenue_at_single_price(const Instance& inst, const ExactNumber& price);

/// Guarantee factor proven for the instance class: (1+eps) H_m for one
/// follower, (1+eps)(H_k + H_m) for unit demands, (1+eps) m^2 otherwise.
ExactNumber single_price_guarantee(const Instance& inst, const ExactNumber& epsilon);

/// Best grid price. Ties go to the smallest price. Diagnostics: candidates,
/// best_price, guarantee_factor, epsilon.
SolveReport run_single_price(const Instance& inst, const ExactNumber& epsilon);

}  // namespace stackprice
