#include "stackprice/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "stackprice/error.hpp"
#include "stackprice/followers.hpp"
#include "stackprice/singleprice.hpp"

namespace stackprice {

namespace {

LimitExceeded too_many(std::size_t follower, std::size_t limit) {
  return LimitExceeded("follower " + std::to_string(follower) + " has more than " + std::to_string(limit) +
                       " feasible subnetworks");
}

class PathEnumerator {
 public:
  PathEnumerator(const Instance& inst, std::size_t follower, std::size_t limit)
      : inst_(inst), follower_(follower), limit_(limit), adj_(inst.vertices().size()) {
    for (std::size_t i = 0; i < inst.items().size(); ++i) {
      const Item& it = inst.items()[i];
      std::size_t u = inst.vertex_index(it.u);
      std::size_t v = inst.vertex_index(it.v);
      adj_[u].push_back({v, i});
      if (!it.directed) adj_[v].push_back({u, i});
    }
    on_path_.assign(inst.vertices().size(), false);
  }

  std::vector<ItemSet> run() {
    const FollowerSpec& fs = inst_.followers()[follower_];
    sink_ = inst_.vertex_index(fs.sink);
    visit(inst_.vertex_index(fs.source));
    return std::move(out_);
  }

 private:
  void visit(std::size_t u) {
    if (u == sink_) {
      if (out_.size() >= limit_) throw too_many(follower_, limit_);
      ItemSet s;
      for (std::size_t i : items_) s.insert(inst_.items()[i].id);
      out_.push_back(std::move(s));
      return;
    }
    on_path_[u] = true;
    for (auto [v, item] : adj_[u]) {
      if (on_path_[v]) continue;
      items_.push_back(item);
      visit(v);
      items_.pop_back();
    }
    on_path_[u] = false;
  }

  const Instance& inst_;
  std::size_t follower_;
  std::size_t limit_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj_;
  std::vector<bool> on_path_;
  std::vector<std::size_t> items_;
  std::size_t sink_ = 0;
  std::vector<ItemSet> out_;
};

class TreeEnumerator {
 public:
  TreeEnumerator(const Instance& inst, std::size_t follower, std::size_t limit)
      : inst_(inst), follower_(follower), limit_(limit), n_(inst.vertices().size()) {
    for (const Item& it : inst.items()) ends_.emplace_back(inst.vertex_index(it.u), inst.vertex_index(it.v));
    parent_.resize(n_);
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    size_.assign(n_, 1);
  }

  std::vector<ItemSet> run() {
    if (n_ <= 1) return {ItemSet{}};
    branch(0);
    return std::move(out_);
  }

 private:
  std::size_t find(std::size_t x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  // Could the current forest still be completed with edges first..end?
  bool completable(std::size_t first) const {
    std::vector<std::size_t> p(n_);
    for (std::size_t v = 0; v < n_; ++v) p[v] = find(v);
    auto root = [&](std::size_t x) {
      while (p[x] != x) x = p[x] = p[p[x]];
      return x;
    };
    std::size_t joined = chosen_.size();
    for (std::size_t e = first; e < ends_.size() && joined + 1 < n_; ++e) {
      std::size_t a = root(ends_[e].first), b = root(ends_[e].second);
      if (a != b) {
        p[a] = b;
        ++joined;
      }
    }
    return joined + 1 == n_;
  }

  void branch(std::size_t e) {
    if (chosen_.size() + 1 == n_) {
      if (out_.size() >= limit_) throw too_many(follower_, limit_);
      ItemSet s;
      for (std::size_t i : chosen_) s.insert(inst_.items()[i].id);
      out_.push_back(std::move(s));
      return;
    }
    if (e == ends_.size()) return;
    std::size_t a = find(ends_[e].first), b = find(ends_[e].second);
    if (a != b) {
      if (size_[a] > size_[b]) std::swap(a, b);
      parent_[a] = b;
      size_[b] += size_[a];
      chosen_.push_back(e);
      branch(e + 1);
      chosen_.pop_back();
      size_[b] -= size_[a];
      parent_[a] = a;
    }
    if (completable(e + 1)) branch(e + 1);
  }

  const Instance& inst_;
  std::size_t follower_;
  std::size_t limit_;
  std::size_t n_;
  std::vector<std::pair<std::size_t, std::size_t>> ends_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::vector<std::size_t> chosen_;
  std::vector<ItemSet> out_;
};

std::vector<ItemSet> minimal_covers(const Instance& inst, std::size_t follower, std::size_t limit) {
  const FollowerSpec& fs = inst.followers()[follower];
  std::vector<std::size_t> touched;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& id : fs.edges) {
    const GraphEdge& ge = inst.edges()[*inst.find_edge(id)];
    edges.emplace_back(inst.vertex_index(ge.u), inst.vertex_index(ge.v));
    touched.push_back(edges.back().first);
    touched.push_back(edges.back().second);
  }
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  if (touched.size() > 24) throw LimitExceeded("vertex-cover enumeration supports at most 24 vertices");

  std::vector<std::size_t> bit(inst.vertices().size(), 0);
  for (std::size_t k = 0; k < touched.size(); ++k) bit[touched[k]] = k;

  std::vector<ItemSet> out;
  const std::uint32_t full = 1u << touched.size();
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    auto in = [&](std::size_t v) { return (mask >> bit[v]) & 1u; };
    bool cover = true;
    for (auto [u, v] : edges) {
      if (!in(u) && !in(v)) {
        cover = false;
        break;
      }
    }
    if (!cover) continue;
    // Minimal: each member has an edge whose other end is outside.
    bool minimal = true;
    for (std::size_t k = 0; k < touched.size() && minimal; ++k) {
      if (!((mask >> k) & 1u)) continue;
      bool needed = false;
      for (auto [u, v] : edges) {
        if ((u == touched[k] && !in(v)) || (v == touched[k] && !in(u))) {
          needed = true;
          break;
        }
      }
      minimal = needed;
    }
    if (!minimal) continue;
    if (out.size() >= limit) throw too_many(follower, limit);
    ItemSet s;
    for (std::size_t k = 0; k < touched.size(); ++k) {
      if ((mask >> k) & 1u) s.insert(inst.items()[inst.item_of_vertex(touched[k])].id);
    }
    out.push_back(std::move(s));
  }
  return out;
}

// Feasible subnetworks grouped by their priceable part; only the cheapest
// fixed part per group matters for prices and revenue.
struct Profile {
  std::vector<std::size_t> priced;  // sorted item indices
  ExactNumber fixed;
  ItemSet representative;
};

Profile profile_of(const Instance& inst, const ItemSet& s) {
  Profile p{{}, ExactNumber(0), s};
  for (const auto& id : s) {
    std::size_t i = inst.item_index(id);
    if (inst.items()[i].priceable()) {
      p.priced.push_back(i);
    } else {
      p.fixed += inst.items()[i].cost;
    }
  }
  std::sort(p.priced.begin(), p.priced.end());
  return p;
}

std::vector<Profile> profiles_of(const Instance& inst, const std::vector<ItemSet>& family) {
  std::map<std::vector<std::size_t>, Profile> best;
  for (const ItemSet& s : family) {
    Profile p = profile_of(inst, s);
    auto it = best.find(p.priced);
    if (it == best.end() || p.fixed < it->second.fixed) best.insert_or_assign(p.priced, std::move(p));
  }
  std::vector<Profile> out;
  for (auto& [key, p] : best) out.push_back(std::move(p));
  std::sort(out.begin(), out.end(),
            [](const Profile& a, const Profile& b) { return a.representative < b.representative; });
  return out;
}

struct TargetLp {
  std::optional<TargetPricing> pricing;
  bool solved = false;
};

// Prop.-1 LP for one choice of target profile per follower.
TargetLp solve_targets(const Instance& inst, const std::vector<std::vector<Profile>>& alternatives,
                       const std::vector<const Profile*>& targets) {
  std::vector<std::size_t> vars;
  for (const Profile* t : targets) vars.insert(vars.end(), t->priced.begin(), t->priced.end());
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  std::vector<long> var_of(inst.items().size(), -1);
  for (std::size_t k = 0; k < vars.size(); ++k) var_of[vars[k]] = static_cast<long>(k);

  LinearProgram lp;
  for (std::size_t i : vars) lp.variables.push_back(inst.items()[i].id);
  lp.objective.assign(vars.size(), ExactNumber(0));

  std::map<std::vector<int>, ExactNumber> rows;
  for (std::size_t j = 0; j < targets.size(); ++j) {
    const Profile& target = *targets[j];
    const ExactNumber& demand = inst.followers()[j].demand;
    for (std::size_t i : target.priced) lp.objective[static_cast<std::size_t>(var_of[i])] += demand;

    for (const Profile& alt : alternatives[j]) {
      bool available = std::all_of(alt.priced.begin(), alt.priced.end(), [&](std::size_t i) { return var_of[i] >= 0; });
      if (!available) continue;  // contains an item priced +inf
      std::vector<int> coeff(vars.size(), 0);
      for (std::size_t i : target.priced) coeff[static_cast<std::size_t>(var_of[i])] += 1;
      for (std::size_t i : alt.priced) coeff[static_cast<std::size_t>(var_of[i])] -= 1;
      ExactNumber rhs = alt.fixed - target.fixed;
      if (std::all_of(coeff.begin(), coeff.end(), [](int c) { return c == 0; })) {
        if (rhs.sign() < 0) return {std::nullopt, false};
        continue;
      }
      auto it = rows.find(coeff);
      if (it == rows.end()) {
        rows.emplace(std::move(coeff), rhs);
      } else if (rhs < it->second) {
        it->second = rhs;
      }
    }
  }
  for (const auto& [coeff, rhs] : rows) {
    LinearConstraint con;
    for (int c : coeff) con.coefficients.emplace_back(static_cast<long>(c));
    con.rhs = rhs;
    lp.constraints.push_back(std::move(con));
  }

  LpResult res = lp_solve(lp);
  if (res.status == LpStatus::infeasible) return {std::nullopt, true};
  if (res.status == LpStatus::unbounded)
    throw std::logic_error("target LP unbounded although every follower has an all-fixed alternative");

  // A row with negative rhs compares the target with a cheaper-fixed
  // alternative; at equality that alternative earns more and wins the tie,
  // so such rows must hold strictly. Look for an optimal point where they do.
  auto strict_tight = [&](const std::vector<ExactNumber>& x) {
    for (const auto& con : lp.constraints) {
      if (con.rhs.sign() >= 0) continue;
      ExactNumber lhs(0);
      for (std::size_t k = 0; k < x.size(); ++k) lhs += con.coefficients[k] * x[k];
      if (lhs == con.rhs) return true;
    }
    return false;
  };
  std::vector<ExactNumber> solution = res.solution;
  if (strict_tight(solution)) {
    LinearProgram slack = lp;
    slack.variables.push_back("slack");
    slack.objective.assign(vars.size(), ExactNumber(0));
    slack.objective.push_back(ExactNumber(1));
    for (auto& con : slack.constraints) con.coefficients.push_back(ExactNumber(con.rhs.sign() < 0 ? 1 : 0));
    LinearConstraint keep_value;
    for (const auto& c : lp.objective) keep_value.coefficients.push_back(-c);
    keep_value.coefficients.push_back(ExactNumber(0));
    keep_value.rhs = -res.value;
    slack.constraints.push_back(keep_value);
    LinearConstraint cap;
    cap.coefficients.assign(vars.size(), ExactNumber(0));
    cap.coefficients.push_back(ExactNumber(1));
    cap.rhs = ExactNumber(1);
    slack.constraints.push_back(cap);
    LpResult second = lp_solve(slack);
    if (second.status != LpStatus::optimal || !second.value.sign()) return {std::nullopt, true};
    solution.assign(second.solution.begin(), second.solution.end() - 1);
  }

  TargetPricing out;
  out.prices = PriceAssignment::uniform(inst, ExactNumber::infinity());
  for (std::size_t k = 0; k < vars.size(); ++k) out.prices.set(lp.variables[k], solution[k]);
  out.revenue = res.value;
  return {std::move(out), true};
}

}  // namespace

std::vector<ItemSet> enumerate_feasible(const Instance& inst, std::size_t follower, std::size_t limit) {
  if (follower >= inst.follower_count()) throw ValidationError("follower index out of range");
  std::vector<ItemSet> out;
  switch (inst.followers()[follower].goal) {
    case Goal::shortest_path:
      out = PathEnumerator(inst, follower, limit).run();
      break;
    case Goal::spanning_tree:
      out = TreeEnumerator(inst, follower, limit).run();
      break;
    case Goal::vertex_cover:
      out = minimal_covers(inst, follower, limit);
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<TargetPricing> optimal_prices_for_targets(const Instance& inst, const std::vector<ItemSet>& targets,
                                                        std::size_t limit) {
  if (targets.size() != inst.follower_count()) throw ValidationError("need exactly one target per follower");
  std::vector<std::vector<Profile>> alternatives;
  std::vector<Profile> chosen;
  for (std::size_t j = 0; j < targets.size(); ++j) {
    std::vector<ItemSet> family = enumerate_feasible(inst, j, limit);
    if (!std::binary_search(family.begin(), family.end(), targets[j]))
      throw ValidationError("target of follower " + std::to_string(j) + " is not a feasible subnetwork");
    alternatives.push_back(profiles_of(inst, family));
    chosen.push_back(profile_of(inst, targets[j]));
  }
  std::vector<const Profile*> ptrs;
  for (const auto& p : chosen) ptrs.push_back(&p);
  return solve_targets(inst, alternatives, ptrs).pricing;
}

SolveReport exact_optimum(const Instance& inst, std::size_t tuple_limit, std::size_t enumeration_limit) {
  ValidationReport valid = validate(inst);
  if (!valid.ok) throw ValidationError(valid.message);

  const std::size_t k = inst.follower_count();
  std::vector<std::vector<Profile>> profiles;
  std::size_t tuples = 1;
  for (std::size_t j = 0; j < k; ++j) {
    profiles.push_back(profiles_of(inst, enumerate_feasible(inst, j, enumeration_limit)));
    if (profiles.back().empty()) throw ValidationError("follower " + std::to_string(j) + " has no subnetwork");
    if (tuples > tuple_limit / profiles.back().size())
      throw LimitExceeded("more than " + std::to_string(tuple_limit) + " target tuples");
    tuples *= profiles.back().size();
  }

  // Each follower pays at most c_0 - (fixed part of its target).
  struct Candidate {
    ExactNumber bound;
    std::size_t index;
  };
  std::vector<Candidate> order;
  order.reserve(tuples);
  for (std::size_t t = 0; t < tuples; ++t) {
    ExactNumber bound(0);
    bool possible = true;
    for (std::size_t j = 0, rest = t; j < k; ++j) {
      const Profile& p = profiles[j][rest % profiles[j].size()];
      rest /= profiles[j].size();
      ExactNumber slack = valid.baseline[j] - p.fixed;
      if (slack.sign() < 0) {
        possible = false;
        break;
      }
      bound += inst.followers()[j].demand * slack;
    }
    if (possible) order.push_back({bound, t});
  }
  std::stable_sort(order.begin(), order.end(), [](const Candidate& a, const Candidate& b) { return a.bound > b.bound; });

  std::optional<TargetPricing> best;
  std::size_t best_index = 0;
  std::size_t solved = 0;
  for (const Candidate& cand : order) {
    if (best && cand.bound < best->revenue) break;
    std::vector<const Profile*> targets;
    for (std::size_t j = 0, rest = cand.index; j < k; ++j) {
      targets.push_back(&profiles[j][rest % profiles[j].size()]);
      rest /= profiles[j].size();
    }
    TargetLp lp = solve_targets(inst, profiles, targets);
    if (lp.solved) ++solved;
    if (!lp.pricing) continue;
    if (!best || lp.pricing->revenue > best->revenue ||
        (lp.pricing->revenue == best->revenue && cand.index < best_index)) {
      best = std::move(lp.pricing);
      best_index = cand.index;
    }
  }
  if (!best) throw std::logic_error("the all-fixed target tuple is always feasible");

  Outcome realized = evaluate_prices(inst, best->prices);
  if (realized.revenue != best->revenue)
    throw std::logic_error("realized revenue " + realized.revenue.str() + " differs from LP optimum " +
                           best->revenue.str());

  SolveReport report;
  report.algorithm = "exact";
  report.prices = best->prices;
  report.revenue = realized.revenue;
  report.per_follower = std::move(realized.responses);
  report.diagnostics["tuples"] = ExactNumber(static_cast<long>(tuples));
  report.diagnostics["lp_solved"] = ExactNumber(static_cast<long>(solved));
  report.diagnostics["r_star"] = best->revenue;
  return report;
}

}  // namespace stackprice
