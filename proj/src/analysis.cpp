#include "stackprice/analysis.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <queue>
#include <stdexcept>

#include "stackprice/error.hpp"
#include "stackprice/followers.hpp"
#include "stackprice/oracle.hpp"

namespace stackprice {

const ProfilePoint* ThresholdProfile::point(std::size_t j) const {
  for (const auto& p : points) {
    if (p.j == j) return &p;
  }
  return nullptr;
}

HullResult hull_from_deltas(std::span<const ExactNumber> deltas) {
  if (deltas.empty() || !deltas[0].is_zero()) throw ValidationError("delta table must start with 0");
  for (std::size_t j = 1; j < deltas.size(); ++j) {
    if (deltas[j].is_infinite() || deltas[j] < deltas[j - 1])
      throw ValidationError("delta table must be finite and non-decreasing");
  }

  auto x = [](std::size_t j) { return ExactNumber(static_cast<long>(j)); };
  std::vector<std::size_t> chain;
  for (std::size_t j = 0; j < deltas.size(); ++j) {
    while (chain.size() >= 2) {
      std::size_t a = chain[chain.size() - 2];
      std::size_t b = chain.back();
      // Keep b only on a strict clockwise turn a -> b -> j.
      ExactNumber cross = (x(b) - x(a)) * (deltas[j] - deltas[a]) - (deltas[b] - deltas[a]) * (x(j) - x(a));
      if (cross.sign() < 0) break;
      chain.pop_back();
    }
    chain.push_back(j);
  }
  while (chain.size() >= 2 && deltas[chain.back()] == deltas[chain[chain.size() - 2]]) chain.pop_back();

  HullResult out;
  out.hull = chain;
  for (std::size_t k = 1; k < chain.size(); ++k) {
    out.thetas.push_back((deltas[chain[k]] - deltas[chain[k - 1]]) / x(chain[k] - chain[k - 1]));
  }
  return out;
}

namespace {

struct Line {
  std::size_t slope;  // priceable items in the response
  ExactNumber cost;   // fixed part of the response
};

Line probe(const Instance& inst, std::size_t follower, const ExactNumber& price) {
  Response r = best_response(inst, follower, PriceAssignment::uniform(inst, price));
  return {r.priceable_used, r.fixed_cost()};
}

}  // namespace

ThresholdProfile parametric_profile(const Instance& inst, std::size_t follower) {
  const ExactNumber c0 = baseline_cost(inst, follower);
  const std::size_t m = inst.priceable_count();
  ThresholdProfile profile;
  profile.points.push_back({0, c0, ExactNumber(0)});
  profile.hull.push_back(0);
  if (m == 0) {
    profile.complete = true;
    return profile;
  }

  mpz_class den = 1;
  for (const Item& it : inst.items()) {
    if (!it.priceable()) den = lcm_denominator(den, it.cost);
  }
  const ExactNumber low = ExactNumber(1) / (ExactNumber(2 * static_cast<long>(m)) * ExactNumber(mpq_class(den)));
  const ExactNumber high = c0 * ExactNumber(static_cast<long>(m) + 1) + ExactNumber(1);

  Line top = probe(inst, follower, low);
  Line flat = probe(inst, follower, high);
  if (flat.slope != 0 || flat.cost != c0) throw std::logic_error("envelope probe above c_0 bought a priceable item");

  std::map<std::size_t, ExactNumber> cost_of{{0, flat.cost}};
  std::map<std::size_t, ExactNumber> theta_of;
  if (top.slope > 0) {
    cost_of[top.slope] = top.cost;
    std::vector<std::pair<Line, Line>> pending{{top, flat}};
    while (!pending.empty()) {
      auto [steep, shallow] = pending.back();
      pending.pop_back();
      const ExactNumber cross = (shallow.cost - steep.cost) / ExactNumber(static_cast<long>(steep.slope - shallow.slope));
      Line mid = probe(inst, follower, cross);
      if (mid.slope == steep.slope) {
        theta_of[steep.slope] = cross;
        continue;
      }
      if (mid.slope <= shallow.slope || mid.slope >= steep.slope)
        throw std::logic_error("envelope probe returned a line outside its bracket");
      cost_of[mid.slope] = mid.cost;
      pending.push_back({steep, mid});
      pending.push_back({mid, shallow});
    }
  }

  profile.points.clear();
  profile.hull.clear();
  for (const auto& [slope, cost] : cost_of) {
    profile.points.push_back({slope, cost, c0 - cost});
    profile.hull.push_back(slope);
    if (slope > 0) profile.thetas.push_back(theta_of.at(slope));
  }
  profile.complete = profile.hull.size() == m + 1;
  return profile;
}

ExactNumber constrained_fixed_cost(const Instance& inst, std::size_t follower, std::size_t j) {
  if (follower >= inst.follower_count()) throw ValidationError("follower index out of range");
  const FollowerSpec& fs = inst.followers()[follower];
  if (fs.goal != Goal::shortest_path)
    throw UnsupportedError("c_j by dynamic programming needs a shortest-path follower");
  if (j > inst.priceable_count()) throw ValidationError("j exceeds the number of priceable items");

  const std::size_t n = inst.vertices().size();
  const std::size_t layers = j + 1;
  struct Arc {
    std::size_t to;
    ExactNumber cost;
    bool priceable;
  };
  std::vector<std::vector<Arc>> adj(n);
  for (const Item& it : inst.items()) {
    std::size_t u = inst.vertex_index(it.u);
    std::size_t v = inst.vertex_index(it.v);
    adj[u].push_back({v, it.cost, it.priceable()});
    if (!it.directed) adj[v].push_back({u, it.cost, it.priceable()});
  }

  std::vector<std::optional<ExactNumber>> dist(n * layers);
  using Entry = std::pair<ExactNumber, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  const std::size_t start = inst.vertex_index(fs.source) * layers;
  dist[start] = ExactNumber(0);
  queue.emplace(ExactNumber(0), start);
  while (!queue.empty()) {
    auto [d, state] = queue.top();
    queue.pop();
    if (*dist[state] < d) continue;
    const std::size_t u = state / layers;
    const std::size_t used = state % layers;
    for (const Arc& arc : adj[u]) {
      std::size_t next_used = used + (arc.priceable ? 1 : 0);
      if (next_used >= layers) continue;
      std::size_t next = arc.to * layers + next_used;
      ExactNumber nd = d + arc.cost;
      if (!dist[next] || nd < *dist[next]) {
        dist[next] = nd;
        queue.emplace(nd, next);
      }
    }
  }

  ExactNumber best = ExactNumber::infinity();
  const std::size_t sink = inst.vertex_index(fs.sink);
  for (std::size_t l = 0; l < layers; ++l) {
    if (dist[sink * layers + l]) best = min(best, *dist[sink * layers + l]);
  }
  return best;
}

ExactNumber revenue_upper_bound(const ThresholdProfile& profile) {
  const ProfilePoint* last = profile.point(profile.hull.back());
  return last->delta;
}

ThresholdProfile full_profile(const Instance& inst, std::size_t follower, std::size_t limit) {
  const std::size_t m = inst.priceable_count();
  std::vector<ExactNumber> costs;
  if (inst.followers().at(follower).goal == Goal::shortest_path) {
    for (std::size_t j = 0; j <= m; ++j) costs.push_back(constrained_fixed_cost(inst, follower, j));
  } else {
    std::vector<ItemSet> family;
    try {
      family = enumerate_feasible(inst, follower, limit);
    } catch (const LimitExceeded&) {
      return parametric_profile(inst, follower);
    }
    costs.assign(m + 1, ExactNumber::infinity());
    for (const ItemSet& s : family) {
      std::size_t used = 0;
      ExactNumber fixed(0);
      for (const auto& id : s) {
        const Item& it = inst.items()[inst.item_index(id)];
        if (it.priceable()) {
          ++used;
        } else {
          fixed += it.cost;
        }
      }
      costs[used] = min(costs[used], fixed);
    }
    for (std::size_t j = 1; j <= m; ++j) costs[j] = min(costs[j], costs[j - 1]);
  }

  ThresholdProfile profile;
  std::vector<ExactNumber> deltas;
  for (std::size_t j = 0; j <= m; ++j) {
    deltas.push_back(costs[0] - costs[j]);
    profile.points.push_back({j, costs[j], deltas.back()});
  }
  HullResult h = hull_from_deltas(deltas);
  profile.hull = std::move(h.hull);
  profile.thetas = std::move(h.thetas);
  profile.complete = true;
  return profile;
}

void write_profile_table(std::ostream& os, const ThresholdProfile& profile) {
  os << "j\tc_j\tdelta_j\thull\ttheta\n";
  for (const auto& p : profile.points) {
    auto pos = std::find(profile.hull.begin(), profile.hull.end(), p.j);
    bool on_hull = pos != profile.hull.end();
    os << p.j << '\t' << p.cost << '\t' << p.delta << '\t' << (on_hull ? "yes" : "no") << '\t';
    if (on_hull && p.j > 0) {
      os << profile.thetas[static_cast<std::size_t>(pos - profile.hull.begin()) - 1];
    } else {
      os << '-';
    }
    os << '\n';
  }
}

}  // namespace stackprice
