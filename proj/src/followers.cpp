#include "stackprice/followers.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "stackprice/error.hpp"
#include "stackprice/flow.hpp"

namespace stackprice {

namespace {

struct ItemView {
  std::vector<PerturbedWeight> key;  // per item
  std::vector<bool> usable;          // false for priceable items priced +inf
};

ItemView view_of(const Instance& inst, const PriceAssignment& p) {
  std::vector<ExactNumber> w = item_weights(inst, p);
  ItemView out;
  out.key.reserve(w.size());
  out.usable.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const bool priced = inst.items()[i].priceable();
    out.usable.push_back(w[i].is_finite());
    if (w[i].is_infinite()) {
      out.key.push_back(PerturbedWeight::fixed(ExactNumber(0)));
    } else {
      out.key.push_back(priced ? PerturbedWeight::priced(w[i]) : PerturbedWeight::fixed(w[i]));
    }
  }
  return out;
}

ValidationError unserved(std::size_t follower) {
  return ValidationError("follower " + std::to_string(follower) +
                         " has no feasible subnetwork under the given prices");
}

std::vector<std::size_t> shortest_path(const Instance& inst, std::size_t follower, const ItemView& view) {
  const FollowerSpec& fs = inst.followers()[follower];
  const std::size_t n = inst.vertices().size();
  struct Arc {
    std::size_t to;
    std::size_t item;
  };
  std::vector<std::vector<Arc>> adj(n);
  for (std::size_t i = 0; i < inst.items().size(); ++i) {
    if (!view.usable[i]) continue;
    const Item& it = inst.items()[i];
    std::size_t u = inst.vertex_index(it.u);
    std::size_t v = inst.vertex_index(it.v);
    adj[u].push_back({v, i});
    if (!it.directed) adj[v].push_back({u, i});
  }

  const std::size_t src = inst.vertex_index(fs.source);
  const std::size_t dst = inst.vertex_index(fs.sink);
  std::vector<std::optional<PerturbedWeight>> dist(n);
  std::vector<std::size_t> pred_item(n), pred_vertex(n);
  std::vector<bool> done(n, false);

  using Entry = std::pair<PerturbedWeight, std::size_t>;
  auto later = [](const Entry& a, const Entry& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second > b.second;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(later)> queue(later);
  dist[src] = PerturbedWeight::fixed(ExactNumber(0));
  queue.emplace(*dist[src], src);
  while (!queue.empty()) {
    auto [d, u] = queue.top();
    queue.pop();
    if (done[u]) continue;
    done[u] = true;
    if (u == dst) break;
    for (const Arc& arc : adj[u]) {
      PerturbedWeight nd = d + view.key[arc.item];
      if (!dist[arc.to] || nd < *dist[arc.to]) {
        dist[arc.to] = nd;
        pred_item[arc.to] = arc.item;
        pred_vertex[arc.to] = u;
        queue.emplace(nd, arc.to);
      }
    }
  }
  if (!dist[dst]) throw unserved(follower);

  std::vector<std::size_t> path;
  for (std::size_t v = dst; v != src; v = pred_vertex[v]) path.push_back(pred_item[v]);
  return path;
}

std::vector<std::size_t> spanning_tree(const Instance& inst, std::size_t follower, const ItemView& view) {
  const std::size_t n = inst.vertices().size();
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < inst.items().size(); ++i) {
    if (view.usable[i]) order.push_back(i);
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (view.key[a] != view.key[b]) return view.key[a] < view.key[b];
    return inst.items()[a].id < inst.items()[b].id;
  });

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::size_t> tree;
  for (std::size_t i : order) {
    std::size_t ru = find(inst.vertex_index(inst.items()[i].u));
    std::size_t rv = find(inst.vertex_index(inst.items()[i].v));
    if (ru == rv) continue;
    parent[ru] = rv;
    tree.push_back(i);
  }
  if (n > 0 && tree.size() + 1 != n) throw unserved(follower);
  return tree;
}

}  // namespace

Response best_response(const Instance& inst, std::size_t follower, const PriceAssignment& p) {
  if (follower >= inst.follower_count()) throw ValidationError("follower index out of range");
  const FollowerSpec& fs = inst.followers()[follower];

  ItemSet chosen;
  if (fs.goal == Goal::vertex_cover) {
    item_weights(inst, p);  // reject incomplete price assignments up front
    FlowNetwork net = build_dual_network(inst, p, follower, CapacityMode::perturbed, false);
    try {
      chosen = max_flow(net, inst).cover.cover;
    } catch (const ValidationError&) {
      throw unserved(follower);
    }
  } else {
    ItemView view = view_of(inst, p);
    std::vector<std::size_t> picked =
        fs.goal == Goal::shortest_path ? shortest_path(inst, follower, view) : spanning_tree(inst, follower, view);
    for (std::size_t i : picked) chosen.insert(inst.items()[i].id);
  }

  Response r;
  WeightRevenue wr = weight_and_revenue(inst, p, chosen);
  r.weight = wr.weight;
  r.revenue = wr.revenue;
  for (const auto& id : chosen) {
    if (inst.items()[inst.item_index(id)].priceable()) ++r.priceable_used;
  }
  r.chosen = std::move(chosen);
  return r;
}

ExactNumber baseline_cost(const Instance& inst, std::size_t follower) {
  return best_response(inst, follower, PriceAssignment::uniform(inst, ExactNumber::infinity())).weight;
}

ValidationReport validate(const Instance& inst) {
  ValidationReport report;
  for (std::size_t f = 0; f < inst.follower_count(); ++f) {
    try {
      report.baseline.push_back(baseline_cost(inst, f));
    } catch (const ValidationError&) {
      report.ok = false;
      report.failed_follower = f;
      report.message = "follower " + std::to_string(f) + " has no feasible subnetwork made of fixed items only";
      return report;
    }
  }
  return report;
}

}  // namespace stackprice
