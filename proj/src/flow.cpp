#include "stackprice/flow.hpp"

#include <algorithm>
#include <deque>

#include "stackprice/error.hpp"

namespace stackprice {

namespace {

const PerturbedWeight kZero{ExactNumber(0), ExactNumber(0)};

// Residual capacity of traversing `arc` in the given direction; nullopt = inf.
FlowCapacity residual(const FlowNetwork::Arc& arc, bool forward) {
  if (!forward) return arc.flow;
  if (!arc.capacity) return std::nullopt;
  return *arc.capacity - arc.flow;
}

bool positive(const FlowCapacity& c) { return !c || *c > kZero; }

}  // namespace

Bipartition bipartition(const Instance& inst, const std::vector<std::size_t>& edge_indices,
                        bool include_isolated) {
  const std::size_t n = inst.vertices().size();
  std::vector<std::vector<std::size_t>> adj(n);
  std::vector<bool> touched(n, include_isolated);
  for (std::size_t e : edge_indices) {
    const GraphEdge& ge = inst.edges()[e];
    std::size_t u = inst.vertex_index(ge.u);
    std::size_t v = inst.vertex_index(ge.v);
    adj[u].push_back(v);
    adj[v].push_back(u);
    touched[u] = touched[v] = true;
  }

  Bipartition out;
  out.side.assign(n, std::nullopt);
  std::vector<int> color(n, -1);
  for (std::size_t root = 0; root < n; ++root) {
    if (!touched[root] || color[root] >= 0) continue;
    std::vector<std::size_t> component{root};
    color[root] = 0;
    for (std::size_t head = 0; head < component.size(); ++head) {
      std::size_t u = component[head];
      for (std::size_t v : adj[u]) {
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          component.push_back(v);
        } else if (color[v] == color[u]) {
          throw UnsupportedError("vertex-cover graph is not bipartite (odd cycle through \"" +
                                 inst.vertices()[v] + "\")");
        }
      }
    }
    bool priced[2] = {false, false};
    for (std::size_t v : component) {
      if (inst.items()[inst.item_of_vertex(v)].priceable()) priced[color[v]] = true;
    }
    const int a_color = (priced[1] && !priced[0]) ? 1 : 0;
    if (priced[0] && priced[1]) out.one_sided = false;
    for (std::size_t v : component) out.side[v] = color[v] == a_color ? Side::a : Side::b;
  }
  return out;
}

FlowNetwork::FlowNetwork() {
  nodes_.push_back({"s", std::nullopt, Side::a, false});
  nodes_.push_back({"t", std::nullopt, Side::b, false});
  incident_.resize(2);
  terminal_arc_.resize(2, 0);
}

std::size_t FlowNetwork::add_node(Node node) {
  nodes_.push_back(std::move(node));
  incident_.emplace_back();
  terminal_arc_.push_back(0);
  return nodes_.size() - 1;
}

std::size_t FlowNetwork::add_arc(std::size_t from, std::size_t to, FlowCapacity capacity) {
  arcs_.push_back({from, to, std::move(capacity), kZero});
  std::size_t idx = arcs_.size() - 1;
  incident_[from].push_back(idx);
  incident_[to].push_back(idx);
  if (from == kSource) terminal_arc_[to] = idx;
  if (to == kSink) terminal_arc_[from] = idx;
  return idx;
}

void FlowNetwork::set_capacity(std::size_t arc, FlowCapacity capacity) { arcs_.at(arc).capacity = std::move(capacity); }

void FlowNetwork::add_flow(std::size_t arc, const PerturbedWeight& delta) { arcs_.at(arc).flow += delta; }

std::size_t FlowNetwork::degree(std::size_t node) const {
  std::size_t d = 0;
  for (std::size_t a : incident_[node]) {
    if (arcs_[a].from != kSource && arcs_[a].to != kSink) ++d;
  }
  return d;
}

PerturbedWeight FlowNetwork::value() const {
  PerturbedWeight v = kZero;
  for (std::size_t a : incident_[kSource]) {
    if (arcs_[a].from == kSource) {
      v += arcs_[a].flow;
    } else {
      v -= arcs_[a].flow;
    }
  }
  return v;
}

FlowNetwork build_dual_network(const Instance& inst, const PriceAssignment& p, std::size_t follower,
                               CapacityMode mode, bool include_isolated) {
  if (inst.game() != GameKind::vertex) throw UnsupportedError("dual network needs a vertex game");
  if (follower >= inst.follower_count()) throw ValidationError("follower index out of range");
  const FollowerSpec& fs = inst.followers()[follower];
  if (fs.goal != Goal::vertex_cover) throw UnsupportedError("dual network needs a vertex-cover follower");

  std::vector<std::size_t> edge_indices;
  for (const auto& id : fs.edges) edge_indices.push_back(*inst.find_edge(id));
  Bipartition part = bipartition(inst, edge_indices, include_isolated);

  std::vector<std::size_t> a_side, b_side;
  for (std::size_t v = 0; v < inst.vertices().size(); ++v) {
    if (!part.side[v]) continue;
    (*part.side[v] == Side::a ? a_side : b_side).push_back(v);
  }
  auto by_id = [&](std::size_t x, std::size_t y) { return inst.vertices()[x] < inst.vertices()[y]; };
  std::sort(a_side.begin(), a_side.end(), by_id);
  std::sort(b_side.begin(), b_side.end(), by_id);

  auto capacity_of = [&](std::size_t v) -> FlowCapacity {
    const Item& it = inst.items()[inst.item_of_vertex(v)];
    if (!it.priceable()) return PerturbedWeight::fixed(it.cost);
    const ExactNumber& price = p.at(it.id);
    if (price.is_infinite()) return std::nullopt;
    return mode == CapacityMode::perturbed ? PerturbedWeight::priced(price) : PerturbedWeight::fixed(price);
  };

  FlowNetwork net;
  std::vector<std::size_t> node_of(inst.vertices().size(), 0);
  for (const auto* group : {&a_side, &b_side}) {
    for (std::size_t v : *group) {
      std::size_t item = inst.item_of_vertex(v);
      node_of[v] = net.add_node({inst.vertices()[v], item, *part.side[v], inst.items()[item].priceable()});
    }
  }
  for (std::size_t v : a_side) net.add_arc(FlowNetwork::kSource, node_of[v], capacity_of(v));
  for (std::size_t e : edge_indices) {
    const GraphEdge& ge = inst.edges()[e];
    std::size_t u = inst.vertex_index(ge.u);
    std::size_t v = inst.vertex_index(ge.v);
    if (*part.side[u] == Side::b) std::swap(u, v);
    net.add_arc(node_of[u], node_of[v], std::nullopt);
  }
  for (std::size_t v : b_side) net.add_arc(node_of[v], FlowNetwork::kSink, capacity_of(v));
  return net;
}

std::optional<AugmentingPath> find_augmenting_path(const FlowNetwork& net) {
  const std::size_t n = net.nodes().size();
  std::vector<std::optional<PathStep>> via(n);
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue{FlowNetwork::kSource};
  seen[FlowNetwork::kSource] = true;
  while (!queue.empty() && !seen[FlowNetwork::kSink]) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t a : net.incident(u)) {
      const auto& arc = net.arcs()[a];
      bool forward = arc.from == u;
      std::size_t w = forward ? arc.to : arc.from;
      if (seen[w] || !positive(residual(arc, forward))) continue;
      seen[w] = true;
      via[w] = PathStep{a, forward};
      queue.push_back(w);
    }
  }
  if (!seen[FlowNetwork::kSink]) return std::nullopt;

  AugmentingPath path;
  FlowCapacity bottleneck = std::nullopt;
  for (std::size_t w = FlowNetwork::kSink; w != FlowNetwork::kSource;) {
    path.nodes.push_back(w);
    PathStep step = *via[w];
    path.steps.push_back(step);
    FlowCapacity r = residual(net.arcs()[step.arc], step.forward);
    if (r && (!bottleneck || *r < *bottleneck)) bottleneck = r;
    w = step.forward ? net.arcs()[step.arc].from : net.arcs()[step.arc].to;
  }
  path.nodes.push_back(FlowNetwork::kSource);
  std::reverse(path.nodes.begin(), path.nodes.end());
  std::reverse(path.steps.begin(), path.steps.end());
  if (!bottleneck) throw ValidationError("unbounded flow: an s-t path has infinite capacity");
  path.bottleneck = *bottleneck;
  return path;
}

void augment(FlowNetwork& net, const AugmentingPath& path) {
  for (const PathStep& step : path.steps) {
    if (step.forward) {
      net.add_flow(step.arc, path.bottleneck);
    } else {
      net.add_flow(step.arc, PerturbedWeight{ExactNumber(0), ExactNumber(0)} - path.bottleneck);
    }
  }
}

std::vector<bool> residual_reachable(const FlowNetwork& net) {
  std::vector<bool> seen(net.nodes().size(), false);
  std::deque<std::size_t> queue{FlowNetwork::kSource};
  seen[FlowNetwork::kSource] = true;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t a : net.incident(u)) {
      const auto& arc = net.arcs()[a];
      bool forward = arc.from == u;
      std::size_t w = forward ? arc.to : arc.from;
      if (!seen[w] && positive(residual(arc, forward))) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  return seen;
}

CutCover cut_cover(const FlowNetwork& net, const Instance& inst) {
  std::vector<bool> reach = residual_reachable(net);
  CutCover out;
  for (std::size_t n = 2; n < net.nodes().size(); ++n) {
    const auto& node = net.nodes()[n];
    if (net.degree(n) == 0) continue;
    bool in_cover = node.side == Side::a ? !reach[n] : reach[n];
    if (!in_cover) continue;
    const FlowCapacity& cap = net.arcs()[net.terminal_arc(n)].capacity;
    if (!cap) throw ValidationError("minimum cut crosses an infinite arc");
    out.cover.insert(inst.items()[*node.item].id);
    out.perturbed_cost += *cap;
  }
  out.cost = out.perturbed_cost.weight;
  return out;
}

MaxFlowResult max_flow(FlowNetwork& net, const Instance& inst,
                       const std::function<void(const AugmentingPath&)>& on_augment) {
  MaxFlowResult out;
  while (auto path = find_augmenting_path(net)) {
    if (on_augment) on_augment(*path);
    augment(net, *path);
    ++out.augmentations;
  }
  out.perturbed_value = net.value();
  out.value = out.perturbed_value.weight;
  out.cover = cut_cover(net, inst);
  return out;
}

}  // namespace stackprice
