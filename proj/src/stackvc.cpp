#include "stackprice/stackvc.hpp"

#include <sstream>

#include "stackprice/error.hpp"
#include "stackprice/followers.hpp"

namespace stackprice {

namespace {

void require_single_cover_follower(const Instance& inst) {
  if (inst.game() != GameKind::vertex) throw UnsupportedError("vertex-cover pricing needs a vertex game");
  if (inst.follower_count() != 1)
    throw UnsupportedError("exact vertex-cover pricing handles a single follower; use single-price or exact");
  if (inst.followers()[0].goal != Goal::vertex_cover) throw UnsupportedError("follower is not a vertex-cover follower");
  require_valid(inst);
}

std::string describe(const FlowNetwork& net, const AugmentingPath& path, int phase) {
  std::ostringstream os;
  os << "phase " << phase << ": " << net.nodes()[path.nodes.front()].name;
  for (std::size_t k = 0; k < path.steps.size(); ++k) {
    os << (path.steps[k].forward ? " -> " : " <- ") << net.nodes()[path.nodes[k + 1]].name;
  }
  os << " (+" << path.bottleneck.weight << ")";
  return os.str();
}

// Same instance with the listed priceable items made fixed at `cost`.
Instance freeze(const Instance& inst, const ItemSet& frozen, const ExactNumber& cost) {
  std::vector<Item> items = inst.items();
  for (Item& it : items) {
    if (frozen.count(it.id)) {
      it.kind = ItemKind::fixed;
      it.cost = cost;
    }
  }
  return Instance(inst.game(), inst.vertices(), std::move(items), inst.edges(), inst.followers());
}

}  // namespace

SolveReport solve_one_sided(const Instance& inst) {
  require_single_cover_follower(inst);

  FlowNetwork net = build_dual_network(inst, PriceAssignment::uniform(inst, ExactNumber(0)));
  std::vector<std::size_t> priced_nodes;
  for (std::size_t n = 2; n < net.nodes().size(); ++n) {
    if (!net.nodes()[n].priceable) continue;
    if (net.nodes()[n].side == Side::b)
      throw UnsupportedError("priceable vertices on both sides of the bipartition; use the two-sided solver");
    priced_nodes.push_back(n);
  }

  SolveReport report;
  report.algorithm = "stackvc";

  MaxFlowResult phase1 = max_flow(net, inst, [&](const AugmentingPath& path) {
    report.trace.push_back(describe(net, path, 1));
  });
  const ExactNumber cn = phase1.value;

  for (std::size_t n : priced_nodes) net.set_capacity(net.terminal_arc(n), std::nullopt);
  long fixed_paths = 0;
  MaxFlowResult phase2 = max_flow(net, inst, [&](const AugmentingPath& path) {
    report.trace.push_back(describe(net, path, 2));
    if (!net.nodes()[path.nodes[1]].priceable) ++fixed_paths;
  });
  const ExactNumber c0 = phase2.value;

  PriceAssignment prices;
  for (std::size_t n : priced_nodes) {
    const auto& arc = net.arcs()[net.terminal_arc(n)];
    prices.set(inst.items()[*net.nodes()[n].item].id, arc.flow.weight);
    net.set_capacity(net.terminal_arc(n), arc.flow);
  }
  // Every priceable vertex with an edge must stay in the cover at these prices.
  CutCover cover = cut_cover(net, inst);
  long missing = 0;
  for (std::size_t n : priced_nodes) {
    if (net.degree(n) > 0 && !cover.cover.count(inst.items()[*net.nodes()[n].item].id)) ++missing;
  }

  Outcome outcome = evaluate_prices(inst, prices);
  report.prices = std::move(prices);
  report.revenue = outcome.revenue;
  report.per_follower = std::move(outcome.responses);
  report.diagnostics["c0"] = c0;
  report.diagnostics["cn"] = cn;
  report.diagnostics["revenue_bound"] = c0 - cn;
  report.diagnostics["phase1_paths"] = ExactNumber(static_cast<long>(phase1.augmentations));
  report.diagnostics["phase2_paths"] = ExactNumber(static_cast<long>(phase2.augmentations));
  report.diagnostics["fixed_path_violations"] = ExactNumber(fixed_paths);
  report.diagnostics["cover_violations"] = ExactNumber(missing);
  return report;
}

SolveReport solve_two_sided(const Instance& inst) {
  require_single_cover_follower(inst);

  std::vector<std::size_t> edge_indices;
  for (const auto& id : inst.followers()[0].edges) edge_indices.push_back(*inst.find_edge(id));
  Bipartition part = bipartition(inst, edge_indices, true);
  ItemSet side_a, side_b;
  for (std::size_t v = 0; v < inst.vertices().size(); ++v) {
    const Item& it = inst.items()[inst.item_of_vertex(v)];
    if (!it.priceable()) continue;
    (*part.side[v] == Side::a ? side_a : side_b).insert(it.id);
  }

  // Above c0 the follower never buys the inactive side, same as pricing it +inf.
  const ExactNumber unused = validate(inst).baseline.at(0) + ExactNumber(1);
  SolveReport run_a = solve_one_sided(freeze(inst, side_b, unused));
  SolveReport run_b = solve_one_sided(freeze(inst, side_a, unused));
  const bool pick_b = run_b.revenue > run_a.revenue;
  SolveReport& best = pick_b ? run_b : run_a;
  const ItemSet& inactive = pick_b ? side_a : side_b;

  PriceAssignment prices = best.prices;
  for (const auto& id : inactive) prices.set(id, ExactNumber::infinity());

  SolveReport report;
  report.algorithm = "stackvc2";
  Outcome outcome = evaluate_prices(inst, prices);
  report.prices = std::move(prices);
  report.revenue = outcome.revenue;
  report.per_follower = std::move(outcome.responses);
  report.diagnostics = best.diagnostics;
  report.diagnostics["run_a_revenue"] = run_a.revenue;
  report.diagnostics["run_b_revenue"] = run_b.revenue;
  report.diagnostics["chosen_side"] = ExactNumber(pick_b ? 1 : 0);
  report.trace = std::move(best.trace);
  return report;
}

}  // namespace stackprice
