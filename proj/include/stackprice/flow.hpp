#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "stackprice/followers.hpp"
#include "stackprice/instance.hpp"

namespace stackprice {

/// Arc capacity; std::nullopt is +infinity.
using FlowCapacity = std::optional<PerturbedWeight>;

enum class Side { a, b };

/// Two-colouring of the vertices touched by a set of graph edges.
///
/// Each connected component is oriented so that its priceable vertices land
/// on side A when they all share a colour; otherwise the component's first
/// vertex (in instance order) is put on side A.
struct Bipartition {
  std::vector<std::optional<Side>> side;  // per vertex; nullopt when untouched
  bool one_sided = true;                  // no priceable vertex on side B
};

/// Throws UnsupportedError when the edges do not form a bipartite graph.
Bipartition bipartition(const Instance& inst, const std::vector<std::size_t>& edge_indices,
                        bool include_isolated);

/// Dual flow network of a bipartite vertex-cover instance: s -> a (A side),
/// b -> t (B side) with the vertex weights as capacities, and every graph
/// edge directed A -> B with infinite capacity.
class FlowNetwork {
 public:
  static constexpr std::size_t kSource = 0;
  static constexpr std::size_t kSink = 1;

  struct Node {
    std::string name;
    std::optional<std::size_t> item;  // instance item index for graph vertices
    Side side = Side::a;
    bool priceable = false;
  };
  struct Arc {
    std::size_t from = 0;
    std::size_t to = 0;
    FlowCapacity capacity;
    PerturbedWeight flow{ExactNumber(0), ExactNumber(0)};
  };

  FlowNetwork();

  std::size_t add_node(Node node);
  std::size_t add_arc(std::size_t from, std::size_t to, FlowCapacity capacity);
  void set_capacity(std::size_t arc, FlowCapacity capacity);
  void add_flow(std::size_t arc, const PerturbedWeight& delta);

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  /// Arc indices touching `node`, in insertion order.
  const std::vector<std::size_t>& incident(std::size_t node) const { return incident_[node]; }
  /// The s->v or v->t arc of a graph vertex node.
  std::size_t terminal_arc(std::size_t node) const { return terminal_arc_.at(node); }
  /// Number of interior (infinite) arcs at a graph vertex node.
  std::size_t degree(std::size_t node) const;

  /// Net flow out of the source.
  PerturbedWeight value() const;

 private:
  std::vector<Node> nodes_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<std::size_t> terminal_arc_;
};

/// How priceable vertices enter the network.
enum class CapacityMode {
  plain,      // price as capacity, no revenue perturbation
  perturbed,  // (price, -price): min cut is the leader-favourable cover
};

/// Builds the dual network of follower `follower` (a vertex-cover follower)
/// under prices `p`. Vertices untouched by the follower's edges are added
/// without interior arcs when `include_isolated` is set.
FlowNetwork build_dual_network(const Instance& inst, const PriceAssignment& p, std::size_t follower = 0,
                               CapacityMode mode = CapacityMode::plain, bool include_isolated = true);

struct PathStep {
  std::size_t arc = 0;
  bool forward = true;
};

struct AugmentingPath {
  std::vector<std::size_t> nodes;  // s ... t
  std::vector<PathStep> steps;
  PerturbedWeight bottleneck{ExactNumber(0), ExactNumber(0)};
};

/// Shortest (fewest arcs) augmenting s-t path in the residual network, or
/// nullopt when the flow is maximum. Throws ValidationError when the path
/// has infinite residual capacity.
std::optional<AugmentingPath> find_augmenting_path(const FlowNetwork& net);
void augment(FlowNetwork& net, const AugmentingPath& path);
/// Nodes reachable from the source through arcs with residual capacity.
std::vector<bool> residual_reachable(const FlowNetwork& net);

struct CutCover {
  ItemSet cover;
  ExactNumber cost;
  PerturbedWeight perturbed_cost{ExactNumber(0), ExactNumber(0)};
};

/// Cover read off a minimum cut: A vertices not reachable from s plus B
/// vertices reachable from s. Vertices without interior arcs are skipped.
CutCover cut_cover(const FlowNetwork& net, const Instance& inst);

struct MaxFlowResult {
  ExactNumber value;
  PerturbedWeight perturbed_value{ExactNumber(0), ExactNumber(0)};
  CutCover cover;
  std::size_t augmentations = 0;
};

/// Augments along shortest paths until none is left (Edmonds-Karp), starting
/// from the network's current flow. `on_augment` sees every path before the
/// flow is pushed.
MaxFlowResult max_flow(FlowNetwork& net, const Instance& inst,
                       const std::function<void(const AugmentingPath&)>& on_augment = {});

}  // namespace stackprice
