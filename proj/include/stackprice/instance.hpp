#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "stackprice/exact.hpp"

namespace stackprice {

enum class GameKind { edge, vertex };
enum class ItemKind { fixed, priceable };
enum class Goal { shortest_path, spanning_tree, vertex_cover };

std::string_view to_string(GameKind g);
std::string_view to_string(ItemKind k);
std::string_view to_string(Goal g);

/// A fixed-cost or priceable edge (edge game) or vertex (vertex game).
struct Item {
  std::string id;
  ItemKind kind = ItemKind::fixed;
  ExactNumber cost;  // meaningful for fixed items only
  // edge game
  std::string u;
  std::string v;
  bool directed = false;
  // vertex game
  std::string vertex;

  bool priceable() const { return kind == ItemKind::priceable; }
};

/// Plain graph edge of a vertex game. Not an item: it carries no cost.
struct GraphEdge {
  std::string id;
  std::string u;
  std::string v;
};

struct FollowerSpec {
  Goal goal = Goal::shortest_path;
  std::string source;              // shortest_path
  std::string sink;                // shortest_path
  std::vector<std::string> edges;  // vertex_cover: ids of GraphEdges to cover
  ExactNumber demand{1};
};

/// Set of item ids. Ordered, so iteration is lexicographic by id.
using ItemSet = std::set<std::string>;

/// Immutable Stackelberg pricing instance.
///
/// The constructor checks structure (unique ids, known references,
/// non-negative finite costs and demands, goal/game compatibility) and
/// throws ValidationError. Whether every follower has an all-fixed fallback
/// is a separate check, see validate().
class Instance {
 public:
  Instance(GameKind game, std::vector<std::string> vertices, std::vector<Item> items,
           std::vector<GraphEdge> edges, std::vector<FollowerSpec> followers);

  GameKind game() const { return game_; }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Item>& items() const { return items_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  const std::vector<FollowerSpec>& followers() const { return followers_; }

  std::size_t priceable_count() const { return priceable_.size(); }
  std::size_t follower_count() const { return followers_.size(); }
  /// Item indices of the priceable items, in item order.
  const std::vector<std::size_t>& priceable_items() const { return priceable_; }

  std::optional<std::size_t> find_item(std::string_view id) const;
  std::optional<std::size_t> find_vertex(std::string_view id) const;
  std::optional<std::size_t> find_edge(std::string_view id) const;
  std::size_t item_index(std::string_view id) const;  // throws ValidationError
  std::size_t vertex_index(std::string_view id) const;
  /// Vertex game: index of the item standing for vertex `vertex_idx`.
  std::size_t item_of_vertex(std::size_t vertex_idx) const { return vertex_item_.at(vertex_idx); }

  /// True when every demand equals 1.
  bool unweighted() const;

 private:
  GameKind game_;
  std::vector<std::string> vertices_;
  std::vector<Item> items_;
  std::vector<GraphEdge> edges_;
  std::vector<FollowerSpec> followers_;

  std::unordered_map<std::string, std::size_t> item_by_id_;
  std::unordered_map<std::string, std::size_t> vertex_by_id_;
  std::unordered_map<std::string, std::size_t> edge_by_id_;
  std::vector<std::size_t> vertex_item_;
  std::vector<std::size_t> priceable_;
};

/// Prices of the priceable items; +infinity removes an item from play.
class PriceAssignment {
 public:
  PriceAssignment() = default;

  /// Same price on every priceable item of `inst`.
  static PriceAssignment uniform(const Instance& inst, const ExactNumber& price);

  /// Throws ValidationError for a negative price.
  void set(const std::string& id, const ExactNumber& price);
  const ExactNumber& at(const std::string& id) const;
  bool contains(const std::string& id) const { return prices_.count(id) != 0; }
  std::size_t size() const { return prices_.size(); }
  bool empty() const { return prices_.empty(); }

  auto begin() const { return prices_.begin(); }
  auto end() const { return prices_.end(); }

  friend bool operator==(const PriceAssignment&, const PriceAssignment&) = default;

 private:
  std::map<std::string, ExactNumber> prices_;
};

/// Per-item weight under `p`: fixed cost, or price for priceable items.
/// Throws ValidationError when a priceable item is unpriced or an entry names
/// a fixed or unknown item.
std::vector<ExactNumber> item_weights(const Instance& inst, const PriceAssignment& p);

struct WeightRevenue {
  ExactNumber weight;
  ExactNumber revenue;
};

/// w(S) and r(S). Throws ValidationError on unknown ids.
WeightRevenue weight_and_revenue(const Instance& inst, const PriceAssignment& p, const ItemSet& s);

struct ValidationReport {
  bool ok = true;
  std::optional<std::size_t> failed_follower;
  std::string message;
  std::vector<ExactNumber> baseline;  // c_0 per follower (filled up to the failure)
};

/// Checks that every follower can be served by fixed items alone.
ValidationReport validate(const Instance& inst);
/// Throws ValidationError when validate() fails.
void require_valid(const Instance& inst);

/// Decodes the JSON instance format. Throws ParseError / ValidationError.
Instance parse_instance(std::string_view text);
Instance load_instance(const std::string& path);
/// Canonical JSON text (sorted keys, two-space indent).
std::string serialize_instance(const Instance& inst);
/// FNV-1a digest of the canonical serialization, as 16 hex digits.
std::string instance_digest(const Instance& inst);

}  // namespace stackprice
