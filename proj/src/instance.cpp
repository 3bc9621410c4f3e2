#include "stackprice/instance.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "stackprice/error.hpp"

namespace stackprice {

using nlohmann::json;

std::string_view to_string(GameKind g) { return g == GameKind::edge ? "edge" : "vertex"; }
std::string_view to_string(ItemKind k) { return k == ItemKind::fixed ? "fixed" : "priceable"; }
std::string_view to_string(Goal g) {
  switch (g) {
    case Goal::shortest_path: return "shortest_path";
    case Goal::spanning_tree: return "spanning_tree";
    case Goal::vertex_cover: return "vertex_cover";
  }
  return "?";
}

Instance::Instance(GameKind game, std::vector<std::string> vertices, std::vector<Item> items,
                   std::vector<GraphEdge> edges, std::vector<FollowerSpec> followers)
    : game_(game),
      vertices_(std::move(vertices)),
      items_(std::move(items)),
      edges_(std::move(edges)),
      followers_(std::move(followers)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].empty()) throw ValidationError("empty vertex id");
    if (!vertex_by_id_.emplace(vertices_[i], i).second)
      throw ValidationError("duplicate vertex id \"" + vertices_[i] + "\"");
  }
  auto need_vertex = [&](const std::string& v, const std::string& where) {
    if (!vertex_by_id_.count(v)) throw ValidationError("unknown vertex \"" + v + "\" in " + where);
  };

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  vertex_item_.assign(vertices_.size(), kNone);
  bool has_directed = false;
  for (std::size_t i = 0; i < items_.size(); ++i) {
    Item& it = items_[i];
    if (it.id.empty()) throw ValidationError("empty item id");
    if (!item_by_id_.emplace(it.id, i).second)
      throw ValidationError("duplicate item id \"" + it.id + "\"");
    if (it.kind == ItemKind::fixed) {
      if (it.cost.is_infinite()) throw ValidationError("item \"" + it.id + "\" has infinite cost");
      if (it.cost.sign() < 0) throw ValidationError("item \"" + it.id + "\" has negative cost");
    } else {
      it.cost = ExactNumber(0);
      priceable_.push_back(i);
    }
    if (game_ == GameKind::edge) {
      need_vertex(it.u, "item \"" + it.id + "\"");
      need_vertex(it.v, "item \"" + it.id + "\"");
      if (it.u == it.v) throw ValidationError("item \"" + it.id + "\" is a self-loop");
      has_directed = has_directed || it.directed;
    } else {
      if (it.vertex.empty()) it.vertex = it.id;
      need_vertex(it.vertex, "item \"" + it.id + "\"");
      std::size_t vi = vertex_by_id_.at(it.vertex);
      if (vertex_item_[vi] != kNone)
        throw ValidationError("vertex \"" + it.vertex + "\" carries more than one item");
      vertex_item_[vi] = i;
    }
  }
  if (game_ == GameKind::vertex) {
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      if (vertex_item_[v] == kNone)
        throw ValidationError("vertex \"" + vertices_[v] + "\" has no item");
    }
  } else {
    vertex_item_.clear();
    if (!edges_.empty()) throw ValidationError("edge games take their edges from the item list");
  }

  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const GraphEdge& ge = edges_[e];
    if (ge.id.empty()) throw ValidationError("empty edge id");
    if (!edge_by_id_.emplace(ge.id, e).second)
      throw ValidationError("duplicate edge id \"" + ge.id + "\"");
    need_vertex(ge.u, "edge \"" + ge.id + "\"");
    need_vertex(ge.v, "edge \"" + ge.id + "\"");
    if (ge.u == ge.v) throw ValidationError("edge \"" + ge.id + "\" is a self-loop");
  }

  if (followers_.empty()) throw ValidationError("instance has no followers");
  for (std::size_t f = 0; f < followers_.size(); ++f) {
    const FollowerSpec& fs = followers_[f];
    std::string where = "follower " + std::to_string(f);
    if (fs.demand.is_infinite() || fs.demand.sign() < 0)
      throw ValidationError(where + " has an invalid demand");
    switch (fs.goal) {
      case Goal::shortest_path:
        if (game_ != GameKind::edge) throw ValidationError(where + ": shortest_path needs an edge game");
        need_vertex(fs.source, where);
        need_vertex(fs.sink, where);
        if (fs.source == fs.sink) throw ValidationError(where + ": source equals sink");
        break;
      case Goal::spanning_tree:
        if (game_ != GameKind::edge) throw ValidationError(where + ": spanning_tree needs an edge game");
        if (has_directed) throw ValidationError(where + ": spanning_tree followers need undirected edges");
        break;
      case Goal::vertex_cover:
        if (game_ != GameKind::vertex) throw ValidationError(where + ": vertex_cover needs a vertex game");
        for (const auto& e : fs.edges) {
          if (!edge_by_id_.count(e)) throw ValidationError(where + ": unknown edge \"" + e + "\"");
        }
        break;
    }
  }
}

std::optional<std::size_t> Instance::find_item(std::string_view id) const {
  auto it = item_by_id_.find(std::string(id));
  if (it == item_by_id_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Instance::find_vertex(std::string_view id) const {
  auto it = vertex_by_id_.find(std::string(id));
  if (it == vertex_by_id_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Instance::find_edge(std::string_view id) const {
  auto it = edge_by_id_.find(std::string(id));
  if (it == edge_by_id_.end()) return std::nullopt;
  return it->second;
}

std::size_t Instance::item_index(std::string_view id) const {
  if (auto i = find_item(id)) return *i;
  throw ValidationError("unknown item \"" + std::string(id) + "\"");
}

std::size_t Instance::vertex_index(std::string_view id) const {
  if (auto i = find_vertex(id)) return *i;
  throw ValidationError("unknown vertex \"" + std::string(id) + "\"");
}

bool Instance::unweighted() const {
  for (const auto& f : followers_) {
    if (f.demand != ExactNumber(1)) return false;
  }
  return true;
}

PriceAssignment PriceAssignment::uniform(const Instance& inst, const ExactNumber& price) {
  PriceAssignment p;
  for (std::size_t i : inst.priceable_items()) p.set(inst.items()[i].id, price);
  return p;
}

void PriceAssignment::set(const std::string& id, const ExactNumber& price) {
  if (price.sign() < 0) throw ValidationError("negative price for \"" + id + "\"");
  prices_[id] = price;
}

const ExactNumber& PriceAssignment::at(const std::string& id) const {
  auto it = prices_.find(id);
  if (it == prices_.end()) throw ValidationError("no price for item \"" + id + "\"");
  return it->second;
}

std::vector<ExactNumber> item_weights(const Instance& inst, const PriceAssignment& p) {
  std::vector<ExactNumber> w;
  w.reserve(inst.items().size());
  for (const Item& it : inst.items()) {
    w.push_back(it.priceable() ? p.at(it.id) : it.cost);
  }
  for (const auto& [id, price] : p) {
    auto idx = inst.find_item(id);
    if (!idx) throw ValidationError("price for unknown item \"" + id + "\"");
    if (!inst.items()[*idx].priceable()) throw ValidationError("price for fixed item \"" + id + "\"");
  }
  return w;
}

WeightRevenue weight_and_revenue(const Instance& inst, const PriceAssignment& p, const ItemSet& s) {
  WeightRevenue out{ExactNumber(0), ExactNumber(0)};
  for (const std::string& id : s) {
    const Item& it = inst.items()[inst.item_index(id)];
    if (it.priceable()) {
      const ExactNumber& price = p.at(id);
      out.weight += price;
      out.revenue += price;
    } else {
      out.weight += it.cost;
    }
  }
  return out;
}

void require_valid(const Instance& inst) {
  ValidationReport r = validate(inst);
  if (!r.ok) throw ValidationError(r.message);
}

// ---------------------------------------------------------------------------
// JSON format

namespace {

std::string position_of(const std::string& path) { return " (at " + path + ")"; }

const json& field(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing field \"") + key + "\"" + position_of(path));
  return *it;
}

std::string string_field(const json& obj, const char* key, const std::string& path) {
  const json& v = field(obj, key, path);
  if (!v.is_string()) throw ParseError(std::string("field \"") + key + "\" must be a string" + position_of(path));
  return v.get<std::string>();
}

std::string optional_string(const json& obj, const char* key, const std::string& path) {
  if (!obj.contains(key)) return {};
  return string_field(obj, key, path);
}

ExactNumber number_field(const json& obj, const char* key, const std::string& path) {
  const json& v = field(obj, key, path);
  try {
    if (v.is_string()) return ExactNumber::parse(v.get<std::string>());
    if (v.is_number_integer()) return ExactNumber(v.get<long>());
  } catch (const ParseError& e) {
    throw ParseError(std::string(e.what()) + position_of(path + "." + key));
  }
  throw ParseError(std::string("field \"") + key + "\" must be a numeric string" + position_of(path));
}

const json& array_field(const json& obj, const char* key, const std::string& path) {
  const json& v = field(obj, key, path);
  if (!v.is_array()) throw ParseError(std::string("field \"") + key + "\" must be an array" + position_of(path));
  return v;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError("instance must be a JSON object");

  std::string game_str = string_field(doc, "game", "$");
  GameKind game;
  if (game_str == "edge") {
    game = GameKind::edge;
  } else if (game_str == "vertex") {
    game = GameKind::vertex;
  } else {
    throw ParseError("unknown game \"" + game_str + "\"" + position_of("$.game"));
  }

  std::vector<std::string> vertices;
  const json& jv = array_field(doc, "vertices", "$");
  for (std::size_t i = 0; i < jv.size(); ++i) {
    if (!jv[i].is_string()) throw ParseError("vertex ids must be strings" + position_of("$.vertices[" + std::to_string(i) + "]"));
    vertices.push_back(jv[i].get<std::string>());
  }

  std::vector<Item> items;
  const json& ji = array_field(doc, "items", "$");
  for (std::size_t i = 0; i < ji.size(); ++i) {
    std::string path = "$.items[" + std::to_string(i) + "]";
    const json& o = ji[i];
    if (!o.is_object()) throw ParseError("item must be an object" + position_of(path));
    Item it;
    it.id = string_field(o, "id", path);
    std::string kind = string_field(o, "kind", path);
    if (kind == "fixed") {
      it.kind = ItemKind::fixed;
      it.cost = number_field(o, "cost", path);
    } else if (kind == "priceable") {
      it.kind = ItemKind::priceable;
      if (o.contains("cost")) throw ParseError("priceable items carry no cost" + position_of(path));
    } else {
      throw ParseError("unknown item kind \"" + kind + "\"" + position_of(path));
    }
    it.u = optional_string(o, "u", path);
    it.v = optional_string(o, "v", path);
    it.vertex = optional_string(o, "vertex", path);
    if (o.contains("directed")) {
      if (!o["directed"].is_boolean()) throw ParseError("\"directed\" must be a boolean" + position_of(path));
      it.directed = o["directed"].get<bool>();
    }
    items.push_back(std::move(it));
  }

  std::vector<GraphEdge> edges;
  if (doc.contains("edges")) {
    const json& je = array_field(doc, "edges", "$");
    for (std::size_t i = 0; i < je.size(); ++i) {
      std::string path = "$.edges[" + std::to_string(i) + "]";
      if (!je[i].is_object()) throw ParseError("edge must be an object" + position_of(path));
      edges.push_back({string_field(je[i], "id", path), string_field(je[i], "u", path),
                       string_field(je[i], "v", path)});
    }
  }

  std::vector<FollowerSpec> followers;
  const json& jf = array_field(doc, "followers", "$");
  for (std::size_t i = 0; i < jf.size(); ++i) {
    std::string path = "$.followers[" + std::to_string(i) + "]";
    const json& o = jf[i];
    if (!o.is_object()) throw ParseError("follower must be an object" + position_of(path));
    FollowerSpec fs;
    std::string type = string_field(o, "type", path);
    if (type == "shortest_path") {
      fs.goal = Goal::shortest_path;
      fs.source = string_field(o, "source", path);
      fs.sink = string_field(o, "sink", path);
    } else if (type == "spanning_tree") {
      fs.goal = Goal::spanning_tree;
    } else if (type == "vertex_cover") {
      fs.goal = Goal::vertex_cover;
      const json& je = array_field(o, "edges", path);
      for (const auto& e : je) {
        if (!e.is_string()) throw ParseError("edge ids must be strings" + position_of(path + ".edges"));
        fs.edges.push_back(e.get<std::string>());
      }
    } else {
      throw ParseError("unknown follower type \"" + type + "\"" + position_of(path));
    }
    if (o.contains("demand")) fs.demand = number_field(o, "demand", path);
    followers.push_back(std::move(fs));
  }

  return Instance(game, std::move(vertices), std::move(items), std::move(edges), std::move(followers));
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

std::string serialize_instance(const Instance& inst) {
  json doc;
  doc["game"] = std::string(to_string(inst.game()));
  doc["vertices"] = inst.vertices();
  json items = json::array();
  for (const Item& it : inst.items()) {
    json o;
    o["id"] = it.id;
    o["kind"] = std::string(to_string(it.kind));
    if (!it.priceable()) o["cost"] = it.cost.str();
    if (inst.game() == GameKind::edge) {
      o["u"] = it.u;
      o["v"] = it.v;
      if (it.directed) o["directed"] = true;
    } else {
      o["vertex"] = it.vertex;
    }
    items.push_back(std::move(o));
  }
  doc["items"] = std::move(items);
  if (inst.game() == GameKind::vertex) {
    json edges = json::array();
    for (const GraphEdge& e : inst.edges()) edges.push_back({{"id", e.id}, {"u", e.u}, {"v", e.v}});
    doc["edges"] = std::move(edges);
  }
  json followers = json::array();
  for (const FollowerSpec& f : inst.followers()) {
    json o;
    o["type"] = std::string(to_string(f.goal));
    if (f.goal == Goal::shortest_path) {
      o["source"] = f.source;
      o["sink"] = f.sink;
    }
    if (f.goal == Goal::vertex_cover) o["edges"] = f.edges;
    if (f.demand != ExactNumber(1)) o["demand"] = f.demand.str();
    followers.push_back(std::move(o));
  }
  doc["followers"] = std::move(followers);
  return doc.dump(2) + "\n";
}

std::string instance_digest(const Instance& inst) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(serialize_instance(inst))));
  return buf;
}

}  // namespace stackprice
