#include "stackprice/instances.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <set>

#include "stackprice/error.hpp"

namespace stackprice {

Instance gen_harmonic(long m) {
  if (m < 1) throw ValidationError("harmonic instance needs m >= 1");
  std::vector<std::string> vertices;
  for (long j = 0; j <= m; ++j) vertices.push_back("v" + std::to_string(j));
  const std::string& t = vertices.back();

  std::vector<Item> items;
  for (long j = 1; j <= m; ++j) {
    Item e;
    e.id = "e" + std::to_string(j);
    e.kind = ItemKind::priceable;
    e.u = vertices[j - 1];
    e.v = vertices[j];
    items.push_back(e);
  }
  const ExactNumber hm = harmonic(static_cast<int>(m));
  for (long j = 0; j < m; ++j) {
    Item f;
    f.id = "f" + std::to_string(j);
    f.cost = ExactNumber(m) * (hm - harmonic(static_cast<int>(j)));
    f.u = vertices[j];
    f.v = t;
    items.push_back(f);
  }
  FollowerSpec follower;
  follower.source = vertices.front();
  follower.sink = t;
  return Instance(GameKind::edge, vertices, items, {}, {follower});
}

namespace {

std::vector<std::string> unique_sorted(std::vector<std::string> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

ExactNumber bundle_price(const std::vector<std::string>& ids, const PriceAssignment& p) {
  ExactNumber sum(0);
  for (const auto& id : unique_sorted(ids)) sum += p.at(id);
  return sum;
}

}  // namespace

Instance gen_from_single_minded(const std::vector<SingleMindedCustomer>& customers) {
  std::set<std::string> products;
  for (const auto& c : customers) {
    if (c.bundle.empty()) throw ValidationError("single-minded customer with an empty bundle");
    products.insert(c.bundle.begin(), c.bundle.end());
  }
  std::vector<std::string> vertices(products.begin(), products.end());
  std::vector<Item> items;
  for (const auto& id : products) {
    Item it;
    it.id = id;
    it.kind = ItemKind::priceable;
    items.push_back(it);
  }
  std::vector<GraphEdge> edges;
  std::vector<FollowerSpec> followers;
  for (std::size_t j = 0; j < customers.size(); ++j) {
    const std::string name = "customer" + std::to_string(j + 1);
    vertices.push_back(name);
    Item it;
    it.id = name;
    it.cost = customers[j].budget;
    items.push_back(it);
    FollowerSpec f;
    f.goal = Goal::vertex_cover;
    for (const auto& product : unique_sorted(customers[j].bundle)) {
      edges.push_back({name + ":" + product, name, product});
      f.edges.push_back(edges.back().id);
    }
    followers.push_back(std::move(f));
  }
  return Instance(GameKind::vertex, vertices, items, edges, followers);
}

ExactNumber single_minded_revenue(const std::vector<SingleMindedCustomer>& customers, const PriceAssignment& p) {
  ExactNumber total(0);
  for (const auto& c : customers) {
    ExactNumber price = bundle_price(c.bundle, p);
    if (price <= c.budget) total += price;
  }
  return total;
}

Instance gen_from_unit_demand(const std::vector<UnitDemandCustomer>& customers) {
  std::set<std::string> products;
  for (const auto& c : customers) {
    if (c.alternatives.empty()) throw ValidationError("unit-demand customer without alternatives");
    products.insert(c.alternatives.begin(), c.alternatives.end());
  }
  std::vector<std::string> vertices;
  std::vector<Item> items;
  auto edge = [&](std::string id, ItemKind kind, ExactNumber cost, std::string u, std::string v) {
    Item it;
    it.id = std::move(id);
    it.kind = kind;
    it.cost = std::move(cost);
    it.u = std::move(u);
    it.v = std::move(v);
    it.directed = true;
    items.push_back(std::move(it));
  };
  for (const auto& id : products) {
    vertices.push_back("u_" + id);
    vertices.push_back("w_" + id);
    edge(id, ItemKind::priceable, ExactNumber(0), "u_" + id, "w_" + id);
  }
  std::vector<FollowerSpec> followers;
  for (std::size_t j = 0; j < customers.size(); ++j) {
    const std::string s = "s" + std::to_string(j + 1);
    const std::string t = "t" + std::to_string(j + 1);
    vertices.push_back(s);
    vertices.push_back(t);
    for (const auto& id : unique_sorted(customers[j].alternatives)) {
      edge(s + ":" + id, ItemKind::fixed, ExactNumber(0), s, "u_" + id);
      edge(id + ":" + t, ItemKind::fixed, ExactNumber(0), "w_" + id, t);
    }
    edge("budget" + std::to_string(j + 1), ItemKind::fixed, customers[j].budget, s, t);
    FollowerSpec f;
    f.source = s;
    f.sink = t;
    f.demand = customers[j].demand;
    followers.push_back(std::move(f));
  }
  return Instance(GameKind::edge, vertices, items, {}, followers);
}

ExactNumber unit_demand_revenue(const std::vector<UnitDemandCustomer>& customers, const PriceAssignment& p) {
  ExactNumber total(0);
  for (const auto& c : customers) {
    ExactNumber cheapest = ExactNumber::infinity();
    for (const auto& id : c.alternatives) cheapest = min(cheapest, p.at(id));
    if (cheapest <= c.budget) total += c.demand * cheapest;
  }
  return total;
}

long uniform_integer(std::mt19937_64& rng, long lo, long hi) {
  if (hi < lo) throw ValidationError("empty integer range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % span + 1) % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x > limit);
  return lo + static_cast<long>(x % span);
}

bool bernoulli(std::mt19937_64& rng, const ExactNumber& p) {
  const mpq_class draw(static_cast<unsigned long>(rng() >> 32));
  return draw < p.rational() * mpq_class(mpz_class(1) << 32);
}

namespace {

void check_params(const RandomParams& q) {
  auto probability = [](const ExactNumber& p) { return p.is_finite() && p >= ExactNumber(0) && p <= ExactNumber(1); };
  if (!probability(q.edge_probability) || !probability(q.priceable_probability) ||
      !probability(q.spanning_tree_probability))
    throw ValidationError("probabilities must lie in [0, 1]");
  if (q.min_vertices > q.max_vertices) throw ValidationError("min_vertices exceeds max_vertices");
  if (q.min_vertices < 2) throw ValidationError("random instances need at least 2 vertices");
  if (q.cost_min < 0 || q.cost_min > q.cost_max || q.cost_denominator < 1)
    throw ValidationError("bad cost range");
  if (q.followers < 1) throw ValidationError("random instances need at least one follower");
  if (q.shape == RandomShape::graph && !q.directed && q.max_edges + 1 < q.max_vertices)
    throw ValidationError("max_edges too small to connect the graph");
}

ExactNumber draw_cost(std::mt19937_64& rng, const RandomParams& q) {
  return ExactNumber(uniform_integer(rng, q.cost_min, q.cost_max), q.cost_denominator);
}

ExactNumber draw_demand(std::mt19937_64& rng, const RandomParams& q) {
  return q.weighted ? ExactNumber(uniform_integer(rng, 2, 16), 4) : ExactNumber(1);
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

bool fixed_reachable(const std::vector<Item>& items, const std::string& s, const std::string& t) {
  std::set<std::string> seen{s};
  std::queue<std::string> queue;
  queue.push(s);
  while (!queue.empty()) {
    std::string x = queue.front();
    queue.pop();
    if (x == t) return true;
    for (const auto& it : items) {
      if (it.priceable() || it.u != x || seen.count(it.v)) continue;
      seen.insert(it.v);
      queue.push(it.v);
    }
  }
  return false;
}

std::optional<Instance> try_graph(std::mt19937_64& rng, const RandomParams& q) {
  const auto n = static_cast<std::size_t>(
      uniform_integer(rng, static_cast<long>(q.min_vertices), static_cast<long>(q.max_vertices)));
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < n; ++i) vertices.push_back("v" + std::to_string(i));

  std::vector<Item> items;
  auto add = [&](std::size_t u, std::size_t v, bool priceable) {
    Item it;
    it.id = "e" + std::to_string(items.size() + 1);
    it.kind = priceable ? ItemKind::priceable : ItemKind::fixed;
    it.cost = priceable ? ExactNumber(0) : draw_cost(rng, q);
    it.u = vertices[u];
    it.v = vertices[v];
    it.directed = q.directed;
    items.push_back(std::move(it));
  };
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = q.directed ? 0 : u + 1; v < n; ++v) {
      if (u == v || !bernoulli(rng, q.edge_probability)) continue;
      add(u, v, bernoulli(rng, q.priceable_probability));
    }
  }

  std::vector<FollowerSpec> followers;
  for (std::size_t k = 0; k < q.followers; ++k) {
    FollowerSpec f;
    if (!q.directed && bernoulli(rng, q.spanning_tree_probability)) {
      f.goal = Goal::spanning_tree;
    } else {
      const auto s = static_cast<std::size_t>(uniform_integer(rng, 0, static_cast<long>(n) - 1));
      auto t = static_cast<std::size_t>(uniform_integer(rng, 0, static_cast<long>(n) - 2));
      if (t >= s) ++t;
      f.source = vertices[s];
      f.sink = vertices[t];
    }
    f.demand = draw_demand(rng, q);
    followers.push_back(std::move(f));
  }

  if (q.directed) {
    for (const auto& f : followers) {
      if (!fixed_reachable(items, f.source, f.sink))
        add(std::stoul(f.source.substr(1)), std::stoul(f.sink.substr(1)), false);
    }
  } else {
    UnionFind uf(n);
    for (const auto& it : items) {
      if (!it.priceable()) uf.unite(std::stoul(it.u.substr(1)), std::stoul(it.v.substr(1)));
    }
    // Join each component to a random vertex seen before it.
    for (std::size_t v = 1; v < n; ++v) {
      bool earlier = false;
      for (std::size_t w = 0; w < v && !earlier; ++w) earlier = uf.find(w) == uf.find(v);
      if (earlier) continue;
      const auto w = static_cast<std::size_t>(uniform_integer(rng, 0, static_cast<long>(v) - 1));
      add(w, v, false);
      uf.unite(w, v);
    }
  }
  if (items.size() > q.max_edges) return std::nullopt;
  return Instance(GameKind::edge, vertices, items, {}, followers);
}

std::optional<Instance> try_bipartite(std::mt19937_64& rng, const RandomParams& q) {
  const long n = uniform_integer(rng, static_cast<long>(q.min_vertices), static_cast<long>(q.max_vertices));
  const long na = uniform_integer(rng, 1, n - 1);
  std::vector<std::string> vertices;
  for (long i = 1; i <= na; ++i) vertices.push_back("a" + std::to_string(i));
  for (long i = 1; i <= n - na; ++i) vertices.push_back("b" + std::to_string(i));

  std::vector<Item> items;
  for (const auto& name : vertices) {
    Item it;
    it.id = name;
    const bool may_price = q.two_sided || name[0] == 'a';
    it.kind = may_price && bernoulli(rng, q.priceable_probability) ? ItemKind::priceable : ItemKind::fixed;
    items.push_back(std::move(it));
  }
  std::vector<GraphEdge> edges;
  FollowerSpec f;
  f.goal = Goal::vertex_cover;
  for (long a = 0; a < na; ++a) {
    for (long b = na; b < n; ++b) {
      if (!bernoulli(rng, q.edge_probability)) continue;
      if (items[a].priceable() && items[b].priceable()) items[bernoulli(rng, ExactNumber(1, 2)) ? a : b].kind = ItemKind::fixed;
      edges.push_back({"e" + std::to_string(edges.size() + 1), vertices[a], vertices[b]});
      f.edges.push_back(edges.back().id);
    }
  }
  for (auto& it : items) {
    if (!it.priceable()) it.cost = draw_cost(rng, q);
  }
  f.demand = draw_demand(rng, q);
  if (edges.size() > q.max_edges) return std::nullopt;
  return Instance(GameKind::vertex, vertices, items, edges, {f});
}

}  // namespace

Instance gen_random(const RandomParams& params) {
  check_params(params);
  if (params.shape == RandomShape::bipartite && params.followers != 1)
    throw ValidationError("bipartite instances have exactly one follower");
  std::mt19937_64 rng(params.seed);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    auto inst = params.shape == RandomShape::graph ? try_graph(rng, params) : try_bipartite(rng, params);
    if (inst) return std::move(*inst);
  }
  throw ValidationError("random parameters never produced an instance within max_edges");
}

}  // namespace stackprice
