#include "ordram/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ordram {

OrderedGraph::OrderedGraph(int vertex_count) : OrderedGraph(vertex_count, {}) {}

OrderedGraph::OrderedGraph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 0) throw std::invalid_argument("vertex count must be non-negative");
  for (auto& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    if (e.u < 1 || e.v > n_) {
      throw std::invalid_argument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  "} outside 1.." + std::to_string(n_));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw std::invalid_argument("duplicate edge {" + std::to_string(dup->u) + "," +
                                std::to_string(dup->v) + "}");
  }
  adj_.assign(static_cast<std::size_t>(n_) * n_, 0);
  for (const auto& e : edges_) {
    adj_[(e.u - 1) * n_ + (e.v - 1)] = 1;
    adj_[(e.v - 1) * n_ + (e.u - 1)] = 1;
  }
}

bool OrderedGraph::has_edge(int a, int b) const {
  if (a < 1 || b < 1 || a > n_ || b > n_) return false;
  return adj_[(a - 1) * n_ + (b - 1)] != 0;
}

int OrderedGraph::degree(int v) const {
  int d = 0;
  for (int w = 1; w <= n_; ++w) d += has_edge(v, w) ? 1 : 0;
  return d;
}

std::vector<int> OrderedGraph::neighbors(int v) const {
  std::vector<int> out;
  for (int w = 1; w <= n_; ++w) {
    if (has_edge(v, w)) out.push_back(w);
  }
  return out;
}

OrderedGraph OrderedGraph::prefix(int k) const {
  k = std::clamp(k, 0, n_);
  std::vector<Edge> kept;
  for (const auto& e : edges_) {
    if (e.v <= k) kept.push_back(e);
  }
  return OrderedGraph(k, std::move(kept));
}

OrderedGraph OrderedGraph::reversed() const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back({n_ + 1 - e.v, n_ + 1 - e.u});
  return OrderedGraph(n_, std::move(out));
}

OrderedGraph nested_matching(int k) {
  if (k < 1) throw std::invalid_argument("nested matching needs k >= 1");
  std::vector<Edge> edges;
  for (int i = 1; i <= k; ++i) edges.push_back({i, 2 * k - i + 1});
  return OrderedGraph(2 * k, std::move(edges));
}

OrderedGraph ordered_star(int l, int r) {
  if (l < 1 || r < 1) throw std::invalid_argument("ordered star needs l >= 1 and r >= 1");
  const int n = l + r - 1;
  std::vector<Edge> edges;
  for (int v = 1; v <= n; ++v) {
    if (v != l) edges.push_back({std::min(v, l), std::max(v, l)});
  }
  return OrderedGraph(n, std::move(edges));
}

OrderedGraph monotone_path(int m) {
  if (m < 1) throw std::invalid_argument("monotone path needs m >= 1");
  std::vector<Edge> edges;
  for (int i = 1; i < m; ++i) edges.push_back({i, i + 1});
  return OrderedGraph(m, std::move(edges));
}

OrderedGraph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) edges.push_back({i, j});
  }
  return OrderedGraph(n, std::move(edges));
}

OrderedGraph join(const OrderedGraph& g, const OrderedGraph& h) {
  if (g.empty() || h.empty()) throw std::invalid_argument("join of an empty ordered graph");
  const int shift = g.vertex_count() - 1;
  std::vector<Edge> edges = g.edges();
  for (const auto& e : h.edges()) edges.push_back({e.u + shift, e.v + shift});
  return OrderedGraph(g.vertex_count() + h.vertex_count() - 1, std::move(edges));
}

namespace {

// Union-find root with path halving.
int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

bool is_connected(const OrderedGraph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  int components = n;
  for (const auto& e : g.edges()) {
    int a = find_root(parent, e.u);
    int b = find_root(parent, e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

bool is_forest(const OrderedGraph& g) {
  std::vector<int> parent(g.vertex_count() + 1);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& e : g.edges()) {
    int a = find_root(parent, e.u);
    int b = find_root(parent, e.v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

int nested_matching_order(const OrderedGraph& g) {
  const int n = g.vertex_count();
  if (n < 2 || n % 2 != 0) return 0;
  const int k = n / 2;
  if (static_cast<int>(g.edge_count()) != k) return 0;
  for (int i = 1; i <= k; ++i) {
    if (!g.has_edge(i, n - i + 1)) return 0;
  }
  return k;
}

bool is_complete(const OrderedGraph& g) {
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  return n >= 1 && static_cast<std::int64_t>(g.edge_count()) == pair_count(n);
}

void for_each_connected_graph(int v, const std::function<void(const OrderedGraph&)>& fn) {
  if (v < 1) throw std::invalid_argument("vertex count must be at least 1");
  if (v > 8) {
    throw std::invalid_argument("enumeration budget exceeded: " + std::to_string(v) +
                                " vertices (at most 8 supported)");
  }
  std::vector<Edge> pairs;
  for (int i = 1; i <= v; ++i) {
    for (int j = i + 1; j <= v; ++j) pairs.push_back({i, j});
  }
  const std::uint32_t full = 1u << pairs.size();
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    // Bitmask BFS before building the graph object.
    std::uint32_t adj[8] = {};
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if (mask >> b & 1u) {
        adj[pairs[b].u - 1] |= 1u << (pairs[b].v - 1);
        adj[pairs[b].v - 1] |= 1u << (pairs[b].u - 1);
      }
    }
    std::uint32_t seen = 1u, frontier = 1u;
    while (frontier != 0) {
      std::uint32_t next = 0;
      for (int i = 0; i < v; ++i) {
        if (frontier >> i & 1u) next |= adj[i];
      }
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen != (1u << v) - 1u) continue;
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if (mask >> b & 1u) edges.push_back(pairs[b]);
    }
    fn(OrderedGraph(v, std::move(edges)));
  }
}

std::vector<OrderedGraph> enumerate_connected_graphs(int v) {
  std::vector<OrderedGraph> out;
  for_each_connected_graph(v, [&](const OrderedGraph& g) { out.push_back(g); });
  return out;
}

std::string to_string(const OrderedGraph& g) {
  std::ostringstream os;
  os << "n=" << g.vertex_count();
  for (const auto& e : g.edges()) os << " {" << e.u << "," << e.v << "}";
  return os.str();
}

}  // namespace ordram
