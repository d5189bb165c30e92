#pragma once

// Ordered graphs on the vertex set 1..n under the integer order.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ordram {

/// An edge {u, v} with u < v. Vertices are 1-indexed.
struct Edge {
  int u = 0;
  int v = 0;

  constexpr int length() const { return v - u; }
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// A graph whose vertices 1..n carry the natural linear order.
///
/// Edges are kept sorted lexicographically and without duplicates. The
/// object is immutable after construction; every constructor validates.
class OrderedGraph {
 public:
  OrderedGraph() = default;
  explicit OrderedGraph(int vertex_count);

  /// Edges may be given in any order and orientation. Loops, out-of-range
  /// endpoints and duplicate edges throw std::invalid_argument.
  OrderedGraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool empty() const { return n_ == 0; }

  bool has_edge(int a, int b) const;
  int degree(int v) const;
  std::vector<int> neighbors(int v) const;

  /// Subgraph induced on the prefix 1..k.
  OrderedGraph prefix(int k) const;

  /// Mirror image under i -> n - i + 1.
  OrderedGraph reversed() const;

  friend bool operator==(const OrderedGraph& a, const OrderedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> adj_;  // n_ x n_, 0-based
};

// Standard families.

/// NM_k: 2k vertices, edges {i, 2k - i + 1}.
OrderedGraph nested_matching(int k);
/// S_{l,r}: l + r - 1 vertices, vertex l adjacent to all others.
OrderedGraph ordered_star(int l, int r);
/// P_m: edges {i, i + 1}.
OrderedGraph monotone_path(int m);
/// K_n.
OrderedGraph complete_graph(int n);

/// G + H: the rightmost vertex of G is identified with the leftmost of H.
OrderedGraph join(const OrderedGraph& g, const OrderedGraph& h);

bool is_connected(const OrderedGraph& g);
bool is_forest(const OrderedGraph& g);
inline bool is_tree(const OrderedGraph& g) {
  return is_connected(g) && is_forest(g);
}

/// Detects NM_k (returns k) or 0 if the graph is not a nested matching.
int nested_matching_order(const OrderedGraph& g);
/// True for K_n with n >= 1.
bool is_complete(const OrderedGraph& g);

/// Calls `fn` for every connected ordered graph on exactly `v` vertices.
///
/// Graphs are visited by increasing edge mask, bit b standing for the b-th
/// pair in lexicographic order. v > 8 throws std::invalid_argument.
void for_each_connected_graph(int v, const std::function<void(const OrderedGraph&)>& fn);
std::vector<OrderedGraph> enumerate_connected_graphs(int v);

/// Number of pairs {i, j} with 1 <= i < j <= n.
constexpr std::int64_t pair_count(std::int64_t n) { return n * (n - 1) / 2; }

/// Compact human-readable form, e.g. "n=4 {1,4} {2,3}".
std::string to_string(const OrderedGraph& g);

}  // namespace ordram
