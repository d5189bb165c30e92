#include "ordram/caterpillar.hpp"

#include <algorithm>
#include <stdexcept>

#include "ordram/embedding.hpp"

namespace ordram {

OrderedGraph CaterpillarDecomposition::rebuild() const {
  if (stars.empty()) throw std::invalid_argument("empty caterpillar decomposition");
  OrderedGraph g = ordered_star(stars.front().l, stars.front().r);
  for (std::size_t i = 1; i < stars.size(); ++i) {
    g = join(g, ordered_star(stars[i].l, stars[i].r));
  }
  return g;
}

std::optional<CaterpillarDecomposition> caterpillar_by_decomposition(const OrderedGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return std::nullopt;

  // Tails are collected right to left.
  std::vector<StarShape> tails;
  int last = n;
  while (last > 1) {
    int v = 0;
    for (int u = 1; u < last; ++u) {
      if (g.has_edge(u, last)) {
        v = u;
        break;
      }
    }
    if (v == 0) return std::nullopt;  // last vertex isolated in the prefix

    // Vertices strictly between v and last may only touch v or last, and
    // all of them the same one.
    bool to_hub_left = false, to_hub_right = false;
    for (int w = v + 1; w < last; ++w) {
      const auto nbrs = g.neighbors(w);
      const bool left = g.has_edge(w, v);
      const bool right = g.has_edge(w, last);
      if (left == right) return std::nullopt;   // isolated, or a triangle with {v, last}
      if (nbrs.size() != 1) return std::nullopt;  // anything else reaches outside
      to_hub_left |= left;
      to_hub_right |= right;
    }
    if (to_hub_left && to_hub_right) return std::nullopt;
    const int size = last - v + 1;
    if (size == 2) {
      tails.push_back({1, 2});
    } else if (to_hub_left) {
      tails.push_back({1, size});
    } else {
      tails.push_back({size, 1});
    }
    last = v;
  }

  CaterpillarDecomposition d;
  if (tails.empty()) {
    d.stars.push_back({1, 1});
  } else {
    d.stars.assign(tails.rbegin(), tails.rend());
  }
  if (d.rebuild() != g) return std::nullopt;
  return d;
}

const std::array<OrderedGraph, 4>& forbidden_caterpillar_patterns() {
  static const std::array<OrderedGraph, 4> patterns = {
      OrderedGraph(4, {{1, 4}, {2, 3}}),
      OrderedGraph(4, {{1, 3}, {2, 4}}),
      OrderedGraph(4, {{1, 2}, {3, 4}, {1, 4}}),
      complete_graph(3),
  };
  return patterns;
}

bool caterpillar_by_patterns(const OrderedGraph& g, bool include_triangle) {
  if (!is_connected(g)) throw std::invalid_argument("caterpillar_by_patterns needs a connected graph");
  const auto& patterns = forbidden_caterpillar_patterns();
  const std::size_t count = include_triangle ? 4 : 3;
  for (std::size_t i = 0; i < count; ++i) {
    if (contains_ordered_subgraph(g, patterns[i])) return false;
  }
  return true;
}

std::vector<OrderedGraph> minimal_noncaterpillar_trees(int v) {
  if (v != 4) throw std::invalid_argument("minimal_noncaterpillar_trees supports only v = 4");
  std::vector<OrderedGraph> out;
  for_each_connected_graph(v, [&](const OrderedGraph& g) {
    if (is_forest(g) && !caterpillar_by_decomposition(g)) out.push_back(g);
  });
  return out;
}

}  // namespace ordram
