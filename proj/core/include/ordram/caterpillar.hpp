#pragma once

// Monotone caterpillars: iterated joins of one-sided ordered stars.

#include <array>
#include <optional>
#include <vector>

#include "ordram/graph.hpp"

namespace ordram {

struct StarShape {
  int l = 1;
  int r = 1;
  friend bool operator==(const StarShape&, const StarShape&) = default;
};

/// S_{l_1,r_1} + ... + S_{l_k,r_k}, every star one-sided (l = 1 or r = 1).
/// A single vertex is written as [S_{1,1}]; a single edge as S_{1,2}.
struct CaterpillarDecomposition {
  std::vector<StarShape> stars;

  OrderedGraph rebuild() const;
};

/// Peels the graph from the right: the tail hanging off the leftmost
/// neighbour v of the last vertex must be a one-sided star, and the prefix
/// 1..v must itself decompose. Returns nullopt for anything else, including
/// disconnected input.
std::optional<CaterpillarDecomposition> caterpillar_by_decomposition(const OrderedGraph& g);

/// The four forbidden ordered subgraphs A (nested pair), B (crossing pair),
/// C ({1,2},{3,4},{1,4}) and D (K_3), in that order.
const std::array<OrderedGraph, 4>& forbidden_caterpillar_patterns();

/// True iff the connected graph contains none of A, B, C, D (or none of
/// A, B, C when `include_triangle` is false). Disconnected input throws
/// std::invalid_argument.
bool caterpillar_by_patterns(const OrderedGraph& g, bool include_triangle = true);

/// All ordered trees on `v` vertices that are not monotone caterpillars.
/// Only v = 4 is supported.
std::vector<OrderedGraph> minimal_noncaterpillar_trees(int v = 4);

}  // namespace ordram
