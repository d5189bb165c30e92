#pragma once

// n-goodness: G on m vertices is n-good iff r_<(G, K_n) = (m - 1)(n - 1) + 1.
// block_coloring(m - 1, n - 1) already gives the lower bound, so only the
// arrowing at N = (m - 1)(n - 1) + 1 is solved.

#include <optional>
#include <vector>

#include "ordram/coloring.hpp"
#include "ordram/graph.hpp"
#include "ordram/search.hpp"

namespace ordram {

enum class Goodness { Good, NotGood, Unknown };

const char* to_string(Goodness g);

struct GoodnessResult {
  Goodness verdict = Goodness::Unknown;
  int target = 0;  // (m - 1)(n - 1) + 1
  /// For NotGood: a coloring of K_target avoiding red G and blue K_n, so
  /// r_< >= target + 1.
  std::optional<TwoColoring> witness;
  sat::Statistics statistics;
};

/// Disconnected G throws std::invalid_argument.
GoodnessResult goodness_check(const OrderedGraph& g, int n, const SolveConfig& config = {});

struct ScanItem {
  OrderedGraph graph;
  Goodness verdict = Goodness::Unknown;
  bool caterpillar = false;
};

struct ScanReport {
  int max_vertices = 0;
  int n = 0;
  std::vector<ScanItem> items;  // vertex count, then edge mask order
  std::vector<OrderedGraph> good_noncaterpillars;
  std::vector<OrderedGraph> nongood_caterpillars;
  std::vector<OrderedGraph> unknown;

  std::size_t count(Goodness g) const;
  std::size_t caterpillar_count() const;
};

/// Every connected ordered graph on 1..max_vertices vertices (at most 6).
/// `jobs` worker threads share the list; the report order does not depend
/// on it.
ScanReport scan_good_graphs(int max_vertices, int n, const SolveConfig& config = {},
                            int jobs = 1);

}  // namespace ordram
