#pragma once

// Certificates that an ordered graph avoids large nested matchings:
// nested chains, queue partitions, routes in the matrix representation and
// the extremal edge bound.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordram/coloring.hpp"
#include "ordram/graph.hpp"

namespace ordram {

/// Strict nesting: outer.u < inner.u < inner.v < outer.v.
constexpr bool is_nested(const Edge& outer, const Edge& inner) {
  return outer.u < inner.u && inner.v < outer.v;
}

struct NestedChain {
  int size = 0;
  std::vector<Edge> edges;  // outermost first
};

/// Largest set of pairwise nested edges, i.e. the largest NM_k in g.
NestedChain max_nested_matching(const OrderedGraph& g);

/// Partition of the edge set into classes without a nested pair.
struct QueuePartition {
  std::vector<std::vector<Edge>> classes;

  std::size_t size() const { return classes.size(); }
};

/// First-fit over lexicographically sorted edges. The class count equals the
/// longest nested chain.
QueuePartition queue_partition(const OrderedGraph& g);

/// Disjoint, covering, nesting-free classes over exactly g's edges.
bool is_valid_queue_partition(const OrderedGraph& g, const QueuePartition& p);

/// Matrix cell (row, column); 1-indexed.
struct Position {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Position&, const Position&) = default;
};

/// The k-th route: a staircase from (k, k) to (N - k + 1, N - k + 1) that
/// moves one step right or one step down at a time.
struct Route {
  int index = 0;
  std::vector<Position> positions;
};

bool is_valid_route(const Route& route, int n);

struct RouteMaterialization {
  std::vector<Route> routes;  // empty unless `ok`
  bool ok = false;
  std::uint64_t steps = 0;
  std::string failure;
};

inline constexpr std::uint64_t kDefaultRouteStepBudget = 1'000'000;

/// Lays class t (0-based) of the partition along route t + 1, keeping the
/// routes pairwise disjoint. Backtracks within `step_budget` search steps and
/// reports failure (ok == false) when none is found in time.
RouteMaterialization materialize_routes(const QueuePartition& p, int n,
                                        std::uint64_t step_budget = kDefaultRouteStepBudget);

/// Maximum edge count of an NM_n-free ordered graph on N >= 2n vertices:
/// (n - 1)(2N - 2n + 1).
std::int64_t nm_free_edge_bound(int n, int vertex_count);

/// All edges of length at most 2n - 2 on N >= 2n vertices.
OrderedGraph extremal_nm_free_graph(int n, int vertex_count);

/// Edge counts along the anti-diagonals i + j = k, k = 3 .. 2N - 1.
struct AntiDiagonalProfile {
  int vertex_count = 0;
  std::vector<int> counts;  // counts[k - 3]

  int at(int k) const;
  int max() const;
  std::int64_t total() const;
};

AntiDiagonalProfile antidiagonal_profile(const OrderedGraph& g);

/// Thrown when a coloring handed to chromatic_lower_bound_from_coloring
/// contains a red NM_{k+1} or a blue triangle.
class NotAvoidingError : public std::invalid_argument {
 public:
  NotAvoidingError(const std::string& what, Verdict v)
      : std::invalid_argument(what), verdict_(std::move(v)) {}
  const Verdict& verdict() const { return verdict_; }

 private:
  Verdict verdict_;
};

/// For a coloring of K_N with no red NM_{k+1} and no blue K_3 the red graph
/// is a k-queue graph with independence number at most 2, so its chromatic
/// number is at least ceil(N / 2).
int chromatic_lower_bound_from_coloring(const TwoColoring& c, int k);

}  // namespace ordram
