#pragma once

// SAT encoding of "K_N does not arrow (red, blue)": variable x_{ij} is true
// iff {i, j} is red; each red copy is forbidden by a clause over the negated
// images of its edges, each blue copy by a clause over the positive ones.
// A model is therefore exactly an avoiding coloring.

#include <string>
#include <utility>
#include <vector>

#include "ordram/coloring.hpp"
#include "ordram/graph.hpp"
#include "ordram/sat/dimacs.hpp"

namespace ordram {

/// Pairs {i, j} of [N] numbered 1..C(N, 2) in lexicographic order.
class EdgeVarMap {
 public:
  explicit EdgeVarMap(int n);

  int vertex_count() const { return n_; }
  int variable_count() const { return static_cast<int>(pair_count(n_)); }
  int var(int i, int j) const;
  Edge edge(int var) const;

 private:
  int n_;
  std::vector<Edge> edges_;
};

struct FixedEdge {
  Edge edge;
  Color color = Color::Red;
};

struct EncodeOptions {
  /// Restrict to colorings invariant under i -> N - i + 1. Only sound for
  /// existence: UNSAT under this option says nothing about r_<.
  bool symmetric = false;
  /// Edges whose color is forced by unit clauses.
  std::vector<FixedEdge> fixed;
  /// For a red monotone path P_m: auxiliary variables y_{v,c} meaning "some
  /// red path ending at v has at least c vertices", for 2 <= c <= m - 1.
  /// When blue is K_n, also at most n - 1 vertices on each level, since
  /// vertices on one level are pairwise blue. Every avoiding coloring extends
  /// to a model (take the longest red path ending at v), so SAT and UNSAT
  /// keep their meaning. Ignored for other red patterns.
  bool path_levels = false;
};

struct CnfInstance {
  int vertex_count = 0;
  /// Edge variables come first (1..C(N, 2)); auxiliary ones follow.
  int variable_count = 0;
  int edge_variable_count = 0;
  std::vector<std::vector<int>> clauses;
  OrderedGraph red;
  OrderedGraph blue;
  std::string red_id;
  std::string blue_id;
  EncodeOptions options;
  std::size_t red_clauses = 0;
  std::size_t blue_clauses = 0;
  /// An edgeless pattern fits into K_N, so no coloring avoids it. Kept as a
  /// flag instead of an empty clause.
  bool contradiction = false;

  sat::Cnf to_cnf() const;
};

/// Short identifier such as "nm:4", "k:3", "path:5", "star:2,3" or the
/// explicit edge list.
std::string pattern_id(const OrderedGraph& g);

CnfInstance encode_arrow(int n, const OrderedGraph& red, const OrderedGraph& blue,
                         const EncodeOptions& options = {});

/// True -> red. The model must cover all C(N, 2) edge variables.
TwoColoring decode_model(const std::vector<bool>& model, int n);

}  // namespace ordram
