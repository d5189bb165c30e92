#pragma once

#include <optional>
#include <vector>

#include "ordram/graph.hpp"

namespace ordram {

/// A strictly increasing vertex map phi(1) < ... < phi(k) into a host.
struct Embedding {
  std::vector<int> map;  // map[i - 1] = phi(i)

  int pattern_size() const { return static_cast<int>(map.size()); }
  int operator()(int pattern_vertex) const { return map[pattern_vertex - 1]; }
  friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Streams every increasing map of the pattern's vertices into the complete
/// ordered graph on `host_size` vertices, in lexicographic order of the image.
/// A host smaller than the pattern yields nothing.
class EmbeddingStream {
 public:
  EmbeddingStream(int pattern_size, int host_size);
  EmbeddingStream(const OrderedGraph& pattern, int host_size)
      : EmbeddingStream(pattern.vertex_count(), host_size) {}

  std::optional<Embedding> next();

 private:
  int k_;
  int n_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> current_;
};

/// Visits the same sequence as EmbeddingStream without allocating per map.
template <class Fn>
void for_each_increasing_map(int k, int n, Fn&& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i + 1;
  while (true) {
    fn(static_cast<const std::vector<int>&>(c));
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i + 1) --i;
    if (i < 0) return;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

/// True iff `e` is increasing and maps every pattern edge onto a host edge.
bool is_embedding(const OrderedGraph& host, const OrderedGraph& pattern, const Embedding& e);

/// Finds the pattern as an ordered subgraph of the host.
///
/// Nested matchings are decided through the longest nested chain of host
/// edges; every other pattern goes through backtracking, which returns the
/// lexicographically smallest witness.
std::optional<Embedding> contains_ordered_subgraph(const OrderedGraph& host,
                                                   const OrderedGraph& pattern);

/// Backtracking over increasing maps only (no structural fast path).
std::optional<Embedding> find_embedding_backtracking(const OrderedGraph& host,
                                                     const OrderedGraph& pattern);

}  // namespace ordram
