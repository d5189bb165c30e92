#include "ordram/queue_layout.hpp"

#include <algorithm>
#include <stdexcept>

namespace ordram {

NestedChain max_nested_matching(const OrderedGraph& g) {
  // Edges arrive sorted by (u, v). Equal left endpoints come with increasing
  // right endpoints, so a strictly decreasing run of right endpoints never
  // takes two edges sharing u: it is exactly a nested chain.
  const auto& edges = g.edges();
  std::vector<int> tail_idx;             // tail_idx[len - 1]: edge ending the best chain of len
  std::vector<int> prev(edges.size(), -1);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const int key = -edges[k].v;
    auto it = std::lower_bound(tail_idx.begin(), tail_idx.end(), key,
                               [&](int idx, int value) { return -edges[idx].v < value; });
    const auto len = static_cast<std::size_t>(it - tail_idx.begin());
    if (len > 0) prev[k] = tail_idx[len - 1];
    if (it == tail_idx.end()) {
      tail_idx.push_back(static_cast<int>(k));
    } else {
      *it = static_cast<int>(k);
    }
  }
  NestedChain chain;
  chain.size = static_cast<int>(tail_idx.size());
  for (int k = tail_idx.empty() ? -1 : tail_idx.back(); k >= 0; k = prev[k]) {
    chain.edges.push_back(edges[k]);
  }
  std::reverse(chain.edges.begin(), chain.edges.end());
  return chain;
}

QueuePartition queue_partition(const OrderedGraph& g) {
  QueuePartition p;
  std::vector<int> last_right;  // right endpoint of the last edge in each class
  for (const auto& e : g.edges()) {
    // In lexicographic order the last edge of a class has its largest right
    // endpoint; e nests inside the class iff that endpoint exceeds e.v.
    std::size_t t = 0;
    while (t < last_right.size() && last_right[t] > e.v) ++t;
    if (t == last_right.size()) {
      p.classes.emplace_back();
      last_right.push_back(0);
    }
    p.classes[t].push_back(e);
    last_right[t] = e.v;
  }
  return p;
}

bool is_valid_queue_partition(const OrderedGraph& g, const QueuePartition& p) {
  std::vector<Edge> all;
  for (const auto& cls : p.classes) {
    for (std::size_t a = 0; a < cls.size(); ++a) {
      for (std::size_t b = 0; b < cls.size(); ++b) {
        if (is_nested(cls[a], cls[b])) return false;
      }
    }
    all.insert(all.end(), cls.begin(), cls.end());
  }
  std::sort(all.begin(), all.end());
  return all == g.edges();
}

bool is_valid_route(const Route& route, int n) {
  const int k = route.index;
  if (k < 1 || 2 * k > n + 1 || route.positions.empty()) return false;
  if (route.positions.front() != Position{k, k}) return false;
  if (route.positions.back() != Position{n - k + 1, n - k + 1}) return false;
  for (std::size_t s = 1; s < route.positions.size(); ++s) {
    const auto& a = route.positions[s - 1];
    const auto& b = route.positions[s];
    const bool down = b.row == a.row + 1 && b.col == a.col;
    const bool right = b.row == a.row && b.col == a.col + 1;
    if (!down && !right) return false;
  }
  return true;
}

namespace {

class RouteSearch {
 public:
  RouteSearch(const QueuePartition& p, int n, std::uint64_t budget)
      : n_(n), budget_(budget), owner_(static_cast<std::size_t>(n) * n, -1),
        reserved_(static_cast<std::size_t>(n) * n, -1), paths_(p.size()),
        targets_(p.size()) {
    for (std::size_t t = 0; t < p.size(); ++t) {
      const int k = static_cast<int>(t) + 1;
      auto cells = p.classes[t];
      std::sort(cells.begin(), cells.end());
      for (const auto& e : cells) {
        targets_[t].push_back({e.u, e.v});
        reserved_[cell(e.u, e.v)] = static_cast<int>(t);
      }
      targets_[t].push_back({n - k + 1, n - k + 1});
      if (2 * k <= n + 1) {
        reserved_[cell(k, k)] = static_cast<int>(t);
        reserved_[cell(n - k + 1, n - k + 1)] = static_cast<int>(t);
      }
    }
  }

  RouteMaterialization run() {
    RouteMaterialization out;
    const int count = static_cast<int>(paths_.size());
    if (2 * count > n_ + 1) {
      out.failure = "more classes than routes fit in K_" + std::to_string(n_);
      return out;
    }
    for (int t = 0; t < count; ++t) {
      const int k = t + 1;
      for (const auto& pos : targets_[t]) {
        if (pos.row < k || pos.col < k || pos.row > n_ - k + 1 || pos.col > n_ - k + 1) {
          out.failure = "class " + std::to_string(k) + " leaves the span of route " +
                        std::to_string(k);
          return out;
        }
      }
    }
    const bool found = count == 0 || start_route(0);
    out.steps = steps_;
    if (!found) {
      out.failure = exhausted_ ? "step budget exhausted" : "no disjoint routes exist";
      return out;
    }
    out.ok = true;
    for (int t = 0; t < count; ++t) out.routes.push_back({t + 1, paths_[t]});
    return out;
  }

 private:
  std::size_t cell(int row, int col) const {
    return static_cast<std::size_t>(row - 1) * n_ + (col - 1);
  }

  bool usable(int t, Position p) const {
    if (p.row < 1 || p.col < 1 || p.row > n_ || p.col > n_) return false;
    const auto c = cell(p.row, p.col);
    return owner_[c] < 0 && (reserved_[c] < 0 || reserved_[c] == t);
  }

  bool start_route(int t) {
    if (t == static_cast<int>(paths_.size())) return true;
    const int k = t + 1;
    const Position start{k, k};
    if (!usable(t, start)) return false;
    return step(t, start, 0);
  }

  // Occupy `p` for route t; `next` indexes the next waypoint to reach.
  bool step(int t, Position p, std::size_t next) {
    if (++steps_ > budget_) {
      exhausted_ = true;
      return false;
    }
    owner_[cell(p.row, p.col)] = t;
    paths_[t].push_back(p);
    if (p == targets_[t][next]) ++next;
    bool done = false;
    if (next == targets_[t].size()) {
      done = start_route(t + 1);
    } else {
      const Position goal = targets_[t][next];
      // Right before down keeps outer routes hugging the upper-right corner.
      for (const Position q : {Position{p.row, p.col + 1}, Position{p.row + 1, p.col}}) {
        if (q.row > goal.row || q.col > goal.col || !usable(t, q)) continue;
        if (step(t, q, next)) {
          done = true;
          break;
        }
        if (exhausted_) break;
      }
    }
    if (!done) {
      owner_[cell(p.row, p.col)] = -1;
      paths_[t].pop_back();
    }
    return done;
  }

  int n_;
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
  bool exhausted_ = false;
  std::vector<int> owner_;
  std::vector<int> reserved_;
  std::vector<std::vector<Position>> paths_;
  std::vector<std::vector<Position>> targets_;
};

}  // namespace

RouteMaterialization materialize_routes(const QueuePartition& p, int n,
                                        std::uint64_t step_budget) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  return RouteSearch(p, n, step_budget).run();
}

std::int64_t nm_free_edge_bound(int n, int vertex_count) {
  if (n < 1) throw std::invalid_argument("nested matching order must be at least 1");
  if (vertex_count < 2 * n) throw std::invalid_argument("edge bound needs N >= 2n");
  return static_cast<std::int64_t>(n - 1) * (2LL * vertex_count - 2LL * n + 1);
}

OrderedGraph extremal_nm_free_graph(int n, int vertex_count) {
  if (n < 1) throw std::invalid_argument("nested matching order must be at least 1");
  if (vertex_count < 2 * n) throw std::invalid_argument("extremal graph needs N >= 2n");
  std::vector<Edge> edges;
  for (int i = 1; i <= vertex_count; ++i) {
    for (int j = i + 1; j <= vertex_count && j - i <= 2 * n - 2; ++j) edges.push_back({i, j});
  }
  return OrderedGraph(vertex_count, std::move(edges));
}

int AntiDiagonalProfile::at(int k) const {
  if (k < 3 || k > 2 * vertex_count - 1) return 0;
  return counts[k - 3];
}

int AntiDiagonalProfile::max() const {
  return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

std::int64_t AntiDiagonalProfile::total() const {
  std::int64_t s = 0;
  for (int c : counts) s += c;
  return s;
}

AntiDiagonalProfile antidiagonal_profile(const OrderedGraph& g) {
  AntiDiagonalProfile p;
  p.vertex_count = g.vertex_count();
  p.counts.assign(static_cast<std::size_t>(std::max(0, 2 * g.vertex_count() - 3)), 0);
  for (const auto& e : g.edges()) ++p.counts[e.u + e.v - 3];
  return p;
}

int chromatic_lower_bound_from_coloring(const TwoColoring& c, int k) {
  if (k < 1) throw std::invalid_argument("queue number k must be at least 1");
  Verdict v = verify_avoiding(c, nested_matching(k + 1), complete_graph(3));
  if (!v.avoiding()) {
    throw NotAvoidingError("coloring has a " + to_string(v.status) + " for (NM_" +
                               std::to_string(k + 1) + ", K_3)",
                           std::move(v));
  }
  return (c.vertex_count() + 1) / 2;
}

}  // namespace ordram
