#include "ordram/embedding.hpp"

#include <algorithm>

#include "ordram/queue_layout.hpp"

namespace ordram {

EmbeddingStream::EmbeddingStream(int pattern_size, int host_size)
    : k_(pattern_size), n_(host_size) {
  if (k_ < 0 || k_ > n_) done_ = true;
}

std::optional<Embedding> EmbeddingStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    current_.resize(k_);
    for (int i = 0; i < k_; ++i) current_[i] = i + 1;
    return Embedding{current_};
  }
  int i = k_ - 1;
  while (i >= 0 && current_[i] == n_ - k_ + i + 1) --i;
  if (i < 0) {
    done_ = true;
    return std::nullopt;
  }
  ++current_[i];
  for (int j = i + 1; j < k_; ++j) current_[j] = current_[j - 1] + 1;
  return Embedding{current_};
}

bool is_embedding(const OrderedGraph& host, const OrderedGraph& pattern, const Embedding& e) {
  if (e.pattern_size() != pattern.vertex_count()) return false;
  for (int i = 0; i < e.pattern_size(); ++i) {
    if (e.map[i] < 1 || e.map[i] > host.vertex_count()) return false;
    if (i > 0 && e.map[i] <= e.map[i - 1]) return false;
  }
  return std::all_of(pattern.edges().begin(), pattern.edges().end(),
                     [&](const Edge& pe) { return host.has_edge(e(pe.u), e(pe.v)); });
}

namespace {

class Backtracker {
 public:
  Backtracker(const OrderedGraph& host, const OrderedGraph& pattern)
      : host_(host), k_(pattern.vertex_count()), n_(host.vertex_count()), back_(k_ + 1),
        phi_(k_ + 1, 0) {
    for (const auto& e : pattern.edges()) back_[e.v].push_back(e.u);
  }

  std::optional<Embedding> run() {
    if (k_ > n_) return std::nullopt;
    if (!extend(1)) return std::nullopt;
    return Embedding{std::vector<int>(phi_.begin() + 1, phi_.end())};
  }

 private:
  bool extend(int i) {
    if (i > k_) return true;
    // Leave room for the k - i pattern vertices still to place.
    const int last = n_ - (k_ - i);
    for (int h = phi_[i - 1] + 1; h <= last; ++h) {
      bool ok = true;
      for (int j : back_[i]) {
        if (!host_.has_edge(phi_[j], h)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      phi_[i] = h;
      if (extend(i + 1)) return true;
    }
    return false;
  }

  const OrderedGraph& host_;
  int k_;
  int n_;
  std::vector<std::vector<int>> back_;  // earlier neighbours of each pattern vertex
  std::vector<int> phi_;                // phi_[0] = 0 sentinel
};

}  // namespace

std::optional<Embedding> find_embedding_backtracking(const OrderedGraph& host,
                                                     const OrderedGraph& pattern) {
  return Backtracker(host, pattern).run();
}

std::optional<Embedding> contains_ordered_subgraph(const OrderedGraph& host,
                                                   const OrderedGraph& pattern) {
  if (const int k = nested_matching_order(pattern); k > 0) {
    auto chain = max_nested_matching(host);
    if (chain.size < k) return std::nullopt;
    // chain.edges runs outermost first; keep the k outermost.
    Embedding e;
    e.map.resize(2 * k);
    for (int i = 0; i < k; ++i) {
      e.map[i] = chain.edges[i].u;
      e.map[2 * k - 1 - i] = chain.edges[i].v;
    }
    return e;
  }
  return find_embedding_backtracking(host, pattern);
}

}  // namespace ordram
