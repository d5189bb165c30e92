#include "ordram/coloring.hpp"

#include <algorithm>
#include <stdexcept>

namespace ordram {

TwoColoring::TwoColoring(int n, Color fill)
    : n_(n), bits_(static_cast<std::size_t>(pair_count(std::max(n, 0))),
                   static_cast<std::uint8_t>(fill)) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
}

TwoColoring TwoColoring::from_red_graph(const OrderedGraph& red) {
  TwoColoring c(red.vertex_count(), Color::Blue);
  for (const auto& e : red.edges()) c.set(e.u, e.v, Color::Red);
  return c;
}

std::size_t TwoColoring::index(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > n_ || i == j) {
    throw std::out_of_range("pair {" + std::to_string(i) + "," + std::to_string(j) +
                            "} outside K_" + std::to_string(n_));
  }
  return static_cast<std::size_t>(pair_index(n_, i, j));
}

Color TwoColoring::color(int i, int j) const { return static_cast<Color>(bits_[index(i, j)]); }

void TwoColoring::set(int i, int j, Color c) { bits_[index(i, j)] = static_cast<std::uint8_t>(c); }

OrderedGraph TwoColoring::red_graph() const {
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j, ++k) {
      if (bits_[k] != 0) edges.push_back({i, j});
    }
  }
  return OrderedGraph(n_, std::move(edges));
}

OrderedGraph TwoColoring::blue_graph() const {
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j, ++k) {
      if (bits_[k] == 0) edges.push_back({i, j});
    }
  }
  return OrderedGraph(n_, std::move(edges));
}

std::size_t TwoColoring::red_edge_count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::string to_string(Verdict::Status s) {
  switch (s) {
    case Verdict::Status::Avoiding: return "avoiding";
    case Verdict::Status::RedWitness: return "red-witness";
    case Verdict::Status::BlueWitness: return "blue-witness";
  }
  return "?";
}

Verdict verify_avoiding(const TwoColoring& c, const OrderedGraph& red_pattern,
                        const OrderedGraph& blue_pattern) {
  if (auto w = contains_ordered_subgraph(c.red_graph(), red_pattern)) {
    return {Verdict::Status::RedWitness, std::move(w)};
  }
  if (auto w = contains_ordered_subgraph(c.blue_graph(), blue_pattern)) {
    return {Verdict::Status::BlueWitness, std::move(w)};
  }
  return {};
}

bool witness_is_sound(const TwoColoring& c, const OrderedGraph& red_pattern,
                      const OrderedGraph& blue_pattern, const Verdict& v) {
  switch (v.status) {
    case Verdict::Status::Avoiding: return !v.witness.has_value();
    case Verdict::Status::RedWitness:
      return v.witness && is_embedding(c.red_graph(), red_pattern, *v.witness);
    case Verdict::Status::BlueWitness:
      return v.witness && is_embedding(c.blue_graph(), blue_pattern, *v.witness);
  }
  return false;
}

bool is_symmetric(const TwoColoring& c) {
  const int n = c.vertex_count();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (c.color(i, j) != c.color(n - j + 1, n - i + 1)) return false;
    }
  }
  return true;
}

TwoColoring block_coloring(int clique_size, int clique_count) {
  if (clique_size < 1 || clique_count < 1) {
    throw std::invalid_argument("block coloring needs positive clique size and count");
  }
  const int n = clique_size * clique_count;
  TwoColoring c(n, Color::Blue);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if ((i - 1) / clique_size == (j - 1) / clique_size) c.set(i, j, Color::Red);
    }
  }
  return c;
}

TwoColoring general_construction_chi(int n) {
  if (n < 6) throw std::invalid_argument("the 4n construction needs n >= 6");
  const int N = 4 * n;
  TwoColoring c(N, Color::Red);
  auto blue_box = [&](int i_lo, int i_hi, int j_lo, int j_hi) {
    for (int i = i_lo; i <= i_hi; ++i) {
      for (int j = j_lo; j <= j_hi; ++j) c.set(i, j, Color::Blue);
    }
  };
  blue_box(4, 2 * n - 3, 2 * n + 4, 4 * n - 3);        // S
  blue_box(1, 2, 2 * n + 4, 4 * n);                    // L, top rows
  blue_box(1, 2 * n - 3, 4 * n - 1, 4 * n);            // L, right columns
  blue_box(3, 9, 2 * n - 2, 2 * n);                    // R1
  blue_box(2 * n + 1, 2 * n + 3, 4 * n - 8, 4 * n - 2);  // R2
  c.set(3, 2 * n + 1, Color::Blue);                    // e1
  c.set(2 * n, 4 * n - 2, Color::Blue);                // e2
  return c;
}

int hamming_distance(const TwoColoring& a, const TwoColoring& b) {
  if (a.vertex_count() != b.vertex_count()) {
    throw std::invalid_argument("hamming distance of colorings on different vertex counts");
  }
  int d = 0;
  for (std::size_t k = 0; k < a.bits().size(); ++k) d += a.bits()[k] != b.bits()[k] ? 1 : 0;
  return d;
}

}  // namespace ordram
