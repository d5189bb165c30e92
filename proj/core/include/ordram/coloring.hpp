#pragma once

// Red-blue colorings of the complete ordered graph K_N.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordram/embedding.hpp"
#include "ordram/graph.hpp"

namespace ordram {

enum class Color : std::uint8_t { Blue = 0, Red = 1 };

/// Index of the pair {i, j}, i < j, in lexicographic pair order (0-based).
constexpr std::int64_t pair_index(std::int64_t n, std::int64_t i, std::int64_t j) {
  return (i - 1) * (2 * n - i) / 2 + (j - i - 1);
}

/// Total assignment of a color to every pair of [N].
class TwoColoring {
 public:
  TwoColoring() = default;
  explicit TwoColoring(int n, Color fill = Color::Blue);

  /// Red exactly on the edges of `red`.
  static TwoColoring from_red_graph(const OrderedGraph& red);

  int vertex_count() const { return n_; }
  Color color(int i, int j) const;
  bool is_red(int i, int j) const { return color(i, j) == Color::Red; }
  void set(int i, int j, Color c);

  OrderedGraph red_graph() const;
  OrderedGraph blue_graph() const;
  std::size_t red_edge_count() const;

  /// Colors in lexicographic pair order, 1 = red.
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  friend bool operator==(const TwoColoring&, const TwoColoring&) = default;
  /// Lexicographic on bits(), blue before red.
  friend bool operator<(const TwoColoring& a, const TwoColoring& b) {
    return a.n_ != b.n_ ? a.n_ < b.n_ : a.bits_ < b.bits_;
  }

 private:
  std::size_t index(int i, int j) const;

  int n_ = 0;
  std::vector<std::uint8_t> bits_;
};

struct Verdict {
  enum class Status { Avoiding, RedWitness, BlueWitness };

  Status status = Status::Avoiding;
  std::optional<Embedding> witness;

  bool avoiding() const { return status == Status::Avoiding; }
};

std::string to_string(Verdict::Status s);

/// Searches the red graph for `red_pattern`, then the blue graph for
/// `blue_pattern`; the first witness found is returned.
Verdict verify_avoiding(const TwoColoring& c, const OrderedGraph& red_pattern,
                        const OrderedGraph& blue_pattern);

/// True iff the witness in `v` really is a monochromatic copy in `c`.
bool witness_is_sound(const TwoColoring& c, const OrderedGraph& red_pattern,
                      const OrderedGraph& blue_pattern, const Verdict& v);

/// {i, j} and {N - j + 1, N - i + 1} always share a color.
bool is_symmetric(const TwoColoring& c);

/// `clique_count` consecutive red cliques of `clique_size` vertices; every
/// edge between different cliques is blue.
TwoColoring block_coloring(int clique_size, int clique_count);

/// The symmetric coloring of K_{4n} (n >= 6) with no red NM_n and no blue
/// triangle. Blue edges are the square S, the corner L, the rectangles R1
/// and R2 and the two single edges {3, 2n+1} and {2n, 4n-2}.
TwoColoring general_construction_chi(int n);

int hamming_distance(const TwoColoring& a, const TwoColoring& b);

}  // namespace ordram
