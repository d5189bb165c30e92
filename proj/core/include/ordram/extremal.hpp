#pragma once

// Re-deriving the extremal colorings behind r_<(NM_4, K_3) = 16 and
// r_<(NM_5, K_3) >= 20: all avoiding colorings of K_15, and symmetric
// avoiding colorings of K_19 with prescribed blue neighbourhoods.

#include <optional>
#include <string>
#include <vector>

#include "ordram/arrow.hpp"
#include "ordram/coloring.hpp"
#include "ordram/search.hpp"

namespace ordram {

enum class ExtremalTarget { NM4At15, NM5At19 };

const char* to_string(ExtremalTarget t);
std::optional<ExtremalTarget> parse_extremal_target(const std::string& s);

/// Blue neighbourhoods of 3, 8, 9, 10 in K_19 are {8,9,10,18,19},
/// {3,5,11,12}, {3,5,6,12,13} and {3,6,7,13,14,17}; vertices 1, 2 and 4
/// have no blue neighbour in 1..10. Every edge these facts decide.
std::vector<FixedEdge> nm5_neighbourhood_constraints();

struct ExtremalRecovery {
  ExtremalTarget target = ExtremalTarget::NM4At15;
  std::vector<TwoColoring> colorings;
  /// Enumeration finished (NM4At15) or the single solve was decisive.
  bool complete = false;
  /// The constraints admit no avoiding coloring at all.
  bool inconsistent = false;
  /// Largest red edge count over the colorings, and how many reach it.
  int max_red_edges = 0;
  std::size_t max_red_count = 0;
};

/// `extra` is added to the built-in constraints. For NM4At15 the whole
/// family is enumerated; for NM5At19 one symmetric coloring is returned.
ExtremalRecovery recover_extremal_colorings(ExtremalTarget target,
                                            const std::vector<FixedEdge>& extra = {},
                                            const SolveConfig& config = {});

}  // namespace ordram
