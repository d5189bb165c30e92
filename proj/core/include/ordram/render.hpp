#pragma once

#include <string>
#include <vector>

#include "ordram/coloring.hpp"
#include "ordram/queue_layout.hpp"

namespace ordram {

enum class RenderStyle { Ascii, Svg };

/// Matrix view of a coloring: row i, column j holds the color of {i, j}.
/// ASCII marks red with '#', blue with '.', the diagonal with '\' and leaves
/// the lower triangle blank. SVG draws filled cells and, when given, each
/// route as a polyline through its cell centres.
std::string render_matrix(const TwoColoring& c, RenderStyle style,
                          const std::vector<Route>& routes = {});

}  // namespace ordram
