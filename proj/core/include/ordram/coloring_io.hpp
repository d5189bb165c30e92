#pragma once

// Text format:
//   ordered-coloring v1
//   N=<count>
//   N - 1 rows; row i lists the colors of {i,i+1}, ..., {i,N} over {R,B}
// optionally followed by a route certificate:
//   routes: <count>
//   <k>: <row>,<col> <row>,<col> ...

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ordram/coloring.hpp"
#include "ordram/error.hpp"
#include "ordram/queue_layout.hpp"

namespace ordram {

std::string serialize_coloring(const TwoColoring& c);
std::string serialize_routes(const std::vector<Route>& routes);

/// Throws ParseError with the offending line.
TwoColoring parse_coloring(std::string_view text);

struct ColoringDocument {
  TwoColoring coloring;
  std::vector<Route> routes;
};

/// Accepts an optional trailing `routes:` section.
ColoringDocument parse_coloring_document(std::string_view text);

TwoColoring read_coloring_file(const std::filesystem::path& path);
ColoringDocument read_coloring_document(const std::filesystem::path& path);
void write_coloring_file(const std::filesystem::path& path, const TwoColoring& c,
                         const std::vector<Route>& routes = {});

}  // namespace ordram
