#pragma once

// Text format:
//   ordered-graph v1
//   n=<count>
//   <u> <v>        one edge per line, u < v, sorted, LF-terminated

#include <filesystem>
#include <string>
#include <string_view>

#include "ordram/error.hpp"
#include "ordram/graph.hpp"

namespace ordram {

std::string serialize_graph(const OrderedGraph& g);
/// Throws ParseError carrying the offending line.
OrderedGraph parse_graph(std::string_view text);

OrderedGraph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const OrderedGraph& g);

}  // namespace ordram
