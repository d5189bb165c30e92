#include "ordram/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "text_lines.hpp"

namespace ordram {

std::string serialize_graph(const OrderedGraph& g) {
  std::ostringstream os;
  os << "ordered-graph v1\n";
  os << "n=" << g.vertex_count() << "\n";
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

OrderedGraph parse_graph(std::string_view text) {
  const auto lines = detail::split_lines(text);
  if (lines.empty() || lines[0] != "ordered-graph v1") {
    throw ParseError(1, "expected header 'ordered-graph v1'");
  }
  if (lines.size() < 2) throw ParseError(2, "missing 'n=<count>' line");
  const int n = detail::parse_count_field(lines[1], "n=", 2);

  std::vector<Edge> edges;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const int lineno = static_cast<int>(i) + 1;
    std::string_view line = lines[i];
    const auto space = line.find(' ');
    if (space == std::string_view::npos) throw ParseError(lineno, "expected '<u> <v>'");
    const int u = detail::parse_int(line.substr(0, space), lineno);
    const int v = detail::parse_int(line.substr(space + 1), lineno);
    if (!(1 <= u && u < v && v <= n)) {
      throw ParseError(lineno, "edge must satisfy 1 <= u < v <= n");
    }
    Edge e{u, v};
    if (!edges.empty() && !(edges.back() < e)) {
      throw ParseError(lineno, "edges must be sorted and distinct");
    }
    edges.push_back(e);
  }
  return OrderedGraph(n, std::move(edges));
}

OrderedGraph read_graph_file(const std::filesystem::path& path) {
  return parse_graph(detail::read_text_file(path));
}

void write_graph_file(const std::filesystem::path& path, const OrderedGraph& g) {
  detail::write_text_file(path, serialize_graph(g));
}

}  // namespace ordram
