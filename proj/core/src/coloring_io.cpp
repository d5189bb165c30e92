#include "ordram/coloring_io.hpp"

#include <sstream>

#include "text_lines.hpp"

namespace ordram {

std::string serialize_coloring(const TwoColoring& c) {
  std::string out = "ordered-coloring v1\nN=" + std::to_string(c.vertex_count()) + "\n";
  const int n = c.vertex_count();
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) out.push_back(c.is_red(i, j) ? 'R' : 'B');
    out.push_back('\n');
  }
  return out;
}

std::string serialize_routes(const std::vector<Route>& routes) {
  std::ostringstream os;
  os << "routes: " << routes.size() << '\n';
  for (const auto& r : routes) {
    os << r.index << ':';
    for (const auto& p : r.positions) os << ' ' << p.row << ',' << p.col;
    os << '\n';
  }
  return os.str();
}

namespace {

// Parses the coloring part; returns the index of the first unread line.
std::size_t parse_coloring_lines(const std::vector<std::string_view>& lines, TwoColoring& out) {
  if (lines.empty() || lines[0] != "ordered-coloring v1") {
    throw ParseError(1, "expected header 'ordered-coloring v1'");
  }
  if (lines.size() < 2) throw ParseError(2, "missing 'N=<count>' line");
  const int n = detail::parse_count_field(lines[1], "N=", 2);
  if (n < 1) throw ParseError(2, "N must be at least 1");
  TwoColoring c(n);
  for (int i = 1; i < n; ++i) {
    const std::size_t li = static_cast<std::size_t>(i) + 1;
    const int lineno = static_cast<int>(li) + 1;
    if (li >= lines.size()) throw ParseError(lineno, "missing row " + std::to_string(i));
    const auto row = lines[li];
    if (static_cast<int>(row.size()) != n - i) {
      throw ParseError(lineno, "row " + std::to_string(i) + " must have " +
                                   std::to_string(n - i) + " entries, found " +
                                   std::to_string(row.size()));
    }
    for (int j = i + 1; j <= n; ++j) {
      const char ch = row[j - i - 1];
      if (ch == 'R') {
        c.set(i, j, Color::Red);
      } else if (ch != 'B') {
        throw ParseError(lineno, std::string("unexpected character '") + ch + "'");
      }
    }
  }
  out = std::move(c);
  return static_cast<std::size_t>(n) + 1;
}

std::vector<Route> parse_routes(const std::vector<std::string_view>& lines, std::size_t first) {
  std::vector<Route> routes;
  if (first >= lines.size()) return routes;
  const int header_line = static_cast<int>(first) + 1;
  const auto head = lines[first];
  constexpr std::string_view key = "routes: ";
  if (head.substr(0, key.size()) != key) throw ParseError(header_line, "unexpected trailing data");
  const int count = detail::parse_int(head.substr(key.size()), header_line);
  if (count < 0) throw ParseError(header_line, "negative route count");
  if (lines.size() - first - 1 != static_cast<std::size_t>(count)) {
    throw ParseError(header_line, "route count does not match the number of route lines");
  }
  for (int r = 0; r < count; ++r) {
    const std::size_t li = first + 1 + static_cast<std::size_t>(r);
    const int lineno = static_cast<int>(li) + 1;
    std::string_view line = lines[li];
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(lineno, "expected '<k>: ...'");
    Route route;
    route.index = detail::parse_int(line.substr(0, colon), lineno);
    std::string_view rest = line.substr(colon + 1);
    while (!rest.empty()) {
      if (rest.front() != ' ') throw ParseError(lineno, "positions are separated by one space");
      rest.remove_prefix(1);
      const auto end = rest.find(' ');
      const auto token = rest.substr(0, end);
      const auto comma = token.find(',');
      if (comma == std::string_view::npos) throw ParseError(lineno, "expected '<row>,<col>'");
      route.positions.push_back({detail::parse_int(token.substr(0, comma), lineno),
                                 detail::parse_int(token.substr(comma + 1), lineno)});
      rest = end == std::string_view::npos ? std::string_view{} : rest.substr(end);
    }
    routes.push_back(std::move(route));
  }
  return routes;
}

}  // namespace

TwoColoring parse_coloring(std::string_view text) {
  const auto lines = detail::split_lines(text);
  TwoColoring c;
  const auto next = parse_coloring_lines(lines, c);
  if (next < lines.size()) {
    throw ParseError(static_cast<int>(next) + 1, "unexpected trailing data");
  }
  return c;
}

ColoringDocument parse_coloring_document(std::string_view text) {
  const auto lines = detail::split_lines(text);
  ColoringDocument doc;
  const auto next = parse_coloring_lines(lines, doc.coloring);
  doc.routes = parse_routes(lines, next);
  return doc;
}

TwoColoring read_coloring_file(const std::filesystem::path& path) {
  return read_coloring_document(path).coloring;
}

ColoringDocument read_coloring_document(const std::filesystem::path& path) {
  return parse_coloring_document(detail::read_text_file(path));
}

void write_coloring_file(const std::filesystem::path& path, const TwoColoring& c,
                         const std::vector<Route>& routes) {
  std::string text = serialize_coloring(c);
  if (!routes.empty()) text += serialize_routes(routes);
  detail::write_text_file(path, text);
}

}  // namespace ordram
