#include "ordram/render.hpp"

#include <sstream>

namespace ordram {

namespace {

constexpr int kCell = 12;
constexpr const char* kRouteColors[] = {"#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
                                        "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};

std::string render_ascii(const TwoColoring& c) {
  const int n = c.vertex_count();
  std::string out;
  for (int i = 1; i <= n; ++i) {
    out.append(static_cast<std::size_t>(i - 1), ' ');
    out.push_back('\\');
    for (int j = i + 1; j <= n; ++j) out.push_back(c.is_red(i, j) ? '#' : '.');
    out.push_back('\n');
  }
  return out;
}

std::string render_svg(const TwoColoring& c, const std::vector<Route>& routes) {
  const int n = c.vertex_count();
  const int size = n * kCell;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size
     << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << size << "\" height=\"" << size
     << "\" fill=\"#ffffff\"/>\n";
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      const char* fill = i == j ? "#444444" : (c.is_red(i, j) ? "#d62728" : "#aec7e8");
      os << "<rect x=\"" << (j - 1) * kCell << "\" y=\"" << (i - 1) * kCell << "\" width=\""
         << kCell << "\" height=\"" << kCell << "\" fill=\"" << fill
         << "\" stroke=\"#ffffff\" stroke-width=\"1\"/>\n";
    }
  }
  for (std::size_t r = 0; r < routes.size(); ++r) {
    os << "<polyline fill=\"none\" stroke=\"" << kRouteColors[r % std::size(kRouteColors)]
       << "\" stroke-width=\"2\" points=\"";
    for (std::size_t s = 0; s < routes[r].positions.size(); ++s) {
      const auto& p = routes[r].positions[s];
      if (s > 0) os << ' ';
      os << (p.col - 1) * kCell + kCell / 2 << ',' << (p.row - 1) * kCell + kCell / 2;
    }
    os << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

std::string render_matrix(const TwoColoring& c, RenderStyle style, const std::vector<Route>& routes) {
  return style == RenderStyle::Ascii ? render_ascii(c) : render_svg(c, routes);
}

}  // namespace ordram
