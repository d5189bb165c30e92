#include "ordram/extremal.hpp"

#include <algorithm>

namespace ordram {

const char* to_string(ExtremalTarget t) {
  return t == ExtremalTarget::NM4At15 ? "nm4-15" : "nm5-19";
}

std::optional<ExtremalTarget> parse_extremal_target(const std::string& s) {
  if (s == "nm4-15") return ExtremalTarget::NM4At15;
  if (s == "nm5-19") return ExtremalTarget::NM5At19;
  return std::nullopt;
}

std::vector<FixedEdge> nm5_neighbourhood_constraints() {
  constexpr int n = 19;
  const std::vector<std::pair<int, std::vector<int>>> blue = {
      {3, {8, 9, 10, 18, 19}},
      {8, {3, 5, 11, 12}},
      {9, {3, 5, 6, 12, 13}},
      {10, {3, 6, 7, 13, 14, 17}},
  };
  TwoColoring decided(n, Color::Red);
  std::vector<bool> known(static_cast<std::size_t>(pair_count(n)), false);
  auto fix = [&](int a, int b, Color c) {
    decided.set(a, b, c);
    known[static_cast<std::size_t>(pair_index(n, std::min(a, b), std::max(a, b)))] = true;
  };
  for (const auto& [v, nb] : blue) {
    for (int u = 1; u <= n; ++u) {
      if (u == v) continue;
      fix(u, v, std::find(nb.begin(), nb.end(), u) != nb.end() ? Color::Blue : Color::Red);
    }
  }
  for (int a : {1, 2, 4}) {
    for (int b = 1; b <= 10; ++b) {
      if (b != a) fix(a, b, Color::Red);
    }
  }
  std::vector<FixedEdge> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (known[static_cast<std::size_t>(pair_index(n, i, j))]) {
        out.push_back({{i, j}, decided.color(i, j)});
      }
    }
  }
  return out;
}

ExtremalRecovery recover_extremal_colorings(ExtremalTarget target,
                                            const std::vector<FixedEdge>& extra,
                                            const SolveConfig& config) {
  ExtremalRecovery out;
  out.target = target;
  EncodeOptions eo;
  eo.fixed = extra;
  if (target == ExtremalTarget::NM4At15) {
    const auto inst = encode_arrow(15, nested_matching(4), complete_graph(3), eo);
    auto e = enumerate_models(inst, config);
    out.colorings = std::move(e.colorings);
    out.complete = e.complete;
  } else {
    eo.symmetric = true;
    const auto fixed = nm5_neighbourhood_constraints();
    eo.fixed.insert(eo.fixed.end(), fixed.begin(), fixed.end());
    const auto inst = encode_arrow(19, nested_matching(5), complete_graph(3), eo);
    auto v = solve(inst, config);
    if (v.coloring) out.colorings.push_back(std::move(*v.coloring));
    out.complete = v.status != sat::Status::Unknown;
  }
  out.inconsistent = out.complete && out.colorings.empty();
  for (const auto& c : out.colorings) {
    const int red = static_cast<int>(c.red_edge_count());
    if (red > out.max_red_edges) {
      out.max_red_edges = red;
      out.max_red_count = 0;
    }
    if (red == out.max_red_edges) ++out.max_red_count;
  }
  return out;
}

}  // namespace ordram
