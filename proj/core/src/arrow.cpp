#include "ordram/arrow.hpp"

#include <algorithm>
#include <stdexcept>

#include "ordram/embedding.hpp"

namespace ordram {

EdgeVarMap::EdgeVarMap(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  edges_.reserve(static_cast<std::size_t>(pair_count(n)));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) edges_.push_back({i, j});
  }
}

int EdgeVarMap::var(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > n_ || i == j) throw std::out_of_range("no variable for this pair");
  return static_cast<int>(pair_index(n_, i, j)) + 1;
}

Edge EdgeVarMap::edge(int var) const {
  if (var < 1 || var > variable_count()) throw std::out_of_range("variable out of range");
  return edges_[static_cast<std::size_t>(var - 1)];
}

sat::Cnf CnfInstance::to_cnf() const {
  sat::Cnf cnf;
  cnf.variable_count = variable_count;
  cnf.comments.push_back("ordered Ramsey arrowing: N=" + std::to_string(vertex_count) +
                         " red=" + red_id + " blue=" + blue_id +
                         (options.symmetric ? " symmetric" : ""));
  cnf.clauses = clauses;
  if (contradiction) {
    // Encode the trivial refutation without an empty clause.
    cnf.variable_count = std::max(cnf.variable_count, 1);
    cnf.clauses.push_back({1});
    cnf.clauses.push_back({-1});
  }
  return cnf;
}

std::string pattern_id(const OrderedGraph& g) {
  if (const int k = nested_matching_order(g); k > 0) return "nm:" + std::to_string(k);
  if (is_complete(g)) return "k:" + std::to_string(g.vertex_count());
  if (g.vertex_count() >= 3 && g == monotone_path(g.vertex_count())) {
    return "path:" + std::to_string(g.vertex_count());
  }
  for (int l = 1; l <= g.vertex_count(); ++l) {
    const int r = g.vertex_count() - l + 1;
    if (g.vertex_count() >= 3 && g == ordered_star(l, r)) {
      return "star:" + std::to_string(l) + "," + std::to_string(r);
    }
  }
  std::string id = "graph:" + std::to_string(g.vertex_count());
  for (const auto& e : g.edges()) id += ";" + std::to_string(e.u) + "-" + std::to_string(e.v);
  return id;
}

namespace {

bool has_isolated_vertex(const OrderedGraph& g) {
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (g.degree(v) == 0) return true;
  }
  return false;
}

// Levels of a red P_m and, against a blue K_n, a sequential counter bounding
// each level by n - 1 vertices.
void add_path_levels(CnfInstance& inst, const EdgeVarMap& vars, int m, int clique) {
  const int n = inst.vertex_count;
  auto fresh = [&] { return ++inst.variable_count; };
  // at_least[v][c] for 2 <= c <= m - 1; level 1 is always reached.
  std::vector<std::vector<int>> at_least(static_cast<std::size_t>(n) + 1,
                                         std::vector<int>(static_cast<std::size_t>(m) + 1, 0));
  for (int v = 1; v <= n; ++v) {
    for (int c = 2; c <= m - 1; ++c) at_least[v][c] = fresh();
    for (int c = 2; c < m - 1; ++c) inst.clauses.push_back({-at_least[v][c + 1], at_least[v][c]});
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const int x = vars.var(i, j);
      if (m == 2) {
        inst.clauses.push_back({-x});
        continue;
      }
      inst.clauses.push_back({-x, at_least[j][2]});
      for (int c = 2; c <= m - 1; ++c) {
        if (c + 1 <= m - 1) {
          inst.clauses.push_back({-x, -at_least[i][c], at_least[j][c + 1]});
        } else {
          inst.clauses.push_back({-x, -at_least[i][c]});
        }
      }
    }
  }
  if (clique < 2) return;
  const int cap = clique - 1;
  for (int c = 1; c <= m - 1; ++c) {
    // on[v] <-> v is exactly on level c.
    std::vector<int> on(static_cast<std::size_t>(n) + 1);
    for (int v = 1; v <= n; ++v) {
      on[v] = fresh();
      std::vector<int> def = {on[v]};
      if (c >= 2) {
        inst.clauses.push_back({-on[v], at_least[v][c]});
        def.push_back(-at_least[v][c]);
      }
      if (c + 1 <= m - 1) {
        inst.clauses.push_back({-on[v], -at_least[v][c + 1]});
        def.push_back(at_least[v][c + 1]);
      }
      inst.clauses.push_back(std::move(def));
    }
    // Sinz counter: count[v][t] means at least t of on[1..v] hold.
    std::vector<std::vector<int>> count(static_cast<std::size_t>(n) + 1,
                                        std::vector<int>(static_cast<std::size_t>(cap) + 1, 0));
    for (int v = 1; v <= n; ++v) {
      for (int t = 1; t <= cap; ++t) count[v][t] = fresh();
    }
    for (int v = 1; v <= n; ++v) {
      inst.clauses.push_back({-on[v], count[v][1]});
      if (v == 1) continue;
      for (int t = 1; t <= cap; ++t) {
        inst.clauses.push_back({-count[v - 1][t], count[v][t]});
        if (t > 1) inst.clauses.push_back({-on[v], -count[v - 1][t - 1], count[v][t]});
      }
      inst.clauses.push_back({-on[v], -count[v - 1][cap]});
    }
  }
}

}  // namespace

CnfInstance encode_arrow(int n, const OrderedGraph& red, const OrderedGraph& blue,
                         const EncodeOptions& options) {
  if (n < 1) throw std::invalid_argument("encode_arrow needs N >= 1");
  const EdgeVarMap vars(n);
  CnfInstance inst;
  inst.vertex_count = n;
  inst.variable_count = vars.variable_count();
  inst.edge_variable_count = inst.variable_count;
  inst.red = red;
  inst.blue = blue;
  inst.red_id = pattern_id(red);
  inst.blue_id = pattern_id(blue);
  inst.options = options;

  // Symmetric mode names every edge by the smaller of itself and its mirror.
  auto literal_var = [&](int a, int b) {
    const int v = vars.var(a, b);
    if (!options.symmetric) return v;
    return std::min(v, vars.var(n + 1 - b, n + 1 - a));
  };

  auto add_pattern = [&](const OrderedGraph& pattern, bool is_red) -> std::size_t {
    if (pattern.vertex_count() > n) return 0;
    if (pattern.edge_count() == 0) {
      inst.contradiction = true;
      return 0;
    }
    std::vector<std::vector<int>> out;
    for_each_increasing_map(pattern.vertex_count(), n, [&](const std::vector<int>& phi) {
      std::vector<int> clause;
      clause.reserve(pattern.edge_count());
      for (const auto& e : pattern.edges()) {
        const int v = literal_var(phi[e.u - 1], phi[e.v - 1]);
        clause.push_back(is_red ? -v : v);
      }
      out.push_back(std::move(clause));
    });
    // Distinct maps can share an edge image when the pattern has isolated
    // vertices or edges are identified with their mirrors.
    if (options.symmetric || has_isolated_vertex(pattern)) {
      for (auto& c : out) {
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    const std::size_t count = out.size();
    inst.clauses.insert(inst.clauses.end(), std::make_move_iterator(out.begin()),
                        std::make_move_iterator(out.end()));
    return count;
  };
  inst.red_clauses = add_pattern(red, true);
  inst.blue_clauses = add_pattern(blue, false);

  if (options.symmetric) {
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        const int v = vars.var(i, j);
        const int m = vars.var(n + 1 - j, n + 1 - i);
        if (v < m) {
          inst.clauses.push_back({-v, m});
          inst.clauses.push_back({v, -m});
        }
      }
    }
  }
  for (const auto& f : options.fixed) {
    const int v = vars.var(f.edge.u, f.edge.v);
    inst.clauses.push_back({f.color == Color::Red ? v : -v});
  }
  const int m = red.vertex_count();
  if (options.path_levels && !inst.contradiction && m >= 2 && red == monotone_path(m)) {
    add_path_levels(inst, vars, m, is_complete(blue) ? blue.vertex_count() : 0);
  }
  return inst;
}

TwoColoring decode_model(const std::vector<bool>& model, int n) {
  const auto need = static_cast<std::size_t>(pair_count(n));
  if (model.size() < need) {
    throw std::invalid_argument("partial model: " + std::to_string(model.size()) + " of " +
                                std::to_string(need) + " edge variables assigned");
  }
  TwoColoring c(n);
  std::size_t k = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j, ++k) {
      if (model[k]) c.set(i, j, Color::Red);
    }
  }
  return c;
}

}  // namespace ordram
