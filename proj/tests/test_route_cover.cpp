#include <filesystem>
#include <random>
#include <set>

#include "doctest.h"
#include "ordram/coloring_io.hpp"
#include "ordram/embedding.hpp"
#include "ordram/queue_layout.hpp"
#include "support/oracles.hpp"

using namespace ordram;

namespace {

// Smallest number of classes without a nested pair, by exhaustive backtracking.
int min_nesting_free_classes(const std::vector<Edge>& edges) {
  const std::size_t m = edges.size();
  if (m == 0) return 0;
  std::vector<int> cls(m, -1);
  for (int k = 1;; ++k) {
    std::function<bool(std::size_t)> place = [&](std::size_t i) {
      if (i == m) return true;
      for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j) {
          if (cls[j] == c && (is_nested(edges[i], edges[j]) || is_nested(edges[j], edges[i]))) {
            ok = false;
          }
        }
        if (ok) {
          cls[i] = c;
          if (place(i + 1)) return true;
        }
      }
      return false;
    };
    if (place(0)) return k;
  }
}

std::filesystem::path fixture(const char* name) {
  return std::filesystem::path(ORDRAM_FIXTURE_DIR) / name;
}

}  // namespace

TEST_CASE("nesting is strict") {
  CHECK(is_nested({1, 4}, {2, 3}));
  CHECK_FALSE(is_nested({1, 4}, {1, 3}));
  CHECK_FALSE(is_nested({1, 4}, {2, 4}));
  CHECK_FALSE(is_nested({1, 3}, {2, 4}));
}

TEST_CASE("longest nested chain examples") {
  CHECK(max_nested_matching(nested_matching(4)).size == 4);
  const auto k6 = max_nested_matching(complete_graph(6));
  CHECK(k6.size == 3);
  CHECK(k6.edges == std::vector<Edge>{{1, 6}, {2, 5}, {3, 4}});
  CHECK(max_nested_matching(extremal_nm_free_graph(3, 9)).size == 2);
  CHECK(max_nested_matching(OrderedGraph(5)).size == 0);
}

TEST_CASE("queue partition examples") {
  CHECK(queue_partition(monotone_path(6)).size() == 1);
  const auto nm3 = queue_partition(nested_matching(3));
  CHECK(nm3.size() == 3);
  for (const auto& c : nm3.classes) CHECK(c.size() == 1);
  CHECK(queue_partition(OrderedGraph(4)).size() == 0);
  CHECK(queue_partition(general_construction_chi(7).red_graph()).size() <= 6);
}

TEST_CASE("queue partition equals the longest chain and the exhaustive minimum") {
  for (int n = 1; n <= 6; ++n) {
    const std::uint64_t graphs = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < graphs; ++mask) {
      const auto g = oracle::graph_from_mask(n, mask);
      const auto p = queue_partition(g);
      REQUIRE(is_valid_queue_partition(g, p));
      const int chain = oracle::longest_nested_chain(g.edges());
      REQUIRE(static_cast<int>(p.size()) == chain);
      REQUIRE(max_nested_matching(g).size == chain);
      if (n <= 5) REQUIRE(min_nesting_free_classes(g.edges()) == chain);
    }
  }
}

TEST_CASE("no NM_{k+1} in a k-queue graph") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + trial % 11;
    const auto g = oracle::random_graph(n, 0.15 + 0.1 * (trial % 7), rng);
    const int k = static_cast<int>(queue_partition(g).size());
    CHECK_FALSE(contains_ordered_subgraph(g, nested_matching(k + 1)));
    if (k > 0) CHECK(contains_ordered_subgraph(g, nested_matching(k)));
  }
}

TEST_CASE("invalid partitions are rejected") {
  const auto g = nested_matching(2);
  QueuePartition bad;
  bad.classes = {{{1, 4}, {2, 3}}};
  CHECK_FALSE(is_valid_queue_partition(g, bad));
  QueuePartition missing;
  missing.classes = {{{1, 4}}};
  CHECK_FALSE(is_valid_queue_partition(g, missing));
  QueuePartition twice;
  twice.classes = {{{1, 4}}, {{2, 3}}, {{2, 3}}};
  CHECK_FALSE(is_valid_queue_partition(g, twice));
}

TEST_CASE("edge bound") {
  CHECK(nm_free_edge_bound(3, 9) == 26);
  CHECK(nm_free_edge_bound(1, 7) == 0);
  CHECK(nm_free_edge_bound(2, 4) == 5);
  CHECK_THROWS_AS(nm_free_edge_bound(3, 5), std::invalid_argument);
  CHECK(extremal_nm_free_graph(3, 9).edge_count() == 26);
  CHECK(extremal_nm_free_graph(2, 4).edge_count() == 5);
  CHECK(extremal_nm_free_graph(1, 5).edge_count() == 0);
}

TEST_CASE("edge bound is tight for NM_2 by brute force") {
  for (int n = 4; n <= 6; ++n) {
    std::size_t best = 0;
    const std::uint64_t graphs = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < graphs; ++mask) {
      const auto g = oracle::graph_from_mask(n, mask);
      if (oracle::longest_nested_chain(g.edges()) <= 1) best = std::max(best, g.edge_count());
    }
    CHECK(static_cast<std::int64_t>(best) == nm_free_edge_bound(2, n));
  }
}

TEST_CASE("extremal graphs meet the bound") {
  for (int n = 1; n <= 4; ++n) {
    for (int big = 2 * n; big <= 16; ++big) {
      const auto g = extremal_nm_free_graph(n, big);
      CHECK(static_cast<std::int64_t>(g.edge_count()) == nm_free_edge_bound(n, big));
      CHECK(max_nested_matching(g).size == n - 1);
    }
  }
}

TEST_CASE("random NM_n-free graphs respect the bound") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 500; ++trial) {
    const int big = 6 + trial % 10;
    const auto g = oracle::random_graph(big, 0.2 + 0.1 * (trial % 6), rng);
    const int n = max_nested_matching(g).size + 1;
    if (big >= 2 * n) CHECK(static_cast<std::int64_t>(g.edge_count()) <= nm_free_edge_bound(n, big));
  }
}

TEST_CASE("anti-diagonal profiles") {
  const auto nm3 = antidiagonal_profile(nested_matching(3));
  CHECK(nm3.at(7) == 3);
  CHECK(nm3.total() == 3);
  CHECK(nm3.max() == 3);
  const auto p3 = antidiagonal_profile(monotone_path(3));
  CHECK(p3.at(3) == 1);
  CHECK(p3.at(5) == 1);
  CHECK(p3.at(4) == 0);
  CHECK(antidiagonal_profile(extremal_nm_free_graph(3, 9)).max() <= 2);

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = oracle::random_graph(3 + trial % 10, 0.4, rng);
    const auto prof = antidiagonal_profile(g);
    CHECK(prof.total() == static_cast<std::int64_t>(g.edge_count()));
    CHECK(prof.max() <= max_nested_matching(g).size);
  }
}

TEST_CASE("routes") {
  const auto nm2 = materialize_routes(queue_partition(nested_matching(2)), 4);
  REQUIRE(nm2.ok);
  CHECK(nm2.routes.size() == 2);

  const auto empty = materialize_routes(queue_partition(OrderedGraph(5)), 5);
  CHECK(empty.ok);
  CHECK(empty.routes.empty());

  const auto ext = materialize_routes(queue_partition(extremal_nm_free_graph(3, 9)), 9);
  REQUIRE(ext.ok);
  CHECK(ext.routes.size() == 2);
}

TEST_CASE("route materialization invariants") {
  std::mt19937_64 rng(13);
  int successes = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 + trial % 9;
    const auto g = oracle::random_graph(n, 0.3, rng);
    const auto p = queue_partition(g);
    const auto m = materialize_routes(p, n);
    if (!m.ok) continue;
    ++successes;
    REQUIRE(m.routes.size() == p.size());
    std::set<Position> used;
    for (std::size_t t = 0; t < m.routes.size(); ++t) {
      const auto& r = m.routes[t];
      CHECK(is_valid_route(r, n));
      for (const auto& pos : r.positions) CHECK(used.insert(pos).second);
      const std::set<Position> on(r.positions.begin(), r.positions.end());
      for (const auto& e : p.classes[t]) CHECK(on.count({e.u, e.v}) == 1);
    }
  }
  CHECK(successes > 100);
}

TEST_CASE("route validity") {
  Route r{1, {{1, 1}, {1, 2}, {2, 2}}};
  CHECK(is_valid_route(r, 2));
  Route jump{1, {{1, 1}, {2, 2}}};
  CHECK_FALSE(is_valid_route(jump, 2));
  Route wrong_end{1, {{1, 1}, {1, 2}}};
  CHECK_FALSE(is_valid_route(wrong_end, 2));
}

TEST_CASE("chromatic bound from the pinned colorings") {
  const auto chi1 = read_coloring_document(fixture("chi1_n15.col"));
  const auto chi2 = read_coloring_document(fixture("chi2_n19.col"));
  CHECK(chromatic_lower_bound_from_coloring(chi1.coloring, 3) == 8);
  CHECK(chromatic_lower_bound_from_coloring(chi2.coloring, 4) == 10);
  CHECK_THROWS_AS(chromatic_lower_bound_from_coloring(TwoColoring(3), 2), NotAvoidingError);
  try {
    chromatic_lower_bound_from_coloring(TwoColoring(3), 2);
  } catch (const NotAvoidingError& e) {
    CHECK(e.verdict().status == Verdict::Status::BlueWitness);
  }
}

TEST_CASE("pinned colorings carry valid route certificates") {
  for (const auto* name : {"chi1_n15.col", "chi2_n19.col"}) {
    const auto doc = read_coloring_document(fixture(name));
    const auto g = doc.coloring.red_graph();
    const int n = doc.coloring.vertex_count();
    const auto k = static_cast<int>(doc.routes.size());
    CHECK(k == max_nested_matching(g).size);
    CHECK(static_cast<std::int64_t>(g.edge_count()) == nm_free_edge_bound(k + 1, n));
    std::set<Position> on;
    for (const auto& r : doc.routes) {
      CHECK(is_valid_route(r, n));
      on.insert(r.positions.begin(), r.positions.end());
    }
    for (const auto& e : g.edges()) CHECK(on.count({e.u, e.v}) == 1);
  }
}
