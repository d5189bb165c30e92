#include "doctest.h"
#include "ordram/caterpillar.hpp"
#include "ordram/embedding.hpp"
#include "support/oracles.hpp"

using namespace ordram;

namespace {

CaterpillarDecomposition stars(std::vector<StarShape> s) { return {std::move(s)}; }

}  // namespace

TEST_CASE("decomposition of simple caterpillars") {
  const auto p = caterpillar_by_decomposition(monotone_path(4));
  REQUIRE(p);
  CHECK(p->rebuild() == monotone_path(4));

  const auto s = caterpillar_by_decomposition(ordered_star(1, 4));
  REQUIRE(s);
  CHECK(s->stars == std::vector<StarShape>{{1, 4}});

  const auto joined = join(join(ordered_star(1, 3), ordered_star(3, 2)), ordered_star(1, 4));
  const auto d = caterpillar_by_decomposition(joined);
  REQUIRE(d);
  CHECK(d->rebuild() == joined);

  const auto two_sided = caterpillar_by_decomposition(ordered_star(4, 3));
  REQUIRE(two_sided);
  CHECK(two_sided->rebuild() == ordered_star(4, 3));

  const auto single = caterpillar_by_decomposition(OrderedGraph(1));
  REQUIRE(single);
  CHECK(single->stars == std::vector<StarShape>{{1, 1}});
}

TEST_CASE("two-sided stars and non-caterpillars") {
  CHECK_FALSE(caterpillar_by_decomposition(nested_matching(2)));
  CHECK_FALSE(caterpillar_by_decomposition(complete_graph(3)));
  CHECK_FALSE(caterpillar_by_decomposition(OrderedGraph(3, {{1, 2}})));
  CHECK(stars({{1, 3}, {3, 1}}).rebuild().vertex_count() == 5);
}

TEST_CASE("forbidden patterns") {
  const auto& f = forbidden_caterpillar_patterns();
  CHECK(f[0] == nested_matching(2));
  CHECK(f[1] == OrderedGraph(4, {{1, 3}, {2, 4}}));
  CHECK(f[2] == OrderedGraph(4, {{1, 2}, {1, 4}, {3, 4}}));
  CHECK(f[3] == complete_graph(3));
  CHECK_THROWS_AS(caterpillar_by_patterns(OrderedGraph(2)), std::invalid_argument);
}

TEST_CASE("both recognizers agree on every connected graph up to six vertices") {
  for (int v = 1; v <= 6; ++v) {
    int disagreements = 0;
    for_each_connected_graph(v, [&](const OrderedGraph& g) {
      const auto d = caterpillar_by_decomposition(g);
      if (d.has_value() != caterpillar_by_patterns(g)) ++disagreements;
      if (d && !(d->rebuild() == g)) ++disagreements;
    });
    CHECK_MESSAGE(disagreements == 0, "v = " << v);
  }
}

TEST_CASE("the triangle pattern is redundant on trees") {
  for (int v = 1; v <= 6; ++v) {
    for_each_connected_graph(v, [&](const OrderedGraph& g) {
      if (!is_tree(g)) return;
      CHECK(caterpillar_by_patterns(g, true) == caterpillar_by_patterns(g, false));
    });
  }
}

TEST_CASE("minimal non-caterpillar trees") {
  const auto trees = minimal_noncaterpillar_trees(4);
  CHECK(trees.size() == 9);
  for (const auto& t : trees) {
    CHECK(is_tree(t));
    CHECK(t.vertex_count() == 4);
    CHECK_FALSE(caterpillar_by_patterns(t));
  }
}
