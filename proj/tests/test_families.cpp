#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dtk/errors.hpp"
#include "dtk/families.hpp"
#include "dtk/geometry.hpp"
#include "dtk/lattice.hpp"
#include "dtk/map.hpp"

using namespace dtk;

TEST_CASE("cycles") {
  CycleImage c5 = cycle(5);
  CHECK(c5.image.size() == 5);
  CHECK(c5.image.edges().size() == 5);
  for (int i = 0; i < 5; ++i) CHECK(c5.image.degree(i) == 2);
  CHECK(c5.vertex(7) == c5.vertex(2));
  CHECK(c5.vertex(-1) == c5.vertex(4));
  CHECK_THROWS_AS(cycle(2), Error);
}

TEST_CASE("cycle triples need unique shorter arcs") {
  CHECK(cycle_freezing_triple_valid(cycle(8), 0, 3, 6));
  CHECK_FALSE(cycle_freezing_triple_valid(cycle(8), 0, 1, 2));  // long back arc
  CHECK_FALSE(cycle_freezing_triple_valid(cycle(8), 0, 4, 6));  // tied arc 0-4
  CHECK_FALSE(cycle_freezing_triple_valid(cycle(8), 0, 3, 3));
  CHECK_FALSE(cycle_freezing_triple_valid(cycle(4), 0, 1, 2));  // n too small
  CHECK(cycle_freezing_triple_valid(cycle(5), 0, 1, 3));
}

TEST_CASE("trees and leaves") {
  DigitalImage path = tree_from_edges({{0, 1}, {1, 2}, {2, 3}});
  CHECK(tree_leaves(path) == normalized(PointSet{Point{0}, Point{3}}));

  DigitalImage star = tree_from_edges({{0, 1}, {0, 2}, {0, 3}});
  CHECK(tree_leaves(star).size() == 3);
  CHECK(leaf_necessity_check(star, tree_leaves(star)));
  CHECK_FALSE(leaf_necessity_check(star, PointSet{Point{1}, Point{2}}));

  CHECK_THROWS_AS(tree_from_edges({{0, 1}, {2, 3}}), Error);      // forest
  CHECK_THROWS_AS(tree_from_edges({{0, 1}, {1, 2}, {2, 0}}), Error);  // cycle
}

TEST_CASE("complete graphs") {
  DigitalImage k4 = complete_graph(4);
  CHECK(k4.size() == 4);
  CHECK(k4.edges().size() == 6);
}

TEST_CASE("free tree enumeration counts") {
  // numbers of isomorphism classes of free trees on 1..10 vertices
  std::vector<std::size_t> expected{1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (int n = 1; n <= 10; ++n) {
    auto trees = all_free_trees(n);
    CHECK(trees.size() == expected[static_cast<std::size_t>(n - 1)]);
    for (const auto& es : trees) {
      if (n == 1) continue;
      DigitalImage t = tree_from_edges(es);
      CHECK(t.size() == n);
    }
  }
}

TEST_CASE("wedge structure") {
  WedgeImage w = wedge(6, 8);
  CHECK(w.image.size() == 13);
  CHECK(w.image.edges().size() == 14);
  CHECK(w.left_vertex(0) == w.right_vertex(0));  // shared wedge point
  CHECK(w.image.degree(w.image.index_of(w.left_vertex(0))) == 4);
  CHECK(w.image.degree(w.image.index_of(w.left_vertex(3))) == 2);
  CHECK_THROWS_AS(wedge(4, 8), Error);
}

TEST_CASE("wedge freezing sets") {
  WedgeImage w = wedge(6, 8);
  PointSet A = wedge_freezing_set(w, 2, 4, 3, 6);
  CHECK(A.size() == 4);
  CHECK(contains(A, w.left_vertex(2)));
  CHECK(contains(A, w.right_vertex(3)));
  CHECK_THROWS_AS(wedge_freezing_set(w, 1, 2, 3, 6), Error);
}

TEST_CASE("the fixed wedge self-map is continuous but collapses an arc") {
  WedgeImage w = wedge(6, 8);
  DigitalMap f = counterexample_wedge_map(w);
  CHECK(is_continuous(f));
  CHECK(f.apply(w.left_vertex(3)) == w.left_vertex(0));
  CHECK(f.apply(w.left_vertex(2)) == w.left_vertex(1));
  CHECK(f.apply(w.left_vertex(4)) == w.left_vertex(5));
  CHECK(f.apply(w.right_vertex(3)) == w.right_vertex(3));
  // x_3 jumps across the left cycle
  CHECK_FALSE(contains(approximate_fixed_points(f), w.left_vertex(3)));
  CHECK_THROWS_AS(counterexample_wedge_map(wedge(8, 8)), Error);
}

TEST_CASE("plane embedding of the 6-8 wedge") {
  PlaneWedge pw = plane_wedge_c6_c8();
  CHECK(pw.image.size() == 13);
  CHECK(pw.left.size() == 6);
  CHECK(pw.right.size() == 8);
  CHECK(pw.left[0] == pw.right[0]);
  CHECK(is_simple_closed_curve(pw.left, 2));
  CHECK(is_simple_closed_curve(pw.right, 2));
  // the embedding must induce exactly the abstract wedge adjacency
  WedgeImage w = wedge(6, 8);
  CHECK(pw.image.edges().size() == w.image.edges().size());
  for (int i = 0; i < 6; ++i) {
    int a = pw.image.index_of(pw.left[static_cast<std::size_t>(i)]);
    int b = pw.image.index_of(pw.left[static_cast<std::size_t>((i + 1) % 6)]);
    CHECK(pw.image.adjacent_idx(a, b));
  }
}
