#pragma once

#include <utility>
#include <vector>

#include "dtk/map.hpp"

namespace dtk {

// Instance families used throughout the property suites: cycles, trees,
// complete graphs, and wedges of two cycles, all as abstract graphs with
// explicit edge sets over 1-D integer labels.

struct CycleImage {
  int n = 0;
  DigitalImage image;

  // Circular vertex access: vertex(i) is the point labelled i mod n.
  Point vertex(int i) const;
};

// Two cycles sharing exactly the wedge point, labelled 0.  The left cycle
// C_m uses labels 0 .. m-1; the right cycle C_n uses 0, m, .., m+n-2.
struct WedgeImage {
  int m = 0;
  int n = 0;
  DigitalImage image;

  Point left_vertex(int i) const;
  Point right_vertex(int i) const;
};

CycleImage cycle(int n);
DigitalImage tree_from_edges(const std::vector<std::pair<int, int>>& edges);
DigitalImage complete_graph(int k);
WedgeImage wedge(int m, int n);

// True iff n > 4 and each of the three arcs between consecutive chosen
// vertices is the unique shorter path for its endpoints (length < n/2).
bool cycle_freezing_triple_valid(const CycleImage& c, int i, int j, int k);

// Degree-1 vertices of a tree with at least 2 points.
PointSet tree_leaves(const DigitalImage& t);

// {x_i, x_j, x'_k, x'_p}; requires {0, i, j} to be a valid triple on the
// left cycle and {0, k, p} one on the right cycle.
PointSet wedge_freezing_set(const WedgeImage& w, int i, int j, int k, int p);

// The fixed counterexample self-map of C_6 wedge C_n: x_3 -> x_0,
// x_2 -> x_1, x_4 -> x_5, identity elsewhere.
DigitalMap counterexample_wedge_map(const WedgeImage& w);

// Fast necessary condition: every freezing set of a tree contains all its
// leaves.
bool leaf_necessity_check(const DigitalImage& t, const PointSet& a);

// Edge lists of all free (unlabelled) trees on exactly n vertices, one
// representative per isomorphism class, vertices labelled 0 .. n-1.
std::vector<std::vector<std::pair<int, int>>> all_free_trees(int n);

// A realization of C_6 wedge C_8 as c_2-simple closed curves in Z^2 glued
// at the origin: a hexagon in the half-plane x <= 0 and a diamond in
// x >= 0.  left[i] and right[i] carry the circular labellings.
struct PlaneWedge {
  DigitalImage image;
  std::vector<Point> left;
  std::vector<Point> right;
};

PlaneWedge plane_wedge_c6_c8();

}  // namespace dtk
