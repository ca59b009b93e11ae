#pragma once

#include <cstdlib>
#include <vector>

#include "dtk/image.hpp"

namespace fixtures {

inline dtk::DigitalImage box(int x0, int x1, int y0, int y1, int u) {
  dtk::PointSet pts;
  for (int x = x0; x <= x1; ++x)
    for (int y = y0; y <= y1; ++y) pts.push_back(dtk::Point{x, y});
  return dtk::DigitalImage(dtk::normalized(pts), dtk::AdjacencySpec::cu_adj(u, 2));
}

inline dtk::DigitalImage interval(int a, int b) {
  dtk::PointSet pts;
  for (int x = a; x <= b; ++x) pts.push_back(dtk::Point{x});
  return dtk::DigitalImage(std::move(pts), dtk::AdjacencySpec::cu_adj(1, 1));
}

// |x| + |y| <= r under c_u
inline dtk::DigitalImage diamond(int r, int u) {
  dtk::PointSet pts;
  for (int x = -r; x <= r; ++x)
    for (int y = -r; y <= r; ++y)
      if (std::abs(x) + std::abs(y) <= r) pts.push_back(dtk::Point{x, y});
  return dtk::DigitalImage(dtk::normalized(pts), dtk::AdjacencySpec::cu_adj(u, 2));
}

inline dtk::DigitalImage punctured_box(int x0, int x1, int y0, int y1,
                                       const dtk::PointSet& holes, int u) {
  dtk::PointSet pts;
  for (int x = x0; x <= x1; ++x)
    for (int y = y0; y <= y1; ++y) {
      dtk::Point p{x, y};
      if (!dtk::contains(holes, p)) pts.push_back(p);
    }
  return dtk::DigitalImage(dtk::normalized(pts), dtk::AdjacencySpec::cu_adj(u, 2));
}

// Lattice points of the slanted rectangle with corners (0,0), (m,m),
// (m+n,m-n), (n,-n): all (x,y) with 0 <= x+y <= 2m and 0 <= x-y <= 2n.
inline dtk::DigitalImage slanted_rectangle(int m, int n, int u) {
  dtk::PointSet pts;
  for (int x = 0; x <= m + n; ++x)
    for (int y = -n; y <= m; ++y)
      if (0 <= x + y && x + y <= 2 * m && 0 <= x - y && x - y <= 2 * n)
        pts.push_back(dtk::Point{x, y});
  return dtk::DigitalImage(dtk::normalized(pts), dtk::AdjacencySpec::cu_adj(u, 2));
}

inline dtk::PointSet corners(int x0, int x1, int y0, int y1) {
  return dtk::normalized(dtk::PointSet{dtk::Point{x0, y0}, dtk::Point{x0, y1},
                                       dtk::Point{x1, y0}, dtk::Point{x1, y1}});
}

}  // namespace fixtures
