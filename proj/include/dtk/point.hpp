#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace dtk {

// A lattice point in Z^n.  Coordinates are exact integers; comparison is
// lexicographic, which fixes the deterministic iteration order used
// throughout the library.
struct Point {
  std::vector<int> coords;

  Point() = default;
  Point(std::initializer_list<int> cs) : coords(cs) {}
  explicit Point(std::vector<int> cs) : coords(std::move(cs)) {}

  int dim() const { return static_cast<int>(coords.size()); }
  int operator[](int i) const { return coords[static_cast<std::size_t>(i)]; }
  int x() const { return coords[0]; }
  int y() const { return coords[1]; }

  friend auto operator<=>(const Point&, const Point&) = default;

  std::string str() const;
};

// Coordinate concatenation, used by product images.
Point concat(const Point& a, const Point& b);

// Finite point sets are kept sorted and duplicate-free.
using PointSet = std::vector<Point>;

PointSet normalized(PointSet s);
bool contains(const PointSet& s, const Point& p);
PointSet set_union(const PointSet& a, const PointSet& b);
PointSet set_difference(const PointSet& a, const PointSet& b);
PointSet set_intersection(const PointSet& a, const PointSet& b);
bool is_subset(const PointSet& a, const PointSet& b);
std::string to_string(const PointSet& s);

}  // namespace dtk
