#include "dtk/point.hpp"

#include <algorithm>
#include <sstream>

#include "dtk/errors.hpp"

namespace dtk {

std::string Point::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) os << ',';
    os << coords[i];
  }
  os << ')';
  return os.str();
}

Point concat(const Point& a, const Point& b) {
  std::vector<int> cs = a.coords;
  cs.insert(cs.end(), b.coords.begin(), b.coords.end());
  return Point(std::move(cs));
}

PointSet normalized(PointSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool contains(const PointSet& s, const Point& p) {
  return std::binary_search(s.begin(), s.end(), p);
}

PointSet set_union(const PointSet& a, const PointSet& b) {
  PointSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

PointSet set_difference(const PointSet& a, const PointSet& b) {
  PointSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

PointSet set_intersection(const PointSet& a, const PointSet& b) {
  PointSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

bool is_subset(const PointSet& a, const PointSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string to_string(const PointSet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ' ';
    os << s[i].str();
  }
  os << '}';
  return os.str();
}

}  // namespace dtk
