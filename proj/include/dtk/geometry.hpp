#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dtk/image.hpp"
#include "dtk/lattice.hpp"

namespace dtk {

// Z^2 structure: digital segments, closed curves, Jordan decomposition,
// disks with bounding curves, interior angles, thickness, convexity, and the
// boundary-based freezing-set constructors.

enum class Orientation { horizontal, vertical, slant_up, slant_down };

std::string orientation_name(Orientation o);

// A run of collinear points with consecutive points c_2-adjacent and slope
// 0, infinity, +1 or -1.
struct Segment {
  std::vector<Point> points;
  Orientation orientation = Orientation::horizontal;

  bool axis_parallel() const {
    return orientation == Orientation::horizontal ||
           orientation == Orientation::vertical;
  }
  bool slanted() const { return !axis_parallel(); }
};

std::optional<Segment> as_digital_segment(const std::vector<Point>& pts);

// A cyclic sequence s_0 ... s_{m-1} of distinct points of Z^2 with
// consecutive points (including s_{m-1}, s_0) c_u-adjacent.
struct ClosedCurve {
  std::vector<Point> points;
  int u = 2;

  // Validates the closed-curve conditions; a trailing repeat of the first
  // point is accepted and dropped.
  static ClosedCurve from_sequence(std::vector<Point> seq, int u);

  int size() const { return static_cast<int>(points.size()); }
  const Point& at(int i) const {
    int m = size();
    return points[static_cast<std::size_t>(((i % m) + m) % m)];
  }
  PointSet point_set() const;

  friend bool operator==(const ClosedCurve& a, const ClosedCurve& b) = default;
};

bool is_closed_curve(const std::vector<Point>& seq, int u);
// Adds the punctured-neighborhood condition (each point's only curve
// neighbors are its cyclic predecessor and successor) and the size
// thresholds m >= 8 for c_1 and m >= 4 for c_2.
bool is_simple_closed_curve(const std::vector<Point>& seq, int u);

struct JordanDecomposition {
  PointSet interior;
  Point exterior_marker;
  int complement_u = 1;
};

// Complement components are computed in the curve's bounding box inflated
// by 1; a component is infinite iff it meets the inflated frame.
struct JordanResult {
  bool ok = false;
  JordanDecomposition decomposition;
  std::vector<PointSet> bounded_components;
  std::string diagnosis;
};

JordanResult jordan_decompose(const ClosedCurve& S);

// S is a c_2-closed curve whose complement has one finite and one infinite
// c_1-component, and S together with the finite component equals D.
bool is_bounding_curve(const ClosedCurve& S, const DigitalImage& D);

// Outer-contour trace from the lexicographically least point.  Throws
// NotADiskError when D does not admit a bounding curve this way (holes,
// multiple bounded complement components, degenerate boundary).  A curve
// with empty interior is returned for thin images whose points all lie on
// the contour.
ClosedCurve trace_bounding_curve(const DigitalImage& D);

struct MinimizedCurve {
  ClosedCurve curve;
  // True when the exhaustive search over candidate curves inside Bd_2(D)
  // completed; curve is then a globally smallest bounding curve.
  bool certified = false;
};

// Iterated corner shortcuts (replace two perpendicular axis-parallel steps
// by their diagonal when the result still bounds D).  With certify, an
// exhaustive search over curves within Bd_2(D) is run; it requires
// #Bd_2(D) <= 20 and adopts any strictly smaller curve it finds.
MinimizedCurve minimize_bounding_curve(const ClosedCurve& S,
                                       const DigitalImage& D,
                                       bool certify = false);

// The outer curve plus one curve per hole, with each separation and
// coverage condition re-checked; throws Error with a diagnosis otherwise.
std::vector<ClosedCurve> bounding_curve_set(const DigitalImage& X);

struct DiskAnalysis {
  DigitalImage image;
  ClosedCurve bounding_curve;
  PointSet interior;
  std::vector<Segment> maximal_segments;
  // Vertex -> interior angle in degrees (multiples of 45).
  std::vector<std::pair<Point, int>> angles;
  bool thick = false;
  PointSet thick_failures;
  bool convex = false;
  std::vector<Point> hull_vertices;
};

DiskAnalysis analyze_disk(const DigitalImage& D);

// Strictly convex hull vertices of a finite planar set, counterclockwise
// from the lexicographically least point.
std::vector<Point> convex_hull_vertices(const PointSet& pts);

// Bd_1(X), a freezing set for (X, c_u) on any finite lattice image.
PointSet construct_freezing_bd1(const DigitalImage& X, int u);

// The 2^n corner set of a full axis-aligned box with every side of length
// at least 1.
PointSet construct_corner_freezing(const DigitalImage& box);

// Endpoints of maximal axis-parallel segments plus all points of slanted
// segments; requires a thick convex disk.
PointSet construct_freezing_c1(const DigitalImage& D);

// Endpoints of maximal slanted segments plus all points of axis-parallel
// segments of a minimal bounding curve; requires a thick convex disk and a
// certified-minimal curve unless assume_minimal is set.
PointSet construct_freezing_c2(const DigitalImage& D,
                               bool assume_minimal = false);

PointSet construct_freezing_c1_union(const DigitalImage& X,
                                     const std::vector<DigitalImage>& disks);
PointSet construct_freezing_c2_union(const DigitalImage& X,
                                     const std::vector<DigitalImage>& disks,
                                     bool assume_minimal = false);

// True iff every 90-degree axis-parallel corner of a minimal bounding curve
// of X at which X is 90-thick belongs to A; a fast necessary condition for
// freezing and cold sets.
bool corner_necessity_check(const DigitalImage& X, const PointSet& A);

}  // namespace dtk
