#pragma once

#include <string>
#include <vector>

#include "dtk/image.hpp"
#include "dtk/lattice.hpp"

namespace dtk {

// A total function between digital images, stored as an explicit table from
// domain point index to codomain point index.  All predicates are plain
// decidable scans; images at this scale are desk-sized.
class DigitalMap {
 public:
  DigitalMap(DigitalImage domain, DigitalImage codomain, std::vector<int> table);

  static DigitalMap identity(const DigitalImage& X);
  static DigitalMap from_pairs(const DigitalImage& domain,
                               const DigitalImage& codomain,
                               const std::vector<std::pair<Point, Point>>& pairs);

  const DigitalImage& domain() const { return domain_; }
  const DigitalImage& codomain() const { return codomain_; }
  const std::vector<int>& table() const { return table_; }

  int apply_idx(int i) const { return table_[static_cast<std::size_t>(i)]; }
  Point apply(const Point& p) const;

  bool is_self_map() const { return domain_ == codomain_; }
  PointSet image_points() const;

  // Pointwise table equality over identical domain/codomain.
  friend bool operator==(const DigitalMap& a, const DigitalMap& b) {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ &&
           a.table_ == b.table_;
  }

  std::string str() const;

 private:
  DigitalImage domain_;
  DigitalImage codomain_;
  std::vector<int> table_;
};

// Edge-preservation continuity: every domain edge maps to an
// adjacent-or-equal pair (equivalent to the connected-set definition).
bool is_continuous(const DigitalMap& f);

DigitalMap compose(const DigitalMap& g, const DigitalMap& f);

bool is_isomorphism(const DigitalMap& f);

// r is a retraction onto A: codomain points equal A, r continuous, r|_A = id.
bool is_retraction(const DigitalMap& r, const PointSet& A);

PointSet fixed_points(const DigitalMap& f);
PointSet approximate_fixed_points(const DigitalMap& f);

// Coordinate projection p_i (0-based axis) on lattice points.
int project(const Point& p, int axis);

// Diagnostic for the coordinate-pulling property of continuous self-maps on
// c_u lattice images: if a map moves a point past q in coordinate i, it also
// moves the neighbor behind q.  Must hold for every continuous such map.
bool check_pull_property(const DigitalMap& f);

// Coordinatewise product of maps between NP_u products of the factor images.
DigitalMap product_map(const std::vector<DigitalMap>& factors, int u);

}  // namespace dtk
