#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dtk/map.hpp"
#include "dtk/verify.hpp"

namespace dtk {

// Shy maps: continuous maps whose point fibers and adjacent-pair fibers are
// connected, and the unique shy retraction onto a subimage guarded by
// articulation points.

struct ShyAnalysis {
  bool shy = false;
  // When not shy: the codomain point(s) whose preimage is disconnected,
  // and that preimage.
  std::optional<PointSet> violating_fiber;
  std::optional<PointSet> violating_preimage;
};

ShyAnalysis is_shy(const DigitalMap& f);

// Checks whether the multivalued inverse preserves connectivity: every
// connected subset of the image of f (enumerated up to max_subsets) has a
// connected preimage.  Must agree with is_shy when complete.
struct InverseConnectivityResult {
  bool preserves = true;
  bool complete = true;  // false when the subset cap was hit undecided
  std::optional<PointSet> violating_subset;
};

InverseConnectivityResult inverse_preserves_connectivity(
    const DigitalMap& f, std::size_t max_subsets = 200000);

// Cut vertices of a connected image.
PointSet articulation_points(const DigitalImage& X);

struct ShyRetraction {
  DigitalMap map;  // X -> R (codomain is the subimage on R)
  // Per component of X \ R: the component and its designated anchor point.
  std::vector<std::pair<PointSet, Point>> component_anchors;
};

// r(x) = x on R, r(x) = the anchor of x's component otherwise.  Each
// component K of X \ R needs some p in A that is an articulation point of
// K union R separating K from R; the lexicographically least such p is
// chosen.  The result is re-checked to be a shy retraction.
ShyRetraction build_shy_retraction(const DigitalImage& X, const PointSet& R,
                                   const PointSet& A);

// Specialization for a subtree R of a tree X, with the anchors taken from
// the leaves of R that are not leaves of X.
ShyRetraction tree_shy_retraction(const DigitalImage& X, const PointSet& R);

// Enumerates every continuous retraction X -> R, filters the shy ones, and
// holds iff exactly one exists and equals the constructed retraction.
VerificationReport verify_unique_shy_retraction(const DigitalImage& X,
                                                const PointSet& R,
                                                const SearchLimits& limits = {});

// The subimage of X on the points of S, with the induced adjacency.
DigitalImage induced_subimage(const DigitalImage& X, const PointSet& S);

}  // namespace dtk
