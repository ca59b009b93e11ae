#include "dtk/shy.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "dtk/errors.hpp"
#include "dtk/lattice.hpp"

namespace dtk {

namespace {

std::vector<int> fiber_indices(const DigitalMap& f, const std::vector<int>& ys) {
  std::vector<int> out;
  for (int x = 0; x < f.domain().size(); ++x)
    if (std::find(ys.begin(), ys.end(), f.apply_idx(x)) != ys.end())
      out.push_back(x);
  return out;
}

PointSet indices_to_points(const DigitalImage& X, const std::vector<int>& idx) {
  PointSet out;
  for (int i : idx) out.push_back(X.point(i));
  return out;
}

}  // namespace

DigitalImage induced_subimage(const DigitalImage& X, const PointSet& S) {
  PointSet pts = normalized(S);
  for (const auto& p : pts)
    if (!X.contains(p))
      throw Error("induced_subimage: point " + p.str() + " is not in the image");
  if (X.adjacency().kind == AdjacencySpec::Kind::explicit_edges) {
    std::vector<std::pair<Point, Point>> es;
    for (const auto& e : X.adjacency().edges)
      if (contains(pts, e.first) && contains(pts, e.second)) es.push_back(e);
    return DigitalImage(std::move(pts),
                        AdjacencySpec::explicit_adj(std::move(es), X.dim()));
  }
  return DigitalImage(std::move(pts), X.adjacency());
}

ShyAnalysis is_shy(const DigitalMap& f) {
  if (!is_continuous(f)) throw Error("is_shy: map is not continuous");
  ShyAnalysis out;
  const DigitalImage& Y = f.codomain();
  // single-point fibers
  for (int y = 0; y < Y.size(); ++y) {
    auto fib = fiber_indices(f, {y});
    if (fib.empty()) continue;
    if (!subset_connected(f.domain(), fib)) {
      out.shy = false;
      out.violating_fiber = PointSet{Y.point(y)};
      out.violating_preimage = indices_to_points(f.domain(), fib);
      return out;
    }
  }
  // adjacent-pair fibers
  for (const auto& [y0, y1] : Y.edges()) {
    auto fib = fiber_indices(f, {y0, y1});
    if (fib.empty()) continue;
    if (!subset_connected(f.domain(), fib)) {
      out.shy = false;
      out.violating_fiber = PointSet{Y.point(y0), Y.point(y1)};
      out.violating_preimage = indices_to_points(f.domain(), fib);
      return out;
    }
  }
  out.shy = true;
  return out;
}

InverseConnectivityResult inverse_preserves_connectivity(const DigitalMap& f,
                                                         std::size_t max_subsets) {
  if (!is_continuous(f))
    throw Error("inverse_preserves_connectivity: map is not continuous");
  InverseConnectivityResult out;
  DigitalImage img = induced_subimage(f.codomain(), f.image_points());
  std::vector<std::vector<int>> subsets;
  out.complete = connected_subsets(img, max_subsets, &subsets);
  for (const auto& sub : subsets) {
    std::vector<int> ys;
    for (int i : sub) ys.push_back(f.codomain().index_of(img.point(i)));
    auto pre = fiber_indices(f, ys);
    if (!subset_connected(f.domain(), pre)) {
      out.preserves = false;
      out.complete = true;  // a violation decides the question
      out.violating_subset = indices_to_points(img, sub);
      return out;
    }
  }
  return out;
}

PointSet articulation_points(const DigitalImage& X) {
  if (!is_connected(X)) throw Error("articulation_points: image not connected");
  PointSet out;
  for (int i = 0; i < X.size(); ++i) {
    std::vector<int> rest;
    for (int j = 0; j < X.size(); ++j)
      if (j != i) rest.push_back(j);
    if (!rest.empty() && !subset_connected(X, rest)) out.push_back(X.point(i));
  }
  return out;
}

namespace {

// True when K is (exactly) a component of the subimage of X induced on M.
bool is_component_of(const DigitalImage& X, const PointSet& M, const PointSet& K) {
  DigitalImage sub = induced_subimage(X, M);
  for (const auto& comp : components(sub))
    if (comp == K) return true;
  return false;
}

}  // namespace

ShyRetraction build_shy_retraction(const DigitalImage& X, const PointSet& R,
                                   const PointSet& A) {
  PointSet Rn = normalized(R);
  PointSet An = normalized(A);
  if (An.empty()) throw Error("build_shy_retraction: empty anchor set");
  if (!is_subset(An, Rn) || !is_subset(Rn, X.points()))
    throw Error("build_shy_retraction: require A subset of R subset of X");

  DigitalImage target = induced_subimage(X, Rn);
  std::vector<std::pair<PointSet, Point>> anchors;
  std::vector<int> table(static_cast<std::size_t>(X.size()), -1);
  for (int i = 0; i < X.size(); ++i)
    if (contains(Rn, X.point(i))) table[static_cast<std::size_t>(i)] = target.index_of(X.point(i));

  PointSet outside = set_difference(X.points(), Rn);
  if (!outside.empty()) {
    for (const auto& K : components(induced_subimage(X, outside))) {
      const Point* anchor = nullptr;
      for (const auto& p : An) {  // A is sorted, so the first hit is lex-least
        PointSet M = set_difference(set_union(K, Rn), PointSet{p});
        if (!M.empty() && is_component_of(X, M, K)) {
          anchor = &p;
          break;
        }
      }
      if (!anchor)
        throw HypothesisError(
            "build_shy_retraction: no anchor in A separates component " +
            to_string(K) + " from R");
      int pi = target.index_of(*anchor);
      for (const auto& x : K) table[static_cast<std::size_t>(X.index_of(x))] = pi;
      anchors.emplace_back(K, *anchor);
    }
  }

  DigitalMap r(X, target, std::move(table));
  if (!is_retraction(r, Rn) || !is_shy(r).shy)
    throw Error("build_shy_retraction: constructed map failed the shy-retraction check");
  return ShyRetraction{std::move(r), std::move(anchors)};
}

namespace {

bool is_tree(const DigitalImage& X) {
  return X.size() >= 1 && static_cast<int>(X.edges().size()) == X.size() - 1 &&
         is_connected(X);
}

}  // namespace

ShyRetraction tree_shy_retraction(const DigitalImage& X, const PointSet& R) {
  if (!is_tree(X)) throw Error("tree_shy_retraction: image is not a tree");
  PointSet Rn = normalized(R);
  if (Rn.empty() || !is_subset(Rn, X.points()))
    throw Error("tree_shy_retraction: R must be a nonempty subset of X");
  DigitalImage sub = induced_subimage(X, Rn);
  if (!is_connected(sub)) throw Error("tree_shy_retraction: R is not a subtree");
  if (Rn == X.points())
    return ShyRetraction{DigitalMap::identity(X), {}};
  // Anchors: leaves of R (degree <= 1 in the subtree) that are internal in X.
  PointSet A;
  for (int i = 0; i < sub.size(); ++i) {
    const Point& p = sub.point(i);
    if (sub.degree(i) <= 1 && X.degree(X.index_of(p)) >= 2) A.push_back(p);
  }
  if (A.empty())
    throw HypothesisError(
        "tree_shy_retraction: every leaf of R is also a leaf of X");
  return build_shy_retraction(X, Rn, A);
}

VerificationReport verify_unique_shy_retraction(const DigitalImage& X,
                                                const PointSet& R,
                                                const SearchLimits& limits) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.property = Property::unique_shy_retraction;

  ShyRetraction built = build_shy_retraction(X, R, R);
  const DigitalImage& target = built.map.codomain();

  std::vector<int> seed(static_cast<std::size_t>(X.size()), -1);
  for (int i = 0; i < X.size(); ++i) {
    int t = target.index_of(X.point(i));
    if (t >= 0) seed[static_cast<std::size_t>(i)] = t;
  }
  ExtensionProblem prob{X, target, std::move(seed), {}, false};

  std::vector<DigitalMap> shy_retractions;
  SearchStats stats = for_each_continuous_extension(
      prob, limits, [&](const std::vector<int>& table) {
        DigitalMap f(X, target, table);
        if (is_shy(f).shy) shy_retractions.push_back(std::move(f));
        return true;
      });

  rep.nodes_explored = stats.nodes;
  rep.holds = shy_retractions.size() == 1 && shy_retractions[0] == built.map;
  if (rep.holds) {
    rep.detail = "exactly one shy retraction, equal to the constructed one";
  } else {
    rep.witnesses = shy_retractions;
    rep.detail = "found " + std::to_string(shy_retractions.size()) +
                 " shy retractions onto R";
  }
  rep.elapsed = std::chrono::steady_clock::now() - t0;
  return rep;
}

}  // namespace dtk
