#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dtk/errors.hpp"
#include "dtk/map.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace dtk;
using fixtures::box;
using fixtures::interval;

TEST_CASE("continuity basics") {
  DigitalImage X = box(0, 2, 0, 2, 1);
  CHECK(is_continuous(DigitalMap::identity(X)));

  // horizontal reflection is continuous and an isomorphism
  std::vector<std::pair<Point, Point>> refl;
  for (const auto& p : X.points()) refl.emplace_back(p, Point{2 - p.x(), p.y()});
  DigitalMap r = DigitalMap::from_pairs(X, X, refl);
  CHECK(is_continuous(r));
  CHECK(is_isomorphism(r));

  // tearing map: sending one corner far away breaks its edges
  std::vector<std::pair<Point, Point>> tear;
  for (const auto& p : X.points())
    tear.emplace_back(p, p == Point{0, 0} ? Point{2, 2} : p);
  CHECK_FALSE(is_continuous(DigitalMap::from_pairs(X, X, tear)));
}

TEST_CASE("composition and retraction") {
  DigitalImage X = interval(0, 4);
  // clamp onto [0,2]
  std::vector<std::pair<Point, Point>> cl;
  for (const auto& p : X.points())
    cl.emplace_back(p, Point{std::min(p[0], 2)});
  DigitalMap clamp = DigitalMap::from_pairs(X, X, cl);
  CHECK(is_continuous(clamp));
  PointSet R{Point{0}, Point{1}, Point{2}};
  // a retraction onto R must have codomain exactly R
  CHECK_THROWS_AS((void)is_retraction(clamp, R), Error);

  DigitalMap cc = compose(clamp, clamp);
  CHECK(cc == clamp);
}

TEST_CASE("fixed and approximate fixed points") {
  DigitalImage X = interval(0, 3);
  std::vector<std::pair<Point, Point>> sh;
  for (const auto& p : X.points())
    sh.emplace_back(p, Point{std::max(0, p[0] - 1)});
  DigitalMap shift = DigitalMap::from_pairs(X, X, sh);
  CHECK(fixed_points(shift) == PointSet{Point{0}});
  // every point moves by at most one step
  CHECK(approximate_fixed_points(shift) == X.points());
}

TEST_CASE("pull property holds for every continuous self-map of an interval") {
  DigitalImage X = interval(0, 3);
  for (const auto& t : oracle::continuous_maps(X, X))
    CHECK(check_pull_property(DigitalMap(X, X, t)));
}

TEST_CASE("product maps: continuity matches factor continuity") {
  DigitalImage a = interval(0, 1);
  DigitalImage b = interval(0, 2);
  auto maps_a = oracle::continuous_maps(a, a);
  for (const auto& ta : maps_a) {
    DigitalMap fa(a, a, ta);
    std::vector<std::pair<Point, Point>> sw{{Point{0}, Point{2}},
                                            {Point{1}, Point{0}},
                                            {Point{2}, Point{1}}};
    DigitalMap fb = DigitalMap::from_pairs(b, b, sw);  // discontinuous
    CHECK_FALSE(is_continuous(fb));
    DigitalMap prod = product_map({fa, fb}, 1);
    CHECK_FALSE(is_continuous(prod));
    DigitalMap good = product_map({fa, DigitalMap::identity(b)}, 1);
    CHECK(is_continuous(good));
  }
}
