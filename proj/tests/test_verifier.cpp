#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "dtk/errors.hpp"
#include "dtk/verify.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace dtk;
using fixtures::box;
using fixtures::corners;
using fixtures::interval;

namespace {

std::set<std::vector<int>> as_set(const std::vector<DigitalMap>& maps) {
  std::set<std::vector<int>> out;
  for (const auto& m : maps) out.insert(m.table());
  return out;
}

std::set<std::vector<int>> as_set(const std::vector<std::vector<int>>& tabs) {
  return {tabs.begin(), tabs.end()};
}

}  // namespace

TEST_CASE("extension counts match the reference enumeration") {
  DigitalImage p2 = interval(0, 1);
  auto got = enumerate_continuous_extensions(ExtensionProblem::self_map(p2), {});
  CHECK(got.size() == 4);
  CHECK(as_set(got) == as_set(oracle::all_maps_naive(p2, p2)));

  DigitalImage p3 = interval(0, 2);
  auto got3 = enumerate_continuous_extensions(ExtensionProblem::self_map(p3), {});
  CHECK(got3.size() == 17);
  CHECK(as_set(got3) == as_set(oracle::all_maps_naive(p3, p3)));

  // endpoints pinned to themselves: only the identity survives
  ExtensionProblem pinned = ExtensionProblem::self_map(p3);
  pinned.seed = {0, -1, 2};
  auto one = enumerate_continuous_extensions(pinned, {});
  REQUIRE(one.size() == 1);
  CHECK(one[0] == DigitalMap::identity(p3));
}

TEST_CASE("engine agrees with the oracle on mixed instances") {
  std::vector<DigitalImage> images{interval(0, 3), box(0, 1, 0, 1, 1),
                                   box(0, 1, 0, 1, 2), box(0, 2, 0, 1, 1)};
  for (const auto& X : images) {
    auto got = enumerate_continuous_extensions(ExtensionProblem::self_map(X), {});
    CHECK(as_set(got) == as_set(oracle::continuous_maps(X, X)));
  }
}

TEST_CASE("parallel split returns the sequential result") {
  DigitalImage X = box(0, 2, 0, 1, 1);
  SearchLimits seq;
  SearchLimits par;
  par.jobs = 4;
  auto a = enumerate_continuous_extensions(ExtensionProblem::self_map(X), seq);
  auto b = enumerate_continuous_extensions(ExtensionProblem::self_map(X), par);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("node budget is enforced") {
  DigitalImage X = box(0, 2, 0, 2, 1);
  SearchLimits tiny;
  tiny.node_budget = 3;
  CHECK_THROWS_AS(
      enumerate_continuous_extensions(ExtensionProblem::self_map(X), tiny),
      BudgetError);
}

TEST_CASE("freezing verification") {
  DigitalImage X = box(0, 2, 0, 2, 1);
  PointSet C = corners(0, 2, 0, 2);
  auto rep = verify_freezing(X, C);
  CHECK(rep.holds);
  CHECK(oracle::freezing(X, C));

  PointSet three = set_difference(C, PointSet{Point{2, 2}});
  auto rep3 = verify_freezing(X, three);
  CHECK_FALSE(rep3.holds);
  REQUIRE(rep3.witnesses.size() == 1);
  // witness fixes the three corners but is not the identity
  const DigitalMap& w = rep3.witnesses[0];
  CHECK(is_continuous(w));
  for (const auto& p : three) CHECK(w.apply(p) == p);
  CHECK_FALSE(w == DigitalMap::identity(X));
  CHECK_FALSE(oracle::freezing(X, three));
}

TEST_CASE("cold verification") {
  DigitalImage X = interval(0, 4);
  PointSet ends{Point{0}, Point{4}};
  auto rep = verify_cold(X, ends);
  CHECK(rep.holds == oracle::cold(X, ends));

  PointSet one{Point{0}};
  auto bad = verify_cold(X, one);
  CHECK_FALSE(bad.holds);
  CHECK_FALSE(oracle::cold(X, one));
  CHECK_FALSE(bad.violating_points.empty());
}

TEST_CASE("unifying verification vs oracle") {
  DigitalImage sq = box(0, 1, 0, 1, 1);
  // whole image is trivially unifying
  CHECK(verify_unifying(sq, sq.points()).holds);
  CHECK(oracle::unifying(sq, sq.points()));

  DigitalImage X = box(0, 2, 0, 1, 1);
  PointSet C = corners(0, 2, 0, 1);
  CHECK(verify_unifying(X, C).holds == oracle::unifying(X, C));
}

TEST_CASE("minimality verification") {
  DigitalImage X = box(0, 2, 0, 2, 1);
  auto rep = verify_minimal_freezing(X, corners(0, 2, 0, 2));
  CHECK(rep.holds);

  // a redundant point breaks minimality
  PointSet padded = set_union(corners(0, 2, 0, 2), PointSet{Point{1, 0}});
  auto rep2 = verify_minimal_freezing(X, padded);
  CHECK_FALSE(rep2.holds);

  CHECK_THROWS_AS(verify_minimal_freezing(X, PointSet{Point{0, 0}}),
                  HypothesisError);
}

TEST_CASE("forced isomorphism on the square corner set") {
  DigitalImage X = box(0, 2, 0, 2, 1);
  auto rep = verify_forced_isomorphism(X, corners(0, 2, 0, 2));
  CHECK(rep.holds);
}
