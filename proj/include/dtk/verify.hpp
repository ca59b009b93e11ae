#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "dtk/map.hpp"

namespace dtk {

struct SearchLimits {
  // Hard cap on search nodes per verification; exceeding it throws
  // BudgetError rather than reporting from a truncated search.
  long long node_budget = 10'000'000;
  int jobs = 1;
};

struct SearchStats {
  long long nodes = 0;
  bool stopped_early = false;
};

// A continuous-extension search instance: enumerate the continuous maps
// domain -> codomain that agree with the seed and stay inside the per-point
// candidate restrictions.
struct ExtensionProblem {
  DigitalImage domain;
  DigitalImage codomain;
  // Per domain index: fixed codomain index, or -1 when free.
  std::vector<int> seed;
  // Per domain index: allowed codomain indices (sorted); empty outer vector
  // means unrestricted everywhere.
  std::vector<std::vector<int>> restrictions;
  // Coordinate-monotonicity pruning; only ever applied to c_u self-maps.
  bool pull_pruning = true;

  static ExtensionProblem self_map(const DigitalImage& X);
};

// Streams every solution (as a domain-index -> codomain-index table) in
// lexicographic table order.  The callback returns false to stop early.
using MapCallback = std::function<bool(const std::vector<int>&)>;
SearchStats for_each_continuous_extension(const ExtensionProblem& p,
                                          const SearchLimits& limits,
                                          const MapCallback& cb);

struct StopMode {
  enum class Kind { first, first_differing, count_up_to, all };
  Kind kind = Kind::all;
  std::vector<int> reference;  // first_differing
  std::size_t k = 0;           // count_up_to

  static StopMode all() { return {}; }
  static StopMode first() { return {Kind::first, {}, 0}; }
  static StopMode first_differing(std::vector<int> ref) {
    return {Kind::first_differing, std::move(ref), 0};
  }
  static StopMode count_up_to(std::size_t k) { return {Kind::count_up_to, {}, k}; }
};

// Collected solutions in canonical (lexicographic) order.  With jobs > 1 the
// search tree is split on the first free point and the merged result is
// identical to the sequential order.
std::vector<DigitalMap> enumerate_continuous_extensions(
    const ExtensionProblem& p, const SearchLimits& limits,
    const StopMode& stop = StopMode::all(), SearchStats* stats = nullptr);

enum class Property {
  freezing,
  cold,
  unifying,
  minimal_freezing,
  minimal_unifying,
  afp_propagation,
  forced_isomorphism,
  unique_shy_retraction,
};

std::string property_name(Property p);

struct VerificationReport {
  Property property;
  bool holds = false;
  // Counterexample maps when holds is false; re-checked independently of the
  // search path before emission.
  std::vector<DigitalMap> witnesses;
  // Points at which a witness violates the property (cold / afp).
  PointSet violating_points;
  long long nodes_explored = 0;
  std::chrono::duration<double> elapsed{0};
  std::string detail;
};

// The only continuous self-map fixing A pointwise is the identity.
VerificationReport verify_freezing(const DigitalImage& X, const PointSet& A,
                                   const SearchLimits& limits = {});

// Every continuous self-map fixing A pointwise moves each point by
// at most one adjacency step.  Requires X connected.
VerificationReport verify_cold(const DigitalImage& X, const PointSet& A,
                               const SearchLimits& limits = {});

// For each bijection sigma of A preserving adjacency-or-equality,
// at most one continuous self-map extends sigma with f(A) = A.
VerificationReport verify_unifying(const DigitalImage& X, const PointSet& A,
                                   const SearchLimits& limits = {});

VerificationReport verify_minimal_freezing(const DigitalImage& X,
                                           const PointSet& A,
                                           const SearchLimits& limits = {});
VerificationReport verify_minimal_unifying(const DigitalImage& X,
                                           const PointSet& A,
                                           const SearchLimits& limits = {});

// Every continuous self-map with each point of A approximately fixed has
// every point of X approximately fixed.
VerificationReport verify_afp_propagation(const DigitalImage& X,
                                          const PointSet& A,
                                          const SearchLimits& limits = {});

// Every continuous self-map with f(A) = A is an isomorphism.
VerificationReport verify_forced_isomorphism(const DigitalImage& X,
                                             const PointSet& A,
                                             const SearchLimits& limits = {});

// Checks the implication "product of the A_i unifying for the NP_v product
// image implies each A_i unifying for its factor" by running both sides.
VerificationReport verify_unifying_projection(
    const std::vector<DigitalImage>& factors, int u,
    const std::vector<PointSet>& factor_sets, const SearchLimits& limits = {});

}  // namespace dtk
