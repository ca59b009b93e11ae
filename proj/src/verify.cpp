#include "dtk/verify.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <numeric>

#include "dtk/errors.hpp"

namespace dtk {

ExtensionProblem ExtensionProblem::self_map(const DigitalImage& X) {
  ExtensionProblem p{X, X, std::vector<int>(static_cast<std::size_t>(X.size()), -1),
                     {}, true};
  return p;
}

namespace {

using Domains = std::vector<std::vector<int>>;

class Engine {
 public:
  Engine(const ExtensionProblem& p, long long budget,
         std::atomic<long long>* nodes)
      : p_(p), budget_(budget), nodes_(nodes) {
    const int n = p_.domain.size();
    pull_ = p_.pull_pruning && p_.domain == p_.codomain &&
            p_.domain.adjacency().kind == AdjacencySpec::Kind::cu;
    if (static_cast<int>(p_.seed.size()) != n)
      throw Error("extension problem: seed size must match the domain");
    initial_.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& dom = initial_[static_cast<std::size_t>(v)];
      if (!p_.restrictions.empty()) {
        dom = p_.restrictions[static_cast<std::size_t>(v)];
        std::sort(dom.begin(), dom.end());
        dom.erase(std::unique(dom.begin(), dom.end()), dom.end());
        for (int c : dom)
          if (c < 0 || c >= p_.codomain.size())
            throw Error("extension problem: restriction outside the codomain");
      } else {
        dom.resize(static_cast<std::size_t>(p_.codomain.size()));
        std::iota(dom.begin(), dom.end(), 0);
      }
      int s = p_.seed[static_cast<std::size_t>(v)];
      if (s >= 0) {
        if (!std::binary_search(dom.begin(), dom.end(), s))
          throw Error("extension problem: seed value outside the restrictions");
        dom = {s};
      }
    }
    propagate_singletons();
  }

  // True iff the search ran to completion (callback never stopped it).
  bool run(const MapCallback& cb) {
    if (empty_) return true;
    assign_.assign(static_cast<std::size_t>(p_.domain.size()), -1);
    cb_ = &cb;
    stopped_ = false;
    dfs(0, initial_);
    return !stopped_;
  }

  const Domains& initial_domains() const { return initial_; }
  bool infeasible() const { return empty_; }

 private:
  void charge_node() {
    long long n = nodes_->fetch_add(1, std::memory_order_relaxed) + 1;
    if (n > budget_)
      throw BudgetError("search node budget of " + std::to_string(budget_) +
                        " exceeded");
  }

  // Restrict dom(w) given the assignment f(v) = y, for neighbors v ~ w.
  // Continuity plus, on c_u self-maps, both directions of the
  // coordinate-pulling lemma.
  void filter_neighbor(int v, int y, int w, std::vector<int>* dom) const {
    const Point& pv = p_.domain.point(v);
    const Point& pw = p_.domain.point(w);
    const Point& py = p_.codomain.point(y);
    auto keep = [&](int z) {
      if (z != y && !p_.codomain.adjacent_idx(z, y)) return false;
      if (pull_) {
        const Point& pz = p_.codomain.point(z);
        for (int c = 0; c < p_.domain.dim(); ++c) {
          if (py[c] > pv[c] && pv[c] > pw[c] && !(pz[c] > pw[c])) return false;
          if (py[c] < pv[c] && pv[c] < pw[c] && !(pz[c] < pw[c])) return false;
          if (!(py[c] > pv[c]) && pw[c] > pv[c] && pz[c] > pw[c]) return false;
          if (!(py[c] < pv[c]) && pw[c] < pv[c] && pz[c] < pw[c]) return false;
        }
      }
      return true;
    };
    dom->erase(std::remove_if(dom->begin(), dom->end(),
                              [&](int z) { return !keep(z); }),
               dom->end());
  }

  void propagate_singletons() {
    std::vector<int> queue;
    for (int v = 0; v < p_.domain.size(); ++v)
      if (initial_[static_cast<std::size_t>(v)].size() == 1) queue.push_back(v);
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      int y = initial_[static_cast<std::size_t>(v)].front();
      for (int w : p_.domain.neighbors_of(v)) {
        auto& dom = initial_[static_cast<std::size_t>(w)];
        std::size_t before = dom.size();
        if (before == 1) {
          // already fixed; just check consistency
          std::vector<int> copy = dom;
          filter_neighbor(v, y, w, &copy);
          if (copy.empty()) {
            empty_ = true;
            return;
          }
          continue;
        }
        filter_neighbor(v, y, w, &dom);
        if (dom.empty()) {
          empty_ = true;
          return;
        }
        if (dom.size() == 1 && before > 1) queue.push_back(w);
      }
    }
  }

  void dfs(int depth, const Domains& doms) {
    if (stopped_) return;
    const int n = p_.domain.size();
    if (depth == n) {
      if (!(*cb_)(assign_)) stopped_ = true;
      return;
    }
    for (int y : doms[static_cast<std::size_t>(depth)]) {
      charge_node();
      assign_[static_cast<std::size_t>(depth)] = y;
      Domains next = doms;
      bool dead = false;
      for (int w : p_.domain.neighbors_of(depth)) {
        if (w <= depth) continue;
        filter_neighbor(depth, y, w, &next[static_cast<std::size_t>(w)]);
        if (next[static_cast<std::size_t>(w)].empty()) {
          dead = true;
          break;
        }
      }
      if (!dead) dfs(depth + 1, next);
      if (stopped_) break;
    }
    assign_[static_cast<std::size_t>(depth)] = -1;
  }

  const ExtensionProblem& p_;
  long long budget_;
  std::atomic<long long>* nodes_;
  bool pull_ = false;
  bool empty_ = false;
  bool stopped_ = false;
  Domains initial_;
  std::vector<int> assign_;
  const MapCallback* cb_ = nullptr;
};

}  // namespace

SearchStats for_each_continuous_extension(const ExtensionProblem& p,
                                          const SearchLimits& limits,
                                          const MapCallback& cb) {
  std::atomic<long long> nodes{0};
  Engine engine(p, limits.node_budget, &nodes);
  bool complete = engine.run(cb);
  return SearchStats{nodes.load(), !complete};
}

std::vector<DigitalMap> enumerate_continuous_extensions(
    const ExtensionProblem& p, const SearchLimits& limits, const StopMode& stop,
    SearchStats* stats) {
  std::vector<std::vector<int>> tables;
  std::atomic<long long> nodes{0};

  auto apply_stop = [&](const std::vector<int>& t) {
    switch (stop.kind) {
      case StopMode::Kind::first:
        tables.push_back(t);
        return false;
      case StopMode::Kind::first_differing:
        if (t != stop.reference) {
          tables.push_back(t);
          return false;
        }
        return true;
      case StopMode::Kind::count_up_to:
        tables.push_back(t);
        return tables.size() < stop.k;
      case StopMode::Kind::all:
        tables.push_back(t);
        return true;
    }
    return true;
  };

  if (limits.jobs <= 1) {
    Engine engine(p, limits.node_budget, &nodes);
    engine.run(apply_stop);
  } else {
    // Split the tree on the first free point; each worker enumerates its
    // branch fully and the merged output (in candidate order) is identical
    // to the sequential enumeration, after which the stop mode is applied.
    Engine probe(p, limits.node_budget, &nodes);
    int split = -1;
    if (!probe.infeasible()) {
      const Domains& doms = probe.initial_domains();
      for (int v = 0; v < p.domain.size(); ++v)
        if (doms[static_cast<std::size_t>(v)].size() > 1) {
          split = v;
          break;
        }
    }
    if (split < 0) {
      Engine engine(p, limits.node_budget, &nodes);
      engine.run(apply_stop);
    } else {
      const auto& cands = probe.initial_domains()[static_cast<std::size_t>(split)];
      std::vector<std::future<std::vector<std::vector<int>>>> futures;
      for (int y : cands) {
        futures.push_back(std::async(std::launch::async, [&, y]() {
          ExtensionProblem sub = p;
          sub.seed[static_cast<std::size_t>(split)] = y;
          std::vector<std::vector<int>> found;
          Engine engine(sub, limits.node_budget, &nodes);
          engine.run([&](const std::vector<int>& t) {
            found.push_back(t);
            return true;
          });
          return found;
        }));
      }
      std::vector<std::vector<int>> merged;
      for (auto& f : futures) {
        auto part = f.get();
        merged.insert(merged.end(), part.begin(), part.end());
      }
      for (const auto& t : merged)
        if (!apply_stop(t)) break;
    }
  }

  if (stats != nullptr) *stats = SearchStats{nodes.load(), false};
  std::vector<DigitalMap> out;
  out.reserve(tables.size());
  for (auto& t : tables) out.emplace_back(p.domain, p.codomain, std::move(t));
  return out;
}

std::string property_name(Property p) {
  switch (p) {
    case Property::freezing: return "freezing";
    case Property::cold: return "cold";
    case Property::unifying: return "unifying";
    case Property::minimal_freezing: return "minimal-freezing";
    case Property::minimal_unifying: return "minimal-unifying";
    case Property::afp_propagation: return "afp-propagation";
    case Property::forced_isomorphism: return "forced-isomorphism";
    case Property::unique_shy_retraction: return "unique-shy-retraction";
  }
  return "?";
}

namespace {

class Timer {
 public:
  std::chrono::duration<double> elapsed() const {
    return std::chrono::steady_clock::now() - start_;
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void require_subset(const DigitalImage& X, const PointSet& A,
                    const char* what) {
  if (!is_subset(A, X.points()))
    throw Error(std::string(what) + ": the set must be a subset of the image");
}

std::vector<int> id_seed_on(const DigitalImage& X, const PointSet& A) {
  std::vector<int> seed(static_cast<std::size_t>(X.size()), -1);
  for (const auto& a : A) {
    int i = X.index_of(a);
    seed[static_cast<std::size_t>(i)] = i;
  }
  return seed;
}

void recheck_witness(const DigitalMap& w,
                     const std::function<bool(const DigitalMap&)>& violates) {
  if (!is_continuous(w) || !violates(w))
    throw Error("internal: witness failed independent re-check");
}

std::vector<int> nstar_indices(const DigitalImage& X, int i) {
  std::vector<int> out = X.neighbors_of(i);
  out.push_back(i);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

VerificationReport verify_freezing(const DigitalImage& X, const PointSet& A,
                                   const SearchLimits& limits) {
  require_subset(X, A, "verify_freezing");
  Timer timer;
  ExtensionProblem p = ExtensionProblem::self_map(X);
  p.seed = id_seed_on(X, A);
  DigitalMap id = DigitalMap::identity(X);
  SearchStats stats;
  auto found = enumerate_continuous_extensions(
      p, limits, StopMode::first_differing(id.table()), &stats);
  VerificationReport r{Property::freezing};
  r.nodes_explored = stats.nodes;
  r.holds = found.empty();
  if (!r.holds) {
    recheck_witness(found.front(), [&](const DigitalMap& g) {
      for (const auto& a : A)
        if (g.apply(a) != a) return false;
      return !(g == id);
    });
    r.witnesses = std::move(found);
    r.detail = "a continuous self-map other than the identity fixes the set";
  }
  r.elapsed = timer.elapsed();
  return r;
}

VerificationReport verify_cold(const DigitalImage& X, const PointSet& A,
                               const SearchLimits& limits) {
  require_subset(X, A, "verify_cold");
  if (!is_connected(X))
    throw Error("verify_cold: the image must be connected");
  Timer timer;
  ExtensionProblem p = ExtensionProblem::self_map(X);
  p.seed = id_seed_on(X, A);

  VerificationReport r{Property::cold};
  std::vector<int> witness;
  int violating = -1;
  SearchStats stats = for_each_continuous_extension(
      p, limits, [&](const std::vector<int>& t) {
        for (int i = 0; i < X.size(); ++i) {
          int v = t[static_cast<std::size_t>(i)];
          if (v != i && !X.adjacent_idx(i, v)) {
            witness = t;
            violating = i;
            return false;
          }
        }
        return true;
      });
  r.nodes_explored = stats.nodes;
  r.holds = witness.empty();
  if (!r.holds) {
    DigitalMap w(X, X, witness);
    recheck_witness(w, [&](const DigitalMap& g) {
      for (const auto& a : A)
        if (g.apply(a) != a) return false;
      Point moved = X.point(violating);
      return !contains(closed_neighborhood(X, moved), g.apply(moved));
    });
    r.witnesses.push_back(std::move(w));
    r.violating_points.push_back(X.point(violating));
    r.detail = "extension moves " + X.point(violating).str() +
               " by more than one step";
  }
  r.elapsed = timer.elapsed();
  return r;
}

VerificationReport verify_unifying(const DigitalImage& X, const PointSet& A,
                                   const SearchLimits& limits) {
  require_subset(X, A, "verify_unifying");
  if (A.empty()) throw Error("verify_unifying: the set must be nonempty");
  Timer timer;
  VerificationReport r{Property::unifying};
  r.holds = true;

  std::vector<int> a_idx;
  for (const auto& a : A) a_idx.push_back(X.index_of(a));

  // f(A) = A with A finite forces f|_A to be a bijection of A, so the
  // quantifier over pairs (f, g) collapses to "at most one extension per
  // bijection sigma of A".
  std::vector<std::size_t> perm(A.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < A.size() && ok; ++i)
      for (std::size_t j = i + 1; j < A.size() && ok; ++j)
        if (X.adjacent_idx(a_idx[i], a_idx[j]) &&
            !(a_idx[perm[i]] == a_idx[perm[j]] ||
              X.adjacent_idx(a_idx[perm[i]], a_idx[perm[j]])))
          ok = false;
    if (!ok) continue;

    ExtensionProblem p = ExtensionProblem::self_map(X);
    for (std::size_t i = 0; i < A.size(); ++i)
      p.seed[static_cast<std::size_t>(a_idx[i])] = a_idx[perm[i]];
    SearchStats stats;
    auto found = enumerate_continuous_extensions(p, limits,
                                                 StopMode::count_up_to(2), &stats);
    r.nodes_explored += stats.nodes;
    if (found.size() >= 2) {
      for (const auto& w : found)
        recheck_witness(w, [&](const DigitalMap& f) {
          for (std::size_t i = 0; i < A.size(); ++i)
            if (f.apply(A[i]) != A[perm[i]]) return false;
          return true;
        });
      if (!(found[0] == found[1])) {
        r.holds = false;
        r.witnesses = {found[0], found[1]};
        r.detail = "two distinct continuous self-maps agree on the set and "
                   "permute it identically";
        break;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  r.elapsed = timer.elapsed();
  return r;
}

namespace {

VerificationReport verify_minimal(
    Property prop, const DigitalImage& X, const PointSet& A,
    const SearchLimits& limits,
    const std::function<VerificationReport(const DigitalImage&, const PointSet&,
                                           const SearchLimits&)>& base) {
  VerificationReport base_report = base(X, A, limits);
  if (!base_report.holds)
    throw HypothesisError(property_name(prop) +
                          ": the base property fails for the set itself");
  Timer timer;
  VerificationReport r{prop};
  r.holds = true;
  r.nodes_explored = base_report.nodes_explored;
  // Single-point deletions suffice: supersets of freezing/unifying sets keep
  // the property, since extra pinned points only tighten the search.
  for (const auto& a : A) {
    PointSet smaller = set_difference(A, {a});
    if (smaller.empty()) continue;
    VerificationReport sub = base(X, smaller, limits);
    r.nodes_explored += sub.nodes_explored;
    if (sub.holds) {
      r.holds = false;
      r.violating_points.push_back(a);
      r.detail = "the set stays " +
                 property_name(prop == Property::minimal_freezing
                                   ? Property::freezing
                                   : Property::unifying) +
                 " after deleting " + a.str();
      break;
    }
  }
  r.elapsed = timer.elapsed();
  return r;
}

}  // namespace

VerificationReport verify_minimal_freezing(const DigitalImage& X,
                                           const PointSet& A,
                                           const SearchLimits& limits) {
  return verify_minimal(Property::minimal_freezing, X, A, limits,
                        [](const DigitalImage& x, const PointSet& s,
                           const SearchLimits& l) {
                          return verify_freezing(x, s, l);
                        });
}

VerificationReport verify_minimal_unifying(const DigitalImage& X,
                                           const PointSet& A,
                                           const SearchLimits& limits) {
  return verify_minimal(Property::minimal_unifying, X, A, limits,
                        [](const DigitalImage& x, const PointSet& s,
                           const SearchLimits& l) {
                          return verify_unifying(x, s, l);
                        });
}

VerificationReport verify_afp_propagation(const DigitalImage& X,
                                          const PointSet& A,
                                          const SearchLimits& limits) {
  require_subset(X, A, "verify_afp_propagation");
  Timer timer;
  ExtensionProblem p = ExtensionProblem::self_map(X);
  p.restrictions.assign(static_cast<std::size_t>(X.size()), {});
  for (int i = 0; i < X.size(); ++i) {
    auto& dom = p.restrictions[static_cast<std::size_t>(i)];
    if (contains(A, X.point(i))) {
      dom = nstar_indices(X, i);
    } else {
      dom.resize(static_cast<std::size_t>(X.size()));
      std::iota(dom.begin(), dom.end(), 0);
    }
  }

  VerificationReport r{Property::afp_propagation};
  std::vector<int> witness;
  int violating = -1;
  SearchStats stats = for_each_continuous_extension(
      p, limits, [&](const std::vector<int>& t) {
        for (int i = 0; i < X.size(); ++i) {
          int v = t[static_cast<std::size_t>(i)];
          if (v != i && !X.adjacent_idx(i, v)) {
            witness = t;
            violating = i;
            return false;
          }
        }
        return true;
      });
  r.nodes_explored = stats.nodes;
  r.holds = witness.empty();
  if (!r.holds) {
    DigitalMap w(X, X, witness);
    recheck_witness(w, [&](const DigitalMap& g) {
      PointSet afix = approximate_fixed_points(g);
      return is_subset(A, afix) && !contains(afix, X.point(violating));
    });
    r.witnesses.push_back(std::move(w));
    r.violating_points.push_back(X.point(violating));
    r.detail = X.point(violating).str() +
               " is not an approximate fixed point of the witness";
  }
  r.elapsed = timer.elapsed();
  return r;
}

VerificationReport verify_forced_isomorphism(const DigitalImage& X,
                                             const PointSet& A,
                                             const SearchLimits& limits) {
  require_subset(X, A, "verify_forced_isomorphism");
  Timer timer;
  std::vector<int> a_idx;
  for (const auto& a : A) a_idx.push_back(X.index_of(a));
  std::sort(a_idx.begin(), a_idx.end());

  ExtensionProblem p = ExtensionProblem::self_map(X);
  p.restrictions.assign(static_cast<std::size_t>(X.size()), {});
  for (int i = 0; i < X.size(); ++i) {
    auto& dom = p.restrictions[static_cast<std::size_t>(i)];
    if (std::binary_search(a_idx.begin(), a_idx.end(), i)) {
      dom = a_idx;
    } else {
      dom.resize(static_cast<std::size_t>(X.size()));
      std::iota(dom.begin(), dom.end(), 0);
    }
  }

  VerificationReport r{Property::forced_isomorphism};
  std::vector<int> witness;
  SearchStats stats = for_each_continuous_extension(
      p, limits, [&](const std::vector<int>& t) {
        std::vector<int> image_of_a;
        for (int i : a_idx) image_of_a.push_back(t[static_cast<std::size_t>(i)]);
        std::sort(image_of_a.begin(), image_of_a.end());
        image_of_a.erase(std::unique(image_of_a.begin(), image_of_a.end()),
                         image_of_a.end());
        if (image_of_a != a_idx) return true;  // f(A) != A; not constrained
        DigitalMap f(X, X, t);
        if (!is_isomorphism(f)) {
          witness = t;
          return false;
        }
        return true;
      });
  r.nodes_explored = stats.nodes;
  r.holds = witness.empty();
  if (!r.holds) {
    DigitalMap w(X, X, witness);
    recheck_witness(w, [&](const DigitalMap& f) {
      PointSet fa;
      for (const auto& a : A) fa.push_back(f.apply(a));
      return normalized(std::move(fa)) == A && !is_isomorphism(f);
    });
    r.witnesses.push_back(std::move(w));
    r.detail = "a continuous self-map maps the set onto itself without being "
               "an isomorphism";
  }
  r.elapsed = timer.elapsed();
  return r;
}

VerificationReport verify_unifying_projection(
    const std::vector<DigitalImage>& factors, int u,
    const std::vector<PointSet>& factor_sets, const SearchLimits& limits) {
  if (factors.size() != factor_sets.size())
    throw Error("verify_unifying_projection: one set per factor required");
  if (u != static_cast<int>(factors.size()))
    throw Error("verify_unifying_projection: stated for u = v only");
  Timer timer;

  DigitalImage prod = product_image(factors, u);
  PointSet prod_set{Point{}};
  prod_set.front().coords.clear();
  for (const auto& As : factor_sets) {
    PointSet next;
    for (const auto& p : prod_set)
      for (const auto& a : As) next.push_back(concat(p, a));
    prod_set = std::move(next);
  }
  prod_set = normalized(std::move(prod_set));

  VerificationReport r{Property::unifying};
  VerificationReport whole = verify_unifying(prod, prod_set, limits);
  r.nodes_explored = whole.nodes_explored;
  bool all_factors_hold = true;
  std::string failing;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    VerificationReport fr = verify_unifying(factors[i], factor_sets[i], limits);
    r.nodes_explored += fr.nodes_explored;
    if (!fr.holds) {
      all_factors_hold = false;
      failing = "factor " + std::to_string(i);
      if (!fr.witnesses.empty() && whole.holds)
        r.witnesses = fr.witnesses;  // would contradict the implication
    }
  }
  r.holds = !whole.holds || all_factors_hold;
  r.detail = std::string("product: ") + (whole.holds ? "unifying" : "not unifying") +
             "; factors: " + (all_factors_hold ? "all unifying" : failing + " not unifying");
  r.elapsed = timer.elapsed();
  return r;
}

}  // namespace dtk
