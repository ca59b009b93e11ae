#include "dtk/map.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dtk/errors.hpp"

namespace dtk {

DigitalMap::DigitalMap(DigitalImage domain, DigitalImage codomain,
                       std::vector<int> table)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      table_(std::move(table)) {
  if (static_cast<int>(table_.size()) != domain_.size())
    throw Error("digital map: table must assign every domain point");
  for (int v : table_)
    if (v < 0 || v >= codomain_.size())
      throw Error("digital map: value outside the codomain");
}

DigitalMap DigitalMap::identity(const DigitalImage& X) {
  std::vector<int> t(static_cast<std::size_t>(X.size()));
  std::iota(t.begin(), t.end(), 0);
  return DigitalMap(X, X, std::move(t));
}

DigitalMap DigitalMap::from_pairs(
    const DigitalImage& domain, const DigitalImage& codomain,
    const std::vector<std::pair<Point, Point>>& pairs) {
  std::vector<int> t(static_cast<std::size_t>(domain.size()), -1);
  for (const auto& [p, q] : pairs) {
    int i = domain.index_of(p);
    int j = codomain.index_of(q);
    if (i < 0) throw Error("map from pairs: " + p.str() + " not in the domain");
    if (j < 0) throw Error("map from pairs: " + q.str() + " not in the codomain");
    t[static_cast<std::size_t>(i)] = j;
  }
  for (int v : t)
    if (v < 0) throw Error("map from pairs: assignment is not total");
  return DigitalMap(domain, codomain, std::move(t));
}

Point DigitalMap::apply(const Point& p) const {
  int i = domain_.index_of(p);
  if (i < 0) throw Error("map: point " + p.str() + " not in the domain");
  return codomain_.point(apply_idx(i));
}

PointSet DigitalMap::image_points() const {
  PointSet out;
  for (int v : table_) out.push_back(codomain_.point(v));
  return normalized(std::move(out));
}

std::string DigitalMap::str() const {
  std::ostringstream os;
  for (int i = 0; i < domain_.size(); ++i) {
    if (i) os << ' ';
    os << domain_.point(i).str() << "->" << codomain_.point(apply_idx(i)).str();
  }
  return os.str();
}

bool is_continuous(const DigitalMap& f) {
  for (const auto& [i, j] : f.domain().edges()) {
    int fi = f.apply_idx(i);
    int fj = f.apply_idx(j);
    if (fi != fj && !f.codomain().adjacent_idx(fi, fj)) return false;
  }
  return true;
}

DigitalMap compose(const DigitalMap& g, const DigitalMap& f) {
  if (!(f.codomain() == g.domain()))
    throw Error("compose: codomain of f must equal domain of g");
  std::vector<int> t(static_cast<std::size_t>(f.domain().size()));
  for (int i = 0; i < f.domain().size(); ++i)
    t[static_cast<std::size_t>(i)] = g.apply_idx(f.apply_idx(i));
  return DigitalMap(f.domain(), g.codomain(), std::move(t));
}

bool is_isomorphism(const DigitalMap& f) {
  if (f.domain().size() != f.codomain().size()) return false;
  std::vector<int> inverse(static_cast<std::size_t>(f.codomain().size()), -1);
  for (int i = 0; i < f.domain().size(); ++i) {
    int v = f.apply_idx(i);
    if (inverse[static_cast<std::size_t>(v)] >= 0) return false;
    inverse[static_cast<std::size_t>(v)] = i;
  }
  if (!is_continuous(f)) return false;
  DigitalMap finv(f.codomain(), f.domain(), std::move(inverse));
  return is_continuous(finv);
}

bool is_retraction(const DigitalMap& r, const PointSet& A) {
  if (r.codomain().points() != A)
    throw Error("is_retraction: codomain point set must equal A");
  if (!is_subset(A, r.domain().points()))
    throw Error("is_retraction: A must be a subset of the domain");
  if (!is_continuous(r)) return false;
  for (const auto& a : A)
    if (r.apply(a) != a) return false;
  return true;
}

PointSet fixed_points(const DigitalMap& f) {
  if (!f.is_self_map()) throw Error("fixed_points: not a self-map");
  PointSet out;
  for (int i = 0; i < f.domain().size(); ++i)
    if (f.apply_idx(i) == i) out.push_back(f.domain().point(i));
  return out;
}

PointSet approximate_fixed_points(const DigitalMap& f) {
  if (!f.is_self_map()) throw Error("approximate_fixed_points: not a self-map");
  PointSet out;
  for (int i = 0; i < f.domain().size(); ++i) {
    int v = f.apply_idx(i);
    if (v == i || f.domain().adjacent_idx(i, v))
      out.push_back(f.domain().point(i));
  }
  return out;
}

int project(const Point& p, int axis) {
  if (axis < 0 || axis >= p.dim())
    throw DimensionError("project: axis out of range for " + p.str());
  return p[axis];
}

bool check_pull_property(const DigitalMap& f) {
  if (!f.is_self_map()) throw Error("check_pull_property: not a self-map");
  const DigitalImage& X = f.domain();
  if (X.adjacency().kind != AdjacencySpec::Kind::cu)
    throw AbstractImageError("check_pull_property: requires a c_u lattice image");
  if (!is_continuous(f)) throw Error("check_pull_property: map is discontinuous");
  for (const auto& [i, j] : X.edges()) {
    for (auto [q, qp] : {std::pair{i, j}, std::pair{j, i}}) {
      const Point& pq = X.point(q);
      const Point& pqp = X.point(qp);
      const Point& fq = X.point(f.apply_idx(q));
      const Point& fqp = X.point(f.apply_idx(qp));
      for (int c = 0; c < X.dim(); ++c) {
        if (fq[c] > pq[c] && pq[c] > pqp[c] && !(fqp[c] > pqp[c])) return false;
        if (fq[c] < pq[c] && pq[c] < pqp[c] && !(fqp[c] < pqp[c])) return false;
      }
    }
  }
  return true;
}

DigitalMap product_map(const std::vector<DigitalMap>& factors, int u) {
  if (factors.empty()) throw Error("product_map: needs at least one factor");
  std::vector<DigitalImage> doms;
  std::vector<DigitalImage> cods;
  for (const auto& f : factors) {
    doms.push_back(f.domain());
    cods.push_back(f.codomain());
  }
  DigitalImage dom = product_image(doms, u);
  DigitalImage cod = product_image(cods, u);
  std::vector<int> table(static_cast<std::size_t>(dom.size()));
  for (int i = 0; i < dom.size(); ++i) {
    const Point& p = dom.point(i);
    std::vector<int> cs;
    int off = 0;
    for (const auto& f : factors) {
      int d = f.domain().dim();
      Point sub(std::vector<int>(p.coords.begin() + off,
                                 p.coords.begin() + off + d));
      Point img = f.apply(sub);
      cs.insert(cs.end(), img.coords.begin(), img.coords.end());
      off += d;
    }
    int j = cod.index_of(Point(cs));
    if (j < 0) throw Error("product_map: factor image misalignment");
    table[static_cast<std::size_t>(i)] = j;
  }
  return DigitalMap(std::move(dom), std::move(cod), std::move(table));
}

}  // namespace dtk
