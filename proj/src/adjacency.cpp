#include "dtk/adjacency.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "dtk/errors.hpp"

namespace dtk {

AdjacencySpec AdjacencySpec::cu_adj(int u, int dim) {
  if (dim < 1) throw DimensionError("c_u adjacency needs dimension >= 1");
  if (u < 1 || u > dim)
    throw DimensionError("c_u adjacency needs 1 <= u <= n, got u=" +
                         std::to_string(u) + ", n=" + std::to_string(dim));
  AdjacencySpec a;
  a.kind = Kind::cu;
  a.u = u;
  a.dim = dim;
  return a;
}

AdjacencySpec AdjacencySpec::np_adj(int u, std::vector<AdjacencySpec> fs) {
  if (fs.empty()) throw DimensionError("NP_u adjacency needs at least one factor");
  if (u < 1 || u > static_cast<int>(fs.size()))
    throw DimensionError("NP_u adjacency needs 1 <= u <= v");
  AdjacencySpec a;
  a.kind = Kind::np;
  a.u = u;
  a.factors = std::move(fs);
  a.dim = 0;
  for (const auto& f : a.factors) a.dim += f.dimension();
  return a;
}

AdjacencySpec AdjacencySpec::explicit_adj(
    std::vector<std::pair<Point, Point>> es, int dim) {
  for (auto& e : es) {
    if (e.first == e.second)
      throw Error("explicit adjacency: edges must join distinct points");
    if (e.first.dim() != dim || e.second.dim() != dim)
      throw DimensionError("explicit adjacency: edge endpoint dimension mismatch");
    if (e.second < e.first) std::swap(e.first, e.second);
  }
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  AdjacencySpec a;
  a.kind = Kind::explicit_edges;
  a.dim = dim;
  a.edges = std::move(es);
  return a;
}

int AdjacencySpec::dimension() const { return dim; }

bool AdjacencySpec::is_lattice() const {
  switch (kind) {
    case Kind::cu:
      return true;
    case Kind::np:
      return std::all_of(factors.begin(), factors.end(),
                         [](const AdjacencySpec& f) { return f.is_lattice(); });
    case Kind::explicit_edges:
      return false;
  }
  return false;
}

std::string AdjacencySpec::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::cu:
      os << 'c' << u;
      break;
    case Kind::np:
      os << "np" << u << '(';
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) os << ',';
        os << factors[i].str();
      }
      os << ')';
      break;
    case Kind::explicit_edges:
      os << "explicit[" << edges.size() << " edges]";
      break;
  }
  return os.str();
}

bool operator==(const AdjacencySpec& a, const AdjacencySpec& b) {
  return a.kind == b.kind && a.u == b.u && a.dim == b.dim &&
         a.factors == b.factors && a.edges == b.edges;
}

namespace {

bool cu_adjacent(const Point& p, const Point& q, int u) {
  int changed = 0;
  for (int i = 0; i < p.dim(); ++i) {
    int d = std::abs(p[i] - q[i]);
    if (d > 1) return false;
    changed += d;
    // A coordinate difference other than 0 or 1 already returned above, so
    // the second bullet of the c_u definition holds by construction.
  }
  return changed >= 1 && changed <= u;
}

}  // namespace

bool adjacent(const Point& p, const Point& q, const AdjacencySpec& adj) {
  if (p.dim() != q.dim())
    throw DimensionError("adjacent: points of different dimension");
  if (p.dim() != adj.dimension())
    throw DimensionError("adjacent: adjacency dimension " +
                         std::to_string(adj.dimension()) +
                         " does not match point dimension " +
                         std::to_string(p.dim()));
  switch (adj.kind) {
    case AdjacencySpec::Kind::cu:
      return cu_adjacent(p, q, adj.u);
    case AdjacencySpec::Kind::np: {
      // Between 1 and u factors step to an adjacent point; the rest are equal.
      int moved = 0;
      int off = 0;
      for (const auto& f : adj.factors) {
        int d = f.dimension();
        Point pp(std::vector<int>(p.coords.begin() + off,
                                  p.coords.begin() + off + d));
        Point qq(std::vector<int>(q.coords.begin() + off,
                                  q.coords.begin() + off + d));
        if (pp != qq) {
          if (!adjacent(pp, qq, f)) return false;
          ++moved;
          if (moved > adj.u) return false;
        }
        off += d;
      }
      return moved >= 1;
    }
    case AdjacencySpec::Kind::explicit_edges: {
      if (p == q) return false;
      auto e = p < q ? std::make_pair(p, q) : std::make_pair(q, p);
      return std::binary_search(adj.edges.begin(), adj.edges.end(), e);
    }
  }
  return false;
}

bool adjacent_or_equal(const Point& p, const Point& q,
                       const AdjacencySpec& adj) {
  return p == q || adjacent(p, q, adj);
}

}  // namespace dtk
