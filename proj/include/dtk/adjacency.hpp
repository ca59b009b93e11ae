#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dtk/point.hpp"

namespace dtk {

// Selector for an adjacency relation on point sets:
//   - cu: the c_u adjacency on Z^n (at least one and at most u coordinates
//     change by exactly 1, all others are equal),
//   - np: the generalized normal product NP_u(k_1, ..., k_v) over factor
//     adjacencies, acting on concatenated coordinates,
//   - explicit_edges: an arbitrary symmetric edge set for abstract graphs.
struct AdjacencySpec {
  enum class Kind { cu, np, explicit_edges };

  Kind kind = Kind::cu;
  int u = 1;
  int dim = 1;  // for cu and explicit_edges; np derives it from the factors
  std::vector<AdjacencySpec> factors;               // np only
  std::vector<std::pair<Point, Point>> edges;       // explicit only; normalized

  static AdjacencySpec cu_adj(int u, int dim);
  static AdjacencySpec np_adj(int u, std::vector<AdjacencySpec> fs);
  static AdjacencySpec explicit_adj(std::vector<std::pair<Point, Point>> es,
                                    int dim);

  int dimension() const;
  // True when the relation is defined by lattice geometry all the way down;
  // geometric operations (boundaries, curves, disks) require this.
  bool is_lattice() const;
  std::string str() const;

  friend bool operator==(const AdjacencySpec& a, const AdjacencySpec& b);
};

// Whether p and q are adjacent under adj.  Irreflexive: false when p == q.
bool adjacent(const Point& p, const Point& q, const AdjacencySpec& adj);

// Reflexive closure of adjacency.
bool adjacent_or_equal(const Point& p, const Point& q, const AdjacencySpec& adj);

}  // namespace dtk
