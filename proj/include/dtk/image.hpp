#pragma once

#include <utility>
#include <vector>

#include "dtk/adjacency.hpp"
#include "dtk/point.hpp"

namespace dtk {

// A finite digital image (X, kappa): a sorted point set with an adjacency.
// Immutable after construction; the adjacency lists are materialized once so
// that continuity checks and the search engine read them contention-free.
class DigitalImage {
 public:
  DigitalImage(PointSet points, AdjacencySpec adjacency);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(points_.size()); }
  const PointSet& points() const { return points_; }
  const Point& point(int i) const { return points_[static_cast<std::size_t>(i)]; }
  const AdjacencySpec& adjacency() const { return adj_; }

  // Index of p in the sorted point order, or -1 if absent.
  int index_of(const Point& p) const;
  bool contains(const Point& p) const { return index_of(p) >= 0; }

  // Sorted neighbor indices of point i.
  const std::vector<int>& neighbors_of(int i) const {
    return nbrs_[static_cast<std::size_t>(i)];
  }
  int degree(int i) const { return static_cast<int>(neighbors_of(i).size()); }
  bool adjacent_idx(int i, int j) const;

  // All edges as index pairs with i < j.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  friend bool operator==(const DigitalImage& a, const DigitalImage& b) {
    return a.points_ == b.points_ && a.adj_ == b.adj_;
  }

 private:
  PointSet points_;
  int dim_;
  AdjacencySpec adj_;
  std::vector<std::vector<int>> nbrs_;
  std::vector<std::pair<int, int>> edges_;
};

}  // namespace dtk
