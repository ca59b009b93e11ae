#include "dtk/image.hpp"

#include <algorithm>

#include "dtk/errors.hpp"

namespace dtk {

DigitalImage::DigitalImage(PointSet points, AdjacencySpec adjacency)
    : points_(normalized(std::move(points))), adj_(std::move(adjacency)) {
  if (points_.empty()) throw Error("digital image: point set must be nonempty");
  dim_ = points_.front().dim();
  for (const auto& p : points_)
    if (p.dim() != dim_)
      throw DimensionError("digital image: points of mixed dimension");
  if (adj_.dimension() != dim_)
    throw DimensionError("digital image: adjacency dimension mismatch");
  if (adj_.kind == AdjacencySpec::Kind::explicit_edges) {
    for (const auto& e : adj_.edges)
      if (!dtk::contains(points_, e.first) || !dtk::contains(points_, e.second))
        throw Error("digital image: explicit edge references a point outside the image");
  }
  const int n = size();
  nbrs_.assign(static_cast<std::size_t>(n), {});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (adjacent(points_[static_cast<std::size_t>(i)],
                   points_[static_cast<std::size_t>(j)], adj_)) {
        nbrs_[static_cast<std::size_t>(i)].push_back(j);
        nbrs_[static_cast<std::size_t>(j)].push_back(i);
        edges_.emplace_back(i, j);
      }
  for (auto& v : nbrs_) std::sort(v.begin(), v.end());
}

int DigitalImage::index_of(const Point& p) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), p);
  if (it == points_.end() || *it != p) return -1;
  return static_cast<int>(it - points_.begin());
}

bool DigitalImage::adjacent_idx(int i, int j) const {
  const auto& v = neighbors_of(i);
  return std::binary_search(v.begin(), v.end(), j);
}

}  // namespace dtk
