#pragma once

#include <optional>
#include <vector>

#include "dtk/image.hpp"

namespace dtk {

// N(X, x, kappa): the adjacent points of x within X.
PointSet neighbors(const DigitalImage& X, const Point& x);

// N*(X, x, kappa) = N(X, x, kappa) together with x itself.
PointSet closed_neighborhood(const DigitalImage& X, const Point& x);

bool is_connected(const DigitalImage& X);

// Connected components as a partition of the points, ordered by least member.
std::vector<PointSet> components(const DigitalImage& X);

// True when the index subset is nonempty and connected in X's adjacency.
bool subset_connected(const DigitalImage& X, const std::vector<int>& subset);

// All connected subsets of X (as sorted index vectors), up to max_count.
// Returns false if the cap was hit before the enumeration finished.
bool connected_subsets(const DigitalImage& X, std::size_t max_count,
                       std::vector<std::vector<int>>* out);

struct ShortestPaths {
  bool reachable = false;
  // Every minimum-length path from a to b, each as a point sequence a..b.
  std::vector<std::vector<Point>> paths;
};

// Enumerates all shortest paths; throws BudgetError past max_paths.
ShortestPaths shortest_paths(const DigitalImage& X, const Point& a,
                             const Point& b, std::size_t max_paths = 10000);

// The shortest path when it is unique; nullopt when there are zero or
// several shortest paths.
std::optional<std::vector<Point>> unique_shortest_path(const DigitalImage& X,
                                                       const Point& a,
                                                       const Point& b);

// Bd_i(X): points of X with a c_i-neighbor in Z^n \ X.  i in {1, 2}.
// Only the finite c_i-neighborhood of each point is scanned.
PointSet boundary(const DigitalImage& X, int i);
PointSet interior(const DigitalImage& X, int i);

// Cartesian product of the factors under the generalized normal product
// adjacency NP_u of the factor adjacencies.
DigitalImage product_image(const std::vector<DigitalImage>& factors, int u);

}  // namespace dtk
