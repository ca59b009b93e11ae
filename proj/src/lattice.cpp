#include "dtk/lattice.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "dtk/errors.hpp"

namespace dtk {

PointSet neighbors(const DigitalImage& X, const Point& x) {
  int i = X.index_of(x);
  if (i < 0) throw Error("neighbors: point " + x.str() + " is not in the image");
  PointSet out;
  for (int j : X.neighbors_of(i)) out.push_back(X.point(j));
  return out;
}

PointSet closed_neighborhood(const DigitalImage& X, const Point& x) {
  PointSet out = neighbors(X, x);
  out.push_back(x);
  return normalized(std::move(out));
}

namespace {

std::vector<int> component_labels(const DigitalImage& X, int* count) {
  std::vector<int> label(static_cast<std::size_t>(X.size()), -1);
  int c = 0;
  for (int s = 0; s < X.size(); ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0) continue;
    std::deque<int> queue{s};
    label[static_cast<std::size_t>(s)] = c;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : X.neighbors_of(v))
        if (label[static_cast<std::size_t>(w)] < 0) {
          label[static_cast<std::size_t>(w)] = c;
          queue.push_back(w);
        }
    }
    ++c;
  }
  *count = c;
  return label;
}

}  // namespace

bool is_connected(const DigitalImage& X) {
  int c = 0;
  component_labels(X, &c);
  return c == 1;
}

std::vector<PointSet> components(const DigitalImage& X) {
  int c = 0;
  auto label = component_labels(X, &c);
  std::vector<PointSet> out(static_cast<std::size_t>(c));
  for (int i = 0; i < X.size(); ++i)
    out[static_cast<std::size_t>(label[static_cast<std::size_t>(i)])].push_back(
        X.point(i));
  return out;  // points are visited in order, so each part is already sorted
}

bool subset_connected(const DigitalImage& X, const std::vector<int>& subset) {
  if (subset.empty()) return false;
  std::vector<char> in(static_cast<std::size_t>(X.size()), 0);
  for (int i : subset) in[static_cast<std::size_t>(i)] = 1;
  std::vector<char> seen(static_cast<std::size_t>(X.size()), 0);
  std::deque<int> queue{subset.front()};
  seen[static_cast<std::size_t>(subset.front())] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : X.neighbors_of(v))
      if (in[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        queue.push_back(w);
      }
  }
  return reached == subset.size();
}

bool connected_subsets(const DigitalImage& X, std::size_t max_count,
                       std::vector<std::vector<int>>* out) {
  out->clear();
  const int n = X.size();
  // Each connected subset is generated exactly once, rooted at its least
  // vertex: the root loop forbids smaller vertices, and within a level a
  // vertex explored earlier is forbidden for the later branches.
  std::vector<int> current;
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  bool complete = true;

  std::function<void(std::vector<int>, std::vector<char>)> grow =
      [&](std::vector<int> frontier, std::vector<char> banned) {
        if (!complete) return;
        if (out->size() >= max_count) {
          complete = false;
          return;
        }
        std::vector<int> sorted = current;
        std::sort(sorted.begin(), sorted.end());
        out->push_back(std::move(sorted));
        for (std::size_t fi = 0; fi < frontier.size(); ++fi) {
          int v = frontier[fi];
          if (in[static_cast<std::size_t>(v)] || banned[static_cast<std::size_t>(v)])
            continue;
          in[static_cast<std::size_t>(v)] = 1;
          current.push_back(v);
          std::vector<int> next(frontier.begin() + static_cast<long>(fi) + 1,
                                frontier.end());
          for (int w : X.neighbors_of(v))
            if (!in[static_cast<std::size_t>(w)] &&
                !banned[static_cast<std::size_t>(w)])
              next.push_back(w);
          grow(next, banned);
          current.pop_back();
          in[static_cast<std::size_t>(v)] = 0;
          banned[static_cast<std::size_t>(v)] = 1;
        }
      };

  for (int root = 0; root < n && complete; ++root) {
    std::vector<char> banned(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < root; ++v) banned[static_cast<std::size_t>(v)] = 1;
    in[static_cast<std::size_t>(root)] = 1;
    current.push_back(root);
    std::vector<int> frontier;
    for (int w : X.neighbors_of(root))
      if (!banned[static_cast<std::size_t>(w)]) frontier.push_back(w);
    grow(frontier, banned);
    current.pop_back();
    in[static_cast<std::size_t>(root)] = 0;
  }
  return complete;
}

ShortestPaths shortest_paths(const DigitalImage& X, const Point& a,
                             const Point& b, std::size_t max_paths) {
  int ia = X.index_of(a);
  int ib = X.index_of(b);
  if (ia < 0 || ib < 0) throw Error("shortest_paths: endpoint not in the image");
  std::vector<int> dist(static_cast<std::size_t>(X.size()), -1);
  dist[static_cast<std::size_t>(ia)] = 0;
  std::deque<int> queue{ia};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : X.neighbors_of(v))
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        queue.push_back(w);
      }
  }
  ShortestPaths result;
  if (dist[static_cast<std::size_t>(ib)] < 0) return result;
  result.reachable = true;

  // Walk backwards from b along strictly decreasing BFS distance.
  std::vector<int> trail{ib};
  std::function<void()> walk = [&]() {
    int v = trail.back();
    if (v == ia) {
      if (result.paths.size() >= max_paths)
        throw BudgetError("shortest_paths: more than " +
                          std::to_string(max_paths) + " shortest paths");
      std::vector<Point> path;
      for (auto it = trail.rbegin(); it != trail.rend(); ++it)
        path.push_back(X.point(*it));
      result.paths.push_back(std::move(path));
      return;
    }
    for (int w : X.neighbors_of(v))
      if (dist[static_cast<std::size_t>(w)] ==
          dist[static_cast<std::size_t>(v)] - 1) {
        trail.push_back(w);
        walk();
        trail.pop_back();
      }
  };
  walk();
  return result;
}

std::optional<std::vector<Point>> unique_shortest_path(const DigitalImage& X,
                                                       const Point& a,
                                                       const Point& b) {
  ShortestPaths sp = shortest_paths(X, a, b);
  if (!sp.reachable || sp.paths.size() != 1) return std::nullopt;
  return sp.paths.front();
}

PointSet boundary(const DigitalImage& X, int i) {
  if (!X.adjacency().is_lattice())
    throw AbstractImageError("boundary: image has abstract adjacency");
  if (i != 1 && i != 2) throw Error("boundary: i must be 1 or 2");
  const int n = X.dim();
  // Enumerate c_i offsets: nonzero vectors in {-1,0,1}^n with <= i nonzero
  // entries.  The existential over Z^n \ X only ever inspects these.
  std::vector<Point> offsets;
  std::vector<int> off(static_cast<std::size_t>(n), -1);
  while (true) {
    int nonzero = 0;
    for (int v : off) nonzero += (v != 0);
    if (nonzero >= 1 && nonzero <= i) offsets.emplace_back(Point(off));
    int k = 0;
    for (; k < n; ++k) {
      if (off[static_cast<std::size_t>(k)] < 1) {
        ++off[static_cast<std::size_t>(k)];
        break;
      }
      off[static_cast<std::size_t>(k)] = -1;
    }
    if (k == n) break;
  }
  PointSet bd;
  for (const auto& x : X.points()) {
    for (const auto& d : offsets) {
      std::vector<int> cs = x.coords;
      for (int k = 0; k < n; ++k) cs[static_cast<std::size_t>(k)] += d[k];
      if (!X.contains(Point(cs))) {
        bd.push_back(x);
        break;
      }
    }
  }
  return bd;
}

PointSet interior(const DigitalImage& X, int i) {
  return set_difference(X.points(), boundary(X, i));
}

DigitalImage product_image(const std::vector<DigitalImage>& factors, int u) {
  if (factors.empty()) throw Error("product_image: needs at least one factor");
  if (u < 1 || u > static_cast<int>(factors.size()))
    throw DimensionError("product_image: 1 <= u <= v required");
  PointSet pts{Point{}};
  pts.front().coords.clear();
  for (const auto& f : factors) {
    PointSet next;
    for (const auto& p : pts)
      for (const auto& q : f.points()) next.push_back(concat(p, q));
    pts = std::move(next);
  }
  std::vector<AdjacencySpec> fadjs;
  for (const auto& f : factors) fadjs.push_back(f.adjacency());
  return DigitalImage(std::move(pts), AdjacencySpec::np_adj(u, std::move(fadjs)));
}

}  // namespace dtk
