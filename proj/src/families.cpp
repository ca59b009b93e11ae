#include "dtk/families.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <string>

#include "dtk/errors.hpp"

namespace dtk {

namespace {

Point label(int i) { return Point{i}; }

DigitalImage explicit_image(int n_hint,
                            std::vector<std::pair<int, int>> edges) {
  PointSet pts;
  for (int i = 0; i < n_hint; ++i) pts.push_back(label(i));
  std::vector<std::pair<Point, Point>> es;
  for (auto [a, b] : edges) es.emplace_back(label(a), label(b));
  return DigitalImage(normalized(std::move(pts)),
                      AdjacencySpec::explicit_adj(std::move(es), 1));
}

}  // namespace

Point CycleImage::vertex(int i) const { return label(((i % n) + n) % n); }

Point WedgeImage::left_vertex(int i) const { return label(((i % m) + m) % m); }

Point WedgeImage::right_vertex(int i) const {
  int r = ((i % n) + n) % n;
  return r == 0 ? label(0) : label(m - 1 + r);
}

CycleImage cycle(int n) {
  if (n < 3) throw Error("cycle: at least 3 vertices required");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return CycleImage{n, explicit_image(n, std::move(edges))};
}

DigitalImage tree_from_edges(const std::vector<std::pair<int, int>>& edges) {
  std::set<int> labels;
  for (auto [a, b] : edges) {
    labels.insert(a);
    labels.insert(b);
  }
  if (edges.empty()) throw Error("tree_from_edges: at least one edge required");
  PointSet pts;
  for (int v : labels) pts.push_back(label(v));
  std::vector<std::pair<Point, Point>> es;
  for (auto [a, b] : edges) es.emplace_back(label(a), label(b));
  DigitalImage t(std::move(pts),
                 AdjacencySpec::explicit_adj(std::move(es), 1));
  if (static_cast<int>(t.edges().size()) != t.size() - 1 || !is_connected(t))
    throw Error("tree_from_edges: edges do not form a tree");
  return t;
}

DigitalImage complete_graph(int k) {
  if (k < 2) throw Error("complete_graph: at least 2 vertices required");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
  return explicit_image(k, std::move(edges));
}

WedgeImage wedge(int m, int n) {
  if (m <= 4 || n <= 4)
    throw Error("wedge: both cycles must have more than 4 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) edges.emplace_back(i, (i + 1) % m);
  auto right = [&](int i) { return i == 0 ? 0 : m - 1 + i; };
  for (int i = 0; i < n; ++i) edges.emplace_back(right(i), right((i + 1) % n));
  return WedgeImage{m, n, explicit_image(m + n - 1, std::move(edges))};
}

bool cycle_freezing_triple_valid(const CycleImage& c, int i, int j, int k) {
  const int n = c.n;
  if (n <= 4) return false;
  int a = ((i % n) + n) % n;
  int b = ((j % n) + n) % n;
  int d = ((k % n) + n) % n;
  if (a == b || a == d || b == d) return false;
  std::array<int, 3> pos{a, b, d};
  std::sort(pos.begin(), pos.end());
  std::array<int, 3> arcs{pos[1] - pos[0], pos[2] - pos[1],
                          n - (pos[2] - pos[0])};
  // each arc must be the unique shorter path between its endpoints
  return std::all_of(arcs.begin(), arcs.end(),
                     [n](int len) { return 2 * len < n; });
}

PointSet tree_leaves(const DigitalImage& t) {
  if (t.size() < 2) throw Error("tree_leaves: tree must have at least 2 points");
  if (static_cast<int>(t.edges().size()) != t.size() - 1 || !is_connected(t))
    throw Error("tree_leaves: image is not a tree");
  PointSet out;
  for (int i = 0; i < t.size(); ++i)
    if (t.neighbors_of(i).size() == 1) out.push_back(t.point(i));
  return out;
}

PointSet wedge_freezing_set(const WedgeImage& w, int i, int j, int k, int p) {
  if (!cycle_freezing_triple_valid(cycle(w.m), 0, i, j))
    throw Error("wedge_freezing_set: {0, i, j} is not a valid triple on the "
                "left cycle");
  if (!cycle_freezing_triple_valid(cycle(w.n), 0, k, p))
    throw Error("wedge_freezing_set: {0, k, p} is not a valid triple on the "
                "right cycle");
  return normalized(PointSet{w.left_vertex(i), w.left_vertex(j),
                             w.right_vertex(k), w.right_vertex(p)});
}

DigitalMap counterexample_wedge_map(const WedgeImage& w) {
  if (w.m != 6)
    throw Error("counterexample_wedge_map: left cycle must be C_6");
  std::vector<std::pair<Point, Point>> pairs;
  for (int t = 0; t < w.image.size(); ++t) {
    Point x = w.image.point(t);
    Point y = x;
    if (x == w.left_vertex(3)) y = w.left_vertex(0);
    else if (x == w.left_vertex(2)) y = w.left_vertex(1);
    else if (x == w.left_vertex(4)) y = w.left_vertex(5);
    pairs.emplace_back(x, y);
  }
  return DigitalMap::from_pairs(w.image, w.image, pairs);
}

bool leaf_necessity_check(const DigitalImage& t, const PointSet& a) {
  return is_subset(tree_leaves(t), a);
}

namespace {

// AHU canonical code of a free tree, rooted at its center (or at the pair
// of centers for bicentral trees), so isomorphic trees share one code.
std::string canonical_tree_code(int n,
                                const std::vector<std::pair<int, int>>& edges) {
  if (n == 1) return "()";
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (auto [a, b] : edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  std::vector<int> degree(static_cast<std::size_t>(n));
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    degree[static_cast<std::size_t>(v)] = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
    if (degree[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    remaining -= static_cast<int>(layer.size());
    for (int v : layer)
      for (int w : adj[static_cast<std::size_t>(v)])
        if (--degree[static_cast<std::size_t>(w)] == 1) next.push_back(w);
    layer = std::move(next);
  }

  std::function<std::string(int, int)> code = [&](int v, int parent) {
    std::vector<std::string> child;
    for (int w : adj[static_cast<std::size_t>(v)])
      if (w != parent) child.push_back(code(w, v));
    std::sort(child.begin(), child.end());
    std::string out = "(";
    for (const auto& c : child) out += c;
    return out + ")";
  };

  if (layer.size() == 1) return code(layer[0], -1);
  std::string a = code(layer[0], layer[1]);
  std::string b = code(layer[1], layer[0]);
  if (b < a) std::swap(a, b);
  return "[" + a + b + "]";
}

}  // namespace

std::vector<std::vector<std::pair<int, int>>> all_free_trees(int n) {
  if (n < 1) throw Error("all_free_trees: n must be positive");
  std::vector<std::vector<std::pair<int, int>>> current{{}};  // the 1-vertex tree
  for (int k = 2; k <= n; ++k) {
    std::vector<std::vector<std::pair<int, int>>> next;
    std::set<std::string> seen;
    for (const auto& t : current)
      for (int v = 0; v < k - 1; ++v) {
        auto grown = t;
        grown.emplace_back(v, k - 1);
        std::string c = canonical_tree_code(k, grown);
        if (seen.insert(c).second) next.push_back(std::move(grown));
      }
    current = std::move(next);
  }
  return current;
}

PlaneWedge plane_wedge_c6_c8() {
  std::vector<Point> left = {Point{0, 0},   Point{-1, 1},  Point{-2, 1},
                             Point{-3, 0},  Point{-2, -1}, Point{-1, -1}};
  std::vector<Point> right = {Point{0, 0},  Point{1, 1},  Point{2, 2},
                              Point{3, 1},  Point{4, 0},  Point{3, -1},
                              Point{2, -2}, Point{1, -1}};
  PointSet pts;
  for (const auto& p : left) pts.push_back(p);
  for (const auto& p : right) pts.push_back(p);
  DigitalImage img(normalized(std::move(pts)), AdjacencySpec::cu_adj(2, 2));
  return PlaneWedge{std::move(img), std::move(left), std::move(right)};
}

}  // namespace dtk
