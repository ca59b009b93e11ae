#include "dtk/geometry.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>

#include "dtk/errors.hpp"

namespace dtk {

namespace {

// Unit directions counterclockwise from east; even indices are axis moves.
constexpr std::array<std::array<int, 2>, 8> kDirs = {
    {{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}}};

Point pt(int x, int y) { return Point{x, y}; }

Point shift(const Point& p, int dx, int dy) {
  return pt(p.x() + dx, p.y() + dy);
}

Point step(const Point& p, int dir) {
  return shift(p, kDirs[static_cast<std::size_t>(dir)][0],
               kDirs[static_cast<std::size_t>(dir)][1]);
}

int dir_index(int dx, int dy) {
  for (int d = 0; d < 8; ++d)
    if (kDirs[static_cast<std::size_t>(d)][0] == dx &&
        kDirs[static_cast<std::size_t>(d)][1] == dy)
      return d;
  throw Error("geometry: not a unit direction");
}

bool axis_dir(int d) { return d % 2 == 0; }

void require_plane(const PointSet& pts, const char* what) {
  for (const auto& p : pts)
    if (p.dim() != 2)
      throw DimensionError(std::string(what) + ": requires points of Z^2");
}

// Follows the contour between the foreground and the background region
// containing `back`, scanning the Moore neighborhood clockwise.  Returns the
// cyclic part of the walk (the trace enters a cycle because its state space
// is finite).
std::vector<Point> moore_trace(const PointSet& fg, const Point& start,
                               const Point& back) {
  std::vector<Point> seq;
  std::map<std::pair<Point, Point>, std::size_t> seen;
  Point p = start;
  Point b = back;
  while (true) {
    auto key = std::make_pair(p, b);
    auto it = seen.find(key);
    if (it != seen.end())
      return std::vector<Point>(seq.begin() + static_cast<long>(it->second),
                                seq.end());
    seen.emplace(key, seq.size());
    seq.push_back(p);
    int d = dir_index(b.x() - p.x(), b.y() - p.y());
    bool moved = false;
    for (int k = 1; k <= 8; ++k) {
      int nd = ((d - k) % 8 + 8) % 8;
      Point q = step(p, nd);
      if (contains(fg, q)) {
        b = step(p, ((d - (k - 1)) % 8 + 8) % 8);
        p = q;
        moved = true;
        break;
      }
    }
    if (!moved) return seq;  // isolated point
  }
}

// Complement components of a planar point set, computed in its bounding box
// inflated by 1.  A component is infinite iff it meets the frame; the frame
// is itself c_1-connected, so there is exactly one infinite component.
struct ComplementSplit {
  std::vector<PointSet> bounded;
  PointSet exterior_in_window;  // the infinite component clipped to the window
};

ComplementSplit complement_split(const PointSet& s, int complement_u) {
  int x0 = s.front().x(), x1 = x0, y0 = s.front().y(), y1 = y0;
  for (const auto& p : s) {
    x0 = std::min(x0, p.x());
    x1 = std::max(x1, p.x());
    y0 = std::min(y0, p.y());
    y1 = std::max(y1, p.y());
  }
  --x0, --y0, ++x1, ++y1;
  PointSet comp;
  for (int x = x0; x <= x1; ++x)
    for (int y = y0; y <= y1; ++y)
      if (!contains(s, pt(x, y))) comp.push_back(pt(x, y));
  DigitalImage img(normalized(std::move(comp)),
                   AdjacencySpec::cu_adj(complement_u, 2));
  ComplementSplit out;
  for (auto& c : components(img)) {
    bool frame = false;
    for (const auto& p : c)
      if (p.x() == x0 || p.x() == x1 || p.y() == y0 || p.y() == y1) {
        frame = true;
        break;
      }
    if (frame)
      out.exterior_in_window = set_union(out.exterior_in_window, c);
    else
      out.bounded.push_back(std::move(c));
  }
  return out;
}

// Maximal straight runs of a closed curve, with the interior angle at each
// vertex.  vertex_dirs holds, per vertex, the direction indices pointing
// from the vertex along its two incident segments.
struct CurveStructure {
  std::vector<Segment> segments;
  std::vector<std::pair<Point, int>> angles;
  std::vector<std::array<int, 2>> vertex_dirs;
};

Orientation run_orientation(int d) {
  switch (d % 4) {
    case 0: return Orientation::horizontal;
    case 2: return Orientation::vertical;
    case 1: return Orientation::slant_up;
    default: return Orientation::slant_down;
  }
}

CurveStructure decompose_curve(const ClosedCurve& S) {
  const int m = S.size();
  if (m < 3) throw NotADiskError("curve too short to decompose into sides");
  std::vector<int> dirs(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    const Point& a = S.at(k);
    const Point& b = S.at(k + 1);
    dirs[static_cast<std::size_t>(k)] = dir_index(b.x() - a.x(), b.y() - a.y());
  }
  long long area2 = 0;
  for (int k = 0; k < m; ++k)
    area2 += static_cast<long long>(S.at(k).x()) * S.at(k + 1).y() -
             static_cast<long long>(S.at(k + 1).x()) * S.at(k).y();
  int orient = area2 > 0 ? 1 : -1;

  std::vector<int> vertices;
  for (int k = 0; k < m; ++k) {
    int din = dirs[static_cast<std::size_t>((k - 1 + m) % m)];
    int dout = dirs[static_cast<std::size_t>(k)];
    if (din == dout) continue;
    if ((dout - din + 8) % 8 == 4)
      throw NotADiskError("contour reverses direction at " + S.at(k).str());
    vertices.push_back(k);
  }
  if (vertices.empty())
    throw NotADiskError("contour has no corners");

  CurveStructure cs;
  for (std::size_t vi = 0; vi < vertices.size(); ++vi) {
    int k = vertices[vi];
    int next = vertices[(vi + 1) % vertices.size()];
    Segment seg;
    seg.orientation = run_orientation(dirs[static_cast<std::size_t>(k)]);
    int len = ((next - k) % m + m) % m;
    for (int t = 0; t <= len; ++t) seg.points.push_back(S.at(k + t));
    cs.segments.push_back(std::move(seg));

    int din = dirs[static_cast<std::size_t>((k - 1 + m) % m)];
    int dout = dirs[static_cast<std::size_t>(k)];
    int turn = (dout - din + 8) % 8;
    int s = turn <= 3 ? turn : turn - 8;
    cs.angles.emplace_back(S.at(k), 180 - 45 * s * orient);
    cs.vertex_dirs.push_back({(din + 4) % 8, dout});
  }
  return cs;
}

struct ThicknessEval {
  bool ok = true;
  PointSet failures;
};

ThicknessEval evaluate_thickness(const CurveStructure& cs,
                                 const PointSet& interior,
                                 const PointSet& xpts) {
  ThicknessEval ev;
  auto fail = [&](const Point& p) {
    ev.ok = false;
    ev.failures.push_back(p);
  };

  for (const auto& seg : cs.segments) {
    if (!seg.slanted() || seg.points.size() < 3) continue;
    int dx = seg.points[1].x() - seg.points[0].x();
    int dy = seg.points[1].y() - seg.points[0].y();
    for (std::size_t i = 1; i + 1 < seg.points.size(); ++i) {
      const Point& p = seg.points[i];
      // witness: a diagonal neighbor off the segment's own line
      if (!contains(xpts, shift(p, dx, -dy)) &&
          !contains(xpts, shift(p, -dx, dy)))
        fail(p);
    }
  }

  for (std::size_t vi = 0; vi < cs.angles.size(); ++vi) {
    const Point& p = cs.angles[vi].first;
    int angle = cs.angles[vi].second;
    int u1 = cs.vertex_dirs[vi][0];
    int u2 = cs.vertex_dirs[vi][1];
    if (angle == 90) {
      if (axis_dir(u1) != axis_dir(u2))
        throw Error("geometry: inconsistent 90-degree corner");
      auto v1 = kDirs[static_cast<std::size_t>(u1)];
      auto v2 = kDirs[static_cast<std::size_t>(u2)];
      Point q = axis_dir(u1) ? shift(p, v1[0] + v2[0], v1[1] + v2[1])
                             : shift(p, (v1[0] + v2[0]) / 2, (v1[1] + v2[1]) / 2);
      if (!contains(interior, q)) fail(p);
    } else if (angle == 135) {
      int base;
      if ((u2 - u1 + 8) % 8 == 3)
        base = u1;
      else if ((u1 - u2 + 8) % 8 == 3)
        base = u2;
      else
        throw Error("geometry: inconsistent 135-degree corner");
      if (!contains(xpts, step(p, (base + 1) % 8)) ||
          !contains(xpts, step(p, (base + 2) % 8)))
        fail(p);
    }
  }
  ev.failures = normalized(std::move(ev.failures));
  return ev;
}

long long cross(const Point& o, const Point& a, const Point& b) {
  return static_cast<long long>(a.x() - o.x()) * (b.y() - o.y()) -
         static_cast<long long>(a.y() - o.y()) * (b.x() - o.x());
}

bool sets_c2_adjacent_or_meeting(const PointSet& a, const PointSet& b) {
  AdjacencySpec c2 = AdjacencySpec::cu_adj(2, 2);
  for (const auto& p : a)
    for (const auto& q : b)
      if (p == q || adjacent(p, q, c2)) return true;
  return false;
}

std::vector<Point> trace_contour_or_throw(const PointSet& fg,
                                          const Point& start, const Point& back,
                                          const char* what) {
  std::vector<Point> seq = moore_trace(fg, start, back);
  if (seq.size() < 2)
    throw NotADiskError(std::string(what) + ": boundary is degenerate");
  std::vector<Point> sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw NotADiskError(std::string(what) + ": contour revisits a point");
  return seq;
}

// Depth-first search for a cyclic ordering of `pts` with consecutive points
// c_2-adjacent.
bool hamiltonian_c2_cycle(const PointSet& pts, std::vector<Point>* out) {
  const int n = static_cast<int>(pts.size());
  if (n < 3) return false;
  AdjacencySpec c2 = AdjacencySpec::cu_adj(2, 2);
  std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && adjacent(pts[static_cast<std::size_t>(i)],
                             pts[static_cast<std::size_t>(j)], c2))
        nbrs[static_cast<std::size_t>(i)].push_back(j);
  std::vector<int> path{0};
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  used[0] = 1;
  std::function<bool()> dfs = [&]() {
    if (static_cast<int>(path.size()) == n)
      return std::binary_search(nbrs[0].begin(), nbrs[0].end(), path.back());
    for (int w : nbrs[static_cast<std::size_t>(path.back())]) {
      if (used[static_cast<std::size_t>(w)]) continue;
      used[static_cast<std::size_t>(w)] = 1;
      path.push_back(w);
      if (dfs()) return true;
      path.pop_back();
      used[static_cast<std::size_t>(w)] = 0;
    }
    return false;
  };
  if (!dfs()) return false;
  out->clear();
  for (int i : path) out->push_back(pts[static_cast<std::size_t>(i)]);
  return true;
}

}  // namespace

std::string orientation_name(Orientation o) {
  switch (o) {
    case Orientation::horizontal: return "horizontal";
    case Orientation::vertical: return "vertical";
    case Orientation::slant_up: return "slant(+1)";
    case Orientation::slant_down: return "slant(-1)";
  }
  return "?";
}

std::optional<Segment> as_digital_segment(const std::vector<Point>& pts) {
  if (pts.empty()) return std::nullopt;
  require_plane(PointSet(pts.begin(), pts.end()), "as_digital_segment");
  Segment seg;
  seg.points = pts;
  if (pts.size() == 1) {
    seg.orientation = Orientation::horizontal;
    return seg;
  }
  int dx = pts[1].x() - pts[0].x();
  int dy = pts[1].y() - pts[0].y();
  if (std::abs(dx) > 1 || std::abs(dy) > 1 || (dx == 0 && dy == 0))
    return std::nullopt;
  if (dx != 0 && dy != 0 && std::abs(dx) != std::abs(dy)) return std::nullopt;
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (pts[i].x() - pts[i - 1].x() != dx || pts[i].y() - pts[i - 1].y() != dy)
      return std::nullopt;
  seg.orientation = run_orientation(dir_index(dx, dy));
  return seg;
}

ClosedCurve ClosedCurve::from_sequence(std::vector<Point> seq, int u) {
  if (!seq.empty() && seq.size() >= 2 && seq.front() == seq.back())
    seq.pop_back();
  if (!is_closed_curve(seq, u))
    throw Error("closed curve: sequence is not a c_" + std::to_string(u) +
                " closed curve");
  ClosedCurve c;
  c.points = std::move(seq);
  c.u = u;
  return c;
}

PointSet ClosedCurve::point_set() const {
  return normalized(PointSet(points.begin(), points.end()));
}

bool is_closed_curve(const std::vector<Point>& seq, int u) {
  if (u != 1 && u != 2) throw Error("closed curve: adjacency must be c1 or c2");
  std::vector<Point> s = seq;
  if (s.size() >= 2 && s.front() == s.back()) s.pop_back();
  if (s.size() < 2) return false;
  for (const auto& p : s)
    if (p.dim() != 2) return false;
  AdjacencySpec adj = AdjacencySpec::cu_adj(u, 2);
  const std::size_t m = s.size();
  for (std::size_t i = 0; i < m; ++i)
    if (!adjacent(s[i], s[(i + 1) % m], adj)) return false;
  std::vector<Point> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool is_simple_closed_curve(const std::vector<Point>& seq, int u) {
  if (!is_closed_curve(seq, u)) return false;
  std::vector<Point> s = seq;
  if (s.size() >= 2 && s.front() == s.back()) s.pop_back();
  const std::size_t m = s.size();
  if ((u == 1 && m < 8) || (u == 2 && m < 4)) return false;
  AdjacencySpec adj = AdjacencySpec::cu_adj(u, 2);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      std::size_t gap = std::min(j - i, m - (j - i));
      if (gap > 1 && adjacent(s[i], s[j], adj)) return false;
    }
  return true;
}

JordanResult jordan_decompose(const ClosedCurve& S) {
  if (S.points.empty()) throw Error("jordan_decompose: empty curve");
  require_plane(S.point_set(), "jordan_decompose");
  JordanResult r;
  r.decomposition.complement_u = 3 - S.u;
  ComplementSplit split = complement_split(S.point_set(), 3 - S.u);
  r.bounded_components = split.bounded;
  if (split.bounded.size() == 1) {
    r.ok = true;
    r.decomposition.interior = split.bounded.front();
    r.decomposition.exterior_marker = split.exterior_in_window.front();
  } else if (split.bounded.empty()) {
    r.diagnosis = "not separating: the complement has no bounded component";
  } else {
    r.diagnosis = "multiple bounded components: " +
                  std::to_string(split.bounded.size());
  }
  return r;
}

bool is_bounding_curve(const ClosedCurve& S, const DigitalImage& D) {
  if (D.dim() != 2)
    throw DimensionError("is_bounding_curve: image must lie in Z^2");
  if (!is_closed_curve(S.points, 2)) return false;
  ClosedCurve c2curve = S;
  c2curve.u = 2;
  JordanResult jr = jordan_decompose(c2curve);
  if (!jr.ok) return false;
  return set_union(c2curve.point_set(), jr.decomposition.interior) ==
         D.points();
}

ClosedCurve trace_bounding_curve(const DigitalImage& D) {
  if (D.dim() != 2)
    throw DimensionError("trace_bounding_curve: image must lie in Z^2");
  const PointSet& fg = D.points();
  if (fg.size() < 2) throw NotADiskError("image too small to bound");
  {
    DigitalImage c2img(fg, AdjacencySpec::cu_adj(2, 2));
    if (!is_connected(c2img))
      throw NotADiskError("image is not c2-connected");
  }
  const Point& start = fg.front();
  std::vector<Point> seq =
      trace_contour_or_throw(fg, start, shift(start, -1, 0), "outer contour");
  ClosedCurve curve = ClosedCurve::from_sequence(seq, 2);
  JordanResult jr = jordan_decompose(curve);
  if (jr.bounded_components.size() > 1) {
    std::string msg = "not a disk: complement of the contour has " +
                      std::to_string(jr.bounded_components.size()) +
                      " bounded components:";
    for (const auto& c : jr.bounded_components) msg += " " + to_string(c);
    throw NotADiskError(msg);
  }
  PointSet covered = set_union(curve.point_set(),
                               jr.ok ? jr.decomposition.interior : PointSet{});
  if (covered != fg)
    throw NotADiskError("not a disk: contour interior does not match the "
                        "image (holes present)");
  return curve;
}

MinimizedCurve minimize_bounding_curve(const ClosedCurve& S,
                                       const DigitalImage& D, bool certify) {
  if (!is_bounding_curve(S, D))
    throw HypothesisError("minimize_bounding_curve: input does not bound the image");
  std::vector<Point> cur = S.points;
  bool improved = true;
  while (improved) {
    improved = false;
    const int m = static_cast<int>(cur.size());
    if (m <= 4) break;
    for (int k = 0; k < m; ++k) {
      const Point& a = cur[static_cast<std::size_t>((k - 1 + m) % m)];
      const Point& p = cur[static_cast<std::size_t>(k)];
      const Point& v = cur[static_cast<std::size_t>((k + 1) % m)];
      int d1 = dir_index(p.x() - a.x(), p.y() - a.y());
      int d2 = dir_index(v.x() - p.x(), v.y() - p.y());
      if (!axis_dir(d1) || !axis_dir(d2) || d1 == d2 || (d1 + 4) % 8 == d2)
        continue;
      std::vector<Point> candidate;
      for (int t = 0; t < m; ++t)
        if (t != k) candidate.push_back(cur[static_cast<std::size_t>(t)]);
      if (!is_closed_curve(candidate, 2)) continue;
      if (is_bounding_curve(ClosedCurve::from_sequence(candidate, 2), D)) {
        cur = std::move(candidate);
        improved = true;
        break;
      }
    }
  }
  MinimizedCurve out{ClosedCurve::from_sequence(cur, 2), false};
  if (!certify) return out;

  PointSet bd2 = boundary(D, 2);
  if (bd2.size() > 20)
    throw BudgetError("minimize_bounding_curve: certification limited to "
                      "images with at most 20 boundary points");
  // Every bounding curve of D contains Bd_1(D): a point of Bd_1 omitted from
  // a curve would lie in Int while being c1-adjacent to Ext.
  PointSet required = boundary(D, 1);
  PointSet optional_pts = set_difference(bd2, required);
  std::size_t best = cur.size();
  for (std::uint32_t mask = 0;
       mask < (1u << optional_pts.size()); ++mask) {
    PointSet c = required;
    for (std::size_t i = 0; i < optional_pts.size(); ++i)
      if (mask & (1u << i)) c.push_back(optional_pts[i]);
    c = normalized(std::move(c));
    if (c.size() >= best) continue;
    ComplementSplit split = complement_split(c, 1);
    if (split.bounded.size() != 1) continue;
    if (set_union(c, split.bounded.front()) != D.points()) continue;
    std::vector<Point> cyc;
    if (!hamiltonian_c2_cycle(c, &cyc)) continue;
    ClosedCurve smaller = ClosedCurve::from_sequence(cyc, 2);
    if (is_bounding_curve(smaller, D)) {
      out.curve = smaller;
      best = c.size();
    }
  }
  out.certified = true;
  return out;
}

std::vector<ClosedCurve> bounding_curve_set(const DigitalImage& X) {
  if (X.dim() != 2)
    throw DimensionError("bounding_curve_set: image must lie in Z^2");
  if (!X.adjacency().is_lattice())
    throw AbstractImageError("bounding_curve_set: lattice image required");
  if (!is_connected(X))
    throw Error("bounding_curve_set: image must be connected");
  const PointSet& fg = X.points();
  if (fg.size() < 2)
    throw Error("bounding_curve_set: image too small to bound");

  std::vector<Point> outer_seq = trace_contour_or_throw(
      fg, fg.front(), shift(fg.front(), -1, 0), "outer contour");
  ClosedCurve s1 = ClosedCurve::from_sequence(outer_seq, 2);
  JordanResult jr1 = jordan_decompose(s1);
  if (jr1.bounded_components.size() > 1)
    throw Error("bounding_curve_set: outer curve does not bound (" +
                std::to_string(jr1.bounded_components.size()) +
                " bounded complement components)");
  PointSet int1 = jr1.ok ? jr1.decomposition.interior : PointSet{};
  if (!is_subset(fg, set_union(s1.point_set(), int1)))
    throw Error("bounding_curve_set: image is not inside its outer curve");

  ComplementSplit holes_split = complement_split(fg, 1);
  std::vector<ClosedCurve> curves{s1};
  std::vector<PointSet> interiors;
  for (const auto& hole : holes_split.bounded) {
    const Point& h = hole.back();  // lexicographically greatest hole point
    Point start = shift(h, 1, 0);  // east neighbor, necessarily foreground
    std::vector<Point> seq =
        trace_contour_or_throw(fg, start, h, "hole contour");
    ClosedCurve sj = ClosedCurve::from_sequence(seq, 2);
    JordanResult jrj = jordan_decompose(sj);
    if (!jrj.ok)
      throw Error("bounding_curve_set: curve around hole " + to_string(hole) +
                  " does not bound a disk");
    curves.push_back(sj);
    interiors.push_back(jrj.decomposition.interior);
  }

  for (std::size_t i = 0; i < curves.size(); ++i)
    for (std::size_t j = i + 1; j < curves.size(); ++j)
      if (!set_intersection(curves[i].point_set(), curves[j].point_set())
               .empty())
        throw Error("bounding_curve_set: bounding curves are not pairwise "
                    "disjoint");

  // Separation: the exterior and each hole interior must be mutually
  // non-adjacent regions of the complement.
  std::vector<PointSet> pieces{holes_split.exterior_in_window};
  pieces.insert(pieces.end(), interiors.begin(), interiors.end());
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (std::size_t j = i + 1; j < pieces.size(); ++j)
      if (sets_c2_adjacent_or_meeting(pieces[i], pieces[j]))
        throw Error(i == 0 ? "bounding_curve_set: a hole touches the outer "
                             "boundary"
                           : "bounding_curve_set: two holes touch");

  PointSet expected = holes_split.exterior_in_window;
  for (const auto& in : interiors) expected = set_union(expected, in);
  ComplementSplit cover = complement_split(fg, 1);
  PointSet background = cover.exterior_in_window;
  for (const auto& b : cover.bounded) background = set_union(background, b);
  if (background != expected)
    throw Error("bounding_curve_set: curves do not account for the whole "
                "complement");
  return curves;
}

std::vector<Point> convex_hull_vertices(const PointSet& pts) {
  require_plane(pts, "convex_hull_vertices");
  std::vector<Point> p(pts.begin(), pts.end());
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  if (p.size() <= 2) return p;
  std::vector<Point> hull;
  // lower then upper chain; strictly convex turns only, so collinear
  // boundary points are dropped
  for (int pass = 0; pass < 2; ++pass) {
    std::size_t base = hull.size();
    for (const auto& q : p) {
      while (hull.size() >= base + 2 &&
             cross(hull[hull.size() - 2], hull[hull.size() - 1], q) <= 0)
        hull.pop_back();
      hull.push_back(q);
    }
    hull.pop_back();
    std::reverse(p.begin(), p.end());
  }
  return hull;
}

DiskAnalysis analyze_disk(const DigitalImage& D) {
  DiskAnalysis a{D};
  a.bounding_curve = trace_bounding_curve(D);
  JordanResult jr = jordan_decompose(a.bounding_curve);
  if (jr.ok) a.interior = jr.decomposition.interior;
  CurveStructure cs = decompose_curve(a.bounding_curve);
  a.maximal_segments = cs.segments;
  a.angles = cs.angles;

  ThicknessEval ev = evaluate_thickness(cs, a.interior, D.points());
  a.thick = ev.ok;
  a.thick_failures = ev.failures;
  if (!a.thick && jr.ok) {
    // Thickness quantifies over some bounding curve; a minimal curve can
    // succeed where the traced one fails.
    MinimizedCurve mc = minimize_bounding_curve(a.bounding_curve, D, false);
    if (!(mc.curve == a.bounding_curve)) {
      JordanResult jrm = jordan_decompose(mc.curve);
      ThicknessEval evm = evaluate_thickness(
          decompose_curve(mc.curve), jrm.decomposition.interior, D.points());
      if (evm.ok) {
        a.thick = true;
        a.thick_failures.clear();
      }
    }
  }

  a.hull_vertices = convex_hull_vertices(D.points());
  PointSet curve_vertices;
  for (const auto& [v, angle] : a.angles) curve_vertices.push_back(v);
  curve_vertices = normalized(std::move(curve_vertices));
  PointSet hull_set(a.hull_vertices.begin(), a.hull_vertices.end());
  a.convex = curve_vertices == normalized(std::move(hull_set));
  return a;
}

PointSet construct_freezing_bd1(const DigitalImage& X, int u) {
  if (u < 1 || u > X.dim())
    throw DimensionError("construct_freezing_bd1: 1 <= u <= n required");
  return boundary(X, 1);
}

PointSet construct_corner_freezing(const DigitalImage& box) {
  const PointSet& pts = box.points();
  const int n = box.dim();
  std::vector<int> lo(static_cast<std::size_t>(n));
  std::vector<int> hi(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) {
    lo[static_cast<std::size_t>(c)] = hi[static_cast<std::size_t>(c)] =
        pts.front()[c];
    for (const auto& p : pts) {
      lo[static_cast<std::size_t>(c)] = std::min(lo[static_cast<std::size_t>(c)], p[c]);
      hi[static_cast<std::size_t>(c)] = std::max(hi[static_cast<std::size_t>(c)], p[c]);
    }
    if (hi[static_cast<std::size_t>(c)] == lo[static_cast<std::size_t>(c)])
      throw Error("construct_corner_freezing: box is degenerate in axis " +
                  std::to_string(c));
  }
  long long volume = 1;
  for (int c = 0; c < n; ++c)
    volume *= hi[static_cast<std::size_t>(c)] - lo[static_cast<std::size_t>(c)] + 1;
  if (volume != static_cast<long long>(pts.size()))
    throw Error("construct_corner_freezing: image is not a full box");
  PointSet corners;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> cs(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c)
      cs[static_cast<std::size_t>(c)] = (mask & (1 << c))
                                            ? hi[static_cast<std::size_t>(c)]
                                            : lo[static_cast<std::size_t>(c)];
    corners.push_back(Point(cs));
  }
  return normalized(std::move(corners));
}

namespace {

PointSet freezing_from_segments(const std::vector<Segment>& segments,
                                bool endpoints_of_axis) {
  PointSet out;
  for (const auto& seg : segments) {
    bool take_endpoints = seg.axis_parallel() == endpoints_of_axis;
    if (take_endpoints) {
      out.push_back(seg.points.front());
      out.push_back(seg.points.back());
    } else {
      for (const auto& p : seg.points) out.push_back(p);
    }
  }
  return normalized(std::move(out));
}

}  // namespace

PointSet construct_freezing_c1(const DigitalImage& D) {
  DiskAnalysis a = analyze_disk(D);
  if (!a.thick || !a.convex)
    throw HypothesisError("construct_freezing_c1: requires a thick convex disk");
  return freezing_from_segments(a.maximal_segments, true);
}

PointSet construct_freezing_c2(const DigitalImage& D, bool assume_minimal) {
  DiskAnalysis a = analyze_disk(D);
  if (!a.thick || !a.convex)
    throw HypothesisError("construct_freezing_c2: requires a thick convex disk");
  MinimizedCurve mc;
  try {
    mc = minimize_bounding_curve(a.bounding_curve, D, true);
  } catch (const BudgetError&) {
    if (!assume_minimal)
      throw Error("construct_freezing_c2: the bounding curve cannot be "
                  "certified minimal; pass assume-minimal to proceed");
    mc = minimize_bounding_curve(a.bounding_curve, D, false);
  }
  return freezing_from_segments(decompose_curve(mc.curve).segments, false);
}

namespace {

PointSet union_construction(const DigitalImage& X,
                            const std::vector<DigitalImage>& disks,
                            const std::function<PointSet(const DigitalImage&)>&
                                per_disk) {
  if (X.dim() != 2)
    throw DimensionError("freezing union: image must lie in Z^2");
  PointSet covered;
  PointSet out;
  for (const auto& v : disks) {
    if (!is_subset(v.points(), X.points()))
      throw Error("freezing union: a disk is not contained in the image");
    covered = set_union(covered, v.points());
    out = set_union(out, per_disk(v));
  }
  return set_union(out, set_difference(X.points(), covered));
}

}  // namespace

PointSet construct_freezing_c1_union(const DigitalImage& X,
                                     const std::vector<DigitalImage>& disks) {
  return union_construction(
      X, disks, [](const DigitalImage& v) { return construct_freezing_c1(v); });
}

PointSet construct_freezing_c2_union(const DigitalImage& X,
                                     const std::vector<DigitalImage>& disks,
                                     bool assume_minimal) {
  return union_construction(X, disks, [&](const DigitalImage& v) {
    return construct_freezing_c2(v, assume_minimal);
  });
}

bool corner_necessity_check(const DigitalImage& X, const PointSet& A) {
  ClosedCurve traced = trace_bounding_curve(X);
  MinimizedCurve mc;
  if (is_bounding_curve(traced, X)) {
    try {
      mc = minimize_bounding_curve(traced, X, true);
    } catch (const BudgetError&) {
      mc = minimize_bounding_curve(traced, X, false);
    }
  } else {
    mc.curve = traced;  // thin image; the contour is the only candidate
  }
  JordanResult jr = jordan_decompose(mc.curve);
  PointSet interior = jr.ok ? jr.decomposition.interior : PointSet{};
  CurveStructure cs = decompose_curve(mc.curve);
  for (std::size_t vi = 0; vi < cs.angles.size(); ++vi) {
    if (cs.angles[vi].second != 90) continue;
    int u1 = cs.vertex_dirs[vi][0];
    int u2 = cs.vertex_dirs[vi][1];
    if (!axis_dir(u1) || !axis_dir(u2)) continue;
    const Point& p = cs.angles[vi].first;
    auto v1 = kDirs[static_cast<std::size_t>(u1)];
    auto v2 = kDirs[static_cast<std::size_t>(u2)];
    if (!contains(interior, shift(p, v1[0] + v2[0], v1[1] + v2[1])))
      continue;  // not 90-thick here; no necessity
    if (!contains(A, p)) return false;
  }
  return true;
}

}  // namespace dtk
