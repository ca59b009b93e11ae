#include "dtk/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>

#include "dtk/errors.hpp"

namespace dtk {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

bool is_blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

PointSet parse_grid(const std::string& text) {
  auto lines = split_lines(text);
  // line numbers are 1-based over the original file
  int first = 0;
  int last = static_cast<int>(lines.size());
  while (first < last && is_blank(lines[static_cast<std::size_t>(first)])) ++first;
  while (last > first && is_blank(lines[static_cast<std::size_t>(last - 1)])) --last;
  if (first == last) throw ParseError("empty grid", 1);

  const int rows = last - first;
  PointSet pts;
  for (int r = 0; r < rows; ++r) {
    const std::string& line = lines[static_cast<std::size_t>(first + r)];
    if (is_blank(line))
      throw ParseError("blank line inside grid", first + r + 1);
    for (int c = 0; c < static_cast<int>(line.size()); ++c) {
      char ch = line[static_cast<std::size_t>(c)];
      if (ch == '#')
        pts.push_back(Point{c, rows - 1 - r});
      else if (ch != '.')
        throw ParseError(std::string("unexpected character '") + ch +
                             "' in grid",
                         first + r + 1, c + 1);
    }
  }
  return pts;
}

std::vector<Point> parse_points(const std::string& text) {
  auto lines = split_lines(text);
  std::vector<Point> out;
  int dim = -1;
  for (int ln = 0; ln < static_cast<int>(lines.size()); ++ln) {
    const std::string& line = lines[static_cast<std::size_t>(ln)];
    if (is_blank(line)) continue;
    std::size_t start = line.find_first_not_of(" \t");
    if (line[start] == '#') continue;

    std::vector<int> coords;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) {
      try {
        std::size_t used = 0;
        int v = std::stoi(field, &used);
        while (used < field.size() &&
               std::isspace(static_cast<unsigned char>(field[used])))
          ++used;
        if (used != field.size()) throw std::invalid_argument(field);
        coords.push_back(v);
      } catch (const std::exception&) {
        throw ParseError("bad integer '" + field + "'", ln + 1);
      }
    }
    if (coords.empty()) throw ParseError("empty point", ln + 1);
    if (dim < 0) dim = static_cast<int>(coords.size());
    if (static_cast<int>(coords.size()) != dim)
      throw ParseError("point dimension mismatch", ln + 1);
    out.push_back(Point(coords));
  }
  if (out.empty()) throw ParseError("no points in file", 1);
  return out;
}

std::vector<std::pair<int, int>> parse_edge_list(const std::string& text) {
  auto lines = split_lines(text);
  std::vector<std::pair<int, int>> out;
  for (int ln = 0; ln < static_cast<int>(lines.size()); ++ln) {
    const std::string& line = lines[static_cast<std::size_t>(ln)];
    if (is_blank(line)) continue;
    std::size_t start = line.find_first_not_of(" \t");
    if (line[start] == '#') continue;
    int a = 0, b = 0;
    char comma = 0;
    std::stringstream ss(line);
    if (!(ss >> a >> comma >> b) || comma != ',')
      throw ParseError("expected 'i,j' edge", ln + 1);
    std::string rest;
    if (ss >> rest) throw ParseError("trailing content after edge", ln + 1);
    if (a < 0 || b < 0) throw ParseError("negative point index", ln + 1);
    out.emplace_back(a, b);
  }
  return out;
}

bool looks_like_grid(const std::string& text) {
  bool any = false;
  for (const auto& line : split_lines(text)) {
    if (is_blank(line)) continue;
    any = true;
    for (char c : line)
      if (c != '#' && c != '.') return false;
  }
  return any;
}

namespace {

std::string grid_over(const PointSet& pts, const PointSet& overlay, int minx,
                      int maxx, int miny, int maxy) {
  std::string out;
  for (int y = maxy; y >= miny; --y) {
    for (int x = minx; x <= maxx; ++x) {
      Point p{x, y};
      out += contains(overlay, p) ? '*' : contains(pts, p) ? '#' : '.';
    }
    out += '\n';
  }
  return out;
}

}  // namespace

std::string format_grid(const PointSet& pts) {
  if (pts.empty()) throw Error("format_grid: empty point set");
  int maxx = 0, maxy = 0;
  for (const auto& p : pts) {
    if (p.dim() != 2) throw DimensionError("format_grid: points must be 2-D");
    if (p.x() < 0 || p.y() < 0)
      throw Error("format_grid: negative coordinate " + p.str());
    maxx = std::max(maxx, p.x());
    maxy = std::max(maxy, p.y());
  }
  return grid_over(normalized(pts), {}, 0, maxx, 0, maxy);
}

std::string format_points(const PointSet& pts) {
  std::string out;
  for (const auto& p : pts) {
    for (int i = 0; i < p.dim(); ++i) {
      if (i) out += ',';
      out += std::to_string(p[i]);
    }
    out += '\n';
  }
  return out;
}

std::string render_grid(const PointSet& pts, const PointSet& overlay) {
  PointSet all = set_union(normalized(pts), normalized(overlay));
  if (all.empty()) throw Error("render_grid: nothing to render");
  int minx = all[0].x(), maxx = all[0].x();
  int miny = all[0].y(), maxy = all[0].y();
  for (const auto& p : all) {
    if (p.dim() != 2) throw DimensionError("render_grid: points must be 2-D");
    minx = std::min(minx, p.x());
    maxx = std::max(maxx, p.x());
    miny = std::min(miny, p.y());
    maxy = std::max(maxy, p.y());
  }
  return grid_over(normalized(pts), normalized(overlay), minx, maxx, miny, maxy);
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace dtk
