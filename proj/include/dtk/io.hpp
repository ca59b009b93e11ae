#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dtk/point.hpp"

namespace dtk {

// Text formats for Z^2 grids and general point lists.
//
// GRID: lines over {'#', '.'}; '#' marks a foreground cell.  Rows run top to
// bottom with decreasing y, the leftmost column is x = 0, and the bottom-left
// cell is (0, 0).  POINTS: one point per line as comma-separated integers;
// blank lines and lines starting with '#' are ignored.

// Foreground cells of a grid.  Leading and trailing blank lines are skipped;
// anything else that is not '#' or '.' raises ParseError with line/column.
PointSet parse_grid(const std::string& text);

// Points in input order (not normalized), so that edge files can refer to
// them by line index.  All points must share one dimension.
std::vector<Point> parse_points(const std::string& text);

// Pairs of 0-based indices into a points file, one "i,j" pair per line, with
// the same blank/comment rules as POINTS.
std::vector<std::pair<int, int>> parse_edge_list(const std::string& text);

// Heuristic format sniff: every nonblank line consists of '#' and '.' only.
bool looks_like_grid(const std::string& text);

// Inverse of parse_grid over the window [0, max x] x [0, max y]; requires
// nonnegative 2-D coordinates so the round-trip is exact.
std::string format_grid(const PointSet& pts);

std::string format_points(const PointSet& pts);

// ASCII rendering over the joint bounding box: '#' foreground, '*' overlay,
// '.' background.  Tolerates negative coordinates.
std::string render_grid(const PointSet& pts, const PointSet& overlay = {});

// FNV-1a (64-bit) digest as fixed-width hex; used to echo input identity in
// machine-readable reports.
std::string fnv1a_hex(const std::string& data);

}  // namespace dtk
