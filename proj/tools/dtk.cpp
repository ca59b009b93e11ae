// dtk: analyze, verify, construct, and render finite digital images.
//
// Exit codes: 0 = success / property holds, 1 = property fails (witness
// reported), 2 = error (parse, hypothesis, budget, bad usage).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dtk/errors.hpp"
#include "dtk/families.hpp"
#include "dtk/geometry.hpp"
#include "dtk/image.hpp"
#include "dtk/io.hpp"
#include "dtk/lattice.hpp"
#include "dtk/map.hpp"
#include "dtk/shy.hpp"
#include "dtk/verify.hpp"

using nlohmann::json;

namespace {

struct Options {
  std::string input;
  std::string format = "auto";  // grid | points | auto
  std::string adjacency = "c1";
  std::string np;              // "u;c1,c2"
  std::string explicit_file;   // edge list over point line indices
  std::string set_file;
  std::string anchors_file;
  std::string property;
  std::string method;
  std::string indices;  // comma-separated, method-specific
  std::string cycles;   // "m,n" for the wedge method
  std::vector<std::string> disk_files;
  bool and_verify = false;
  bool assume_minimal = false;
  long long budget = -1;
  int jobs = 1;
  std::string output = "text";  // text | machine
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw dtk::Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<int> parse_int_list(const std::string& s, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string field;
  while (std::getline(ss, field, ',')) {
    try {
      out.push_back(std::stoi(field));
    } catch (const std::exception&) {
      throw dtk::Error("bad integer in " + what + ": '" + field + "'");
    }
  }
  if (out.empty()) throw dtk::Error(what + " must not be empty");
  return out;
}

// "cK" -> K
int parse_cu_token(const std::string& tok) {
  if (tok.size() < 2 || tok[0] != 'c')
    throw dtk::Error("bad adjacency '" + tok + "' (expected c1, c2, ...)");
  int u = 0;
  try {
    u = std::stoi(tok.substr(1));
  } catch (const std::exception&) {
    throw dtk::Error("bad adjacency '" + tok + "'");
  }
  if (u < 1) throw dtk::Error("adjacency index must be positive");
  return u;
}

struct LoadedImage {
  dtk::DigitalImage image;
  std::vector<dtk::Point> input_order;  // as listed in the file
  std::string raw;
};

std::vector<dtk::Point> parse_input(const std::string& raw,
                                    const std::string& format,
                                    const std::string& path) {
  std::string fmt = format;
  if (fmt == "auto") fmt = dtk::looks_like_grid(raw) ? "grid" : "points";
  if (fmt == "grid") return dtk::parse_grid(raw);
  if (fmt == "points") return dtk::parse_points(raw);
  throw dtk::Error("unknown format '" + format + "' for " + path);
}

dtk::AdjacencySpec build_adjacency(const Options& opt,
                                   const std::vector<dtk::Point>& pts) {
  const int dim = pts.empty() ? 1 : pts[0].dim();
  if (!opt.explicit_file.empty()) {
    auto idx_edges = dtk::parse_edge_list(read_file(opt.explicit_file));
    std::vector<std::pair<dtk::Point, dtk::Point>> edges;
    for (auto [a, b] : idx_edges) {
      if (a >= static_cast<int>(pts.size()) || b >= static_cast<int>(pts.size()))
        throw dtk::Error("edge index out of range in " + opt.explicit_file);
      edges.emplace_back(pts[static_cast<std::size_t>(a)],
                         pts[static_cast<std::size_t>(b)]);
    }
    return dtk::AdjacencySpec::explicit_adj(std::move(edges), dim);
  }
  if (!opt.np.empty()) {
    auto semi = opt.np.find(';');
    if (semi == std::string::npos)
      throw dtk::Error("--np expects 'u;c1,c2,...'");
    int u = 0;
    try {
      u = std::stoi(opt.np.substr(0, semi));
    } catch (const std::exception&) {
      throw dtk::Error("--np expects 'u;c1,c2,...'");
    }
    std::vector<std::string> toks;
    std::stringstream ss(opt.np.substr(semi + 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) toks.push_back(tok);
    if (toks.empty()) throw dtk::Error("--np needs at least one factor");
    if (dim % static_cast<int>(toks.size()) != 0)
      throw dtk::Error("--np: point dimension is not divisible by the factor count");
    int each = dim / static_cast<int>(toks.size());
    std::vector<dtk::AdjacencySpec> factors;
    for (const auto& t : toks)
      factors.push_back(dtk::AdjacencySpec::cu_adj(parse_cu_token(t), each));
    return dtk::AdjacencySpec::np_adj(u, std::move(factors));
  }
  int u = parse_cu_token(opt.adjacency);
  if (u > dim)
    throw dtk::Error("adjacency c" + std::to_string(u) +
                     " exceeds point dimension " + std::to_string(dim));
  return dtk::AdjacencySpec::cu_adj(u, dim);
}

LoadedImage load_image(const Options& opt) {
  std::string raw = read_file(opt.input);
  auto pts = parse_input(raw, opt.format, opt.input);
  auto adj = build_adjacency(opt, pts);
  return LoadedImage{dtk::DigitalImage(dtk::normalized(pts), adj),
                     std::move(pts), std::move(raw)};
}

dtk::PointSet load_set(const std::string& path, const dtk::DigitalImage& X) {
  std::string raw = read_file(path);
  auto pts = dtk::normalized(parse_input(raw, "auto", path));
  for (const auto& p : pts)
    if (!X.contains(p))
      throw dtk::Error("set point " + p.str() + " is not in the image");
  return pts;
}

dtk::SearchLimits limits_from(const Options& opt) {
  dtk::SearchLimits lim;
  if (const char* env = std::getenv("DTK_BUDGET")) lim.node_budget = std::atoll(env);
  if (opt.budget >= 0) lim.node_budget = opt.budget;
  lim.jobs = opt.jobs;
  return lim;
}

json points_json(const dtk::PointSet& pts) {
  json arr = json::array();
  for (const auto& p : dtk::normalized(pts)) {
    json coords = json::array();
    for (int i = 0; i < p.dim(); ++i) coords.push_back(p[i]);
    arr.push_back(coords);
  }
  return arr;
}

json map_json(const dtk::DigitalMap& f) {
  json arr = json::array();
  for (int i = 0; i < f.domain().size(); ++i) {
    json pair = json::array();
    pair.push_back(points_json({f.domain().point(i)})[0]);
    pair.push_back(points_json({f.codomain().point(f.apply_idx(i))})[0]);
    arr.push_back(pair);
  }
  return arr;
}

json report_json(const dtk::VerificationReport& rep) {
  json out;
  out["property"] = dtk::property_name(rep.property);
  out["holds"] = rep.holds;
  out["nodes_explored"] = rep.nodes_explored;
  out["detail"] = rep.detail;
  out["violating_points"] = points_json(rep.violating_points);
  json wit = json::array();
  for (const auto& w : rep.witnesses) wit.push_back(map_json(w));
  out["witnesses"] = wit;
  return out;
}

std::string report_text(const dtk::VerificationReport& rep) {
  std::ostringstream out;
  out << dtk::property_name(rep.property) << ": "
      << (rep.holds ? "HOLDS" : "FAILS") << "\n";
  if (!rep.detail.empty()) out << "  " << rep.detail << "\n";
  if (!rep.violating_points.empty())
    out << "  violating points: " << dtk::to_string(rep.violating_points) << "\n";
  for (const auto& w : rep.witnesses) out << "  witness: " << w.str() << "\n";
  out << "  nodes explored: " << rep.nodes_explored << "\n";
  out << "  elapsed: " << rep.elapsed.count() << " s\n";
  return out.str();
}

void emit(const Options& opt, const json& machine, const std::string& text) {
  if (opt.output == "machine")
    std::cout << machine.dump(2) << "\n";
  else
    std::cout << text;
}

json base_echo(const Options& opt, const LoadedImage& img) {
  json out;
  out["input"] = opt.input;
  out["input_digest"] = dtk::fnv1a_hex(img.raw);
  out["adjacency"] = img.image.adjacency().str();
  out["points"] = img.image.size();
  return out;
}

// ---------------------------------------------------------------- analyze

int cmd_analyze(const Options& opt) {
  LoadedImage li = load_image(opt);
  const dtk::DigitalImage& X = li.image;
  json out = base_echo(opt, li);
  std::ostringstream text;

  text << "points: " << X.size() << "  dim: " << X.dim() << "  adjacency: "
       << X.adjacency().str() << "\n";
  auto comps = dtk::components(X);
  out["connected"] = comps.size() == 1;
  out["components"] = comps.size();
  text << "connected: " << (comps.size() == 1 ? "yes" : "no") << " ("
       << comps.size() << " component" << (comps.size() == 1 ? "" : "s")
       << ")\n";

  if (X.adjacency().is_lattice() && X.dim() == 2) {
    auto bd1 = dtk::boundary(X, 1);
    auto bd2 = dtk::boundary(X, 2);
    out["bd1"] = points_json(bd1);
    out["bd2"] = points_json(bd2);
    text << "Bd_1: " << dtk::to_string(bd1) << "\n";
    text << "Bd_2: " << dtk::to_string(bd2) << "\n";
    text << "Bd_2 \\ Bd_1: " << dtk::to_string(dtk::set_difference(bd2, bd1))
         << "\n";
    try {
      dtk::DiskAnalysis da = dtk::analyze_disk(X);
      out["disk"] = true;
      out["bounding_curve"] = points_json(da.bounding_curve.point_set());
      out["bounding_curve_size"] = da.bounding_curve.size();
      out["interior"] = points_json(da.interior);
      out["thick"] = da.thick;
      out["convex"] = da.convex;
      json angles = json::array();
      for (const auto& [p, deg] : da.angles) {
        json a;
        a["vertex"] = points_json({p})[0];
        a["degrees"] = deg;
        angles.push_back(a);
      }
      out["angles"] = angles;
      text << "disk: yes\n";
      text << "bounding curve (" << da.bounding_curve.size() << " points): ";
      for (int i = 0; i < da.bounding_curve.size(); ++i)
        text << (i ? " " : "") << da.bounding_curve.at(i).str();
      text << "\n";
      text << "interior: " << dtk::to_string(da.interior) << "\n";
      for (const auto& [p, deg] : da.angles)
        text << "angle at " << p.str() << ": " << deg << "\n";
      text << "thick: " << (da.thick ? "yes" : "no");
      if (!da.thick) text << "  failures: " << dtk::to_string(da.thick_failures);
      text << "\n";
      text << "convex: " << (da.convex ? "yes" : "no") << "\n";
    } catch (const dtk::NotADiskError& e) {
      out["disk"] = false;
      out["disk_diagnosis"] = e.what();
      text << "not a disk: " << e.what() << "\n";
    }
  }
  emit(opt, out, text.str());
  return 0;
}

// ----------------------------------------------------------------- verify

int cmd_verify(const Options& opt) {
  LoadedImage li = load_image(opt);
  const dtk::DigitalImage& X = li.image;
  if (opt.set_file.empty()) throw dtk::Error("verify requires --set");
  dtk::PointSet A = load_set(opt.set_file, X);
  dtk::SearchLimits lim = limits_from(opt);

  dtk::VerificationReport rep = [&] {
    const std::string& p = opt.property;
    if (p == "freezing") return dtk::verify_freezing(X, A, lim);
    if (p == "cold") return dtk::verify_cold(X, A, lim);
    if (p == "unifying") return dtk::verify_unifying(X, A, lim);
    if (p == "minimal-freezing") return dtk::verify_minimal_freezing(X, A, lim);
    if (p == "minimal-unifying") return dtk::verify_minimal_unifying(X, A, lim);
    if (p == "afp-propagation") return dtk::verify_afp_propagation(X, A, lim);
    if (p == "forced-isomorphism") return dtk::verify_forced_isomorphism(X, A, lim);
    if (p == "unique-shy-retraction")
      return dtk::verify_unique_shy_retraction(X, A, lim);
    throw dtk::Error("unknown property '" + p + "'");
  }();

  json out = base_echo(opt, li);
  out["set"] = points_json(A);
  out["report"] = report_json(rep);
  emit(opt, out, report_text(rep));
  return rep.holds ? 0 : 1;
}

// -------------------------------------------------------------- construct

int cmd_construct(const Options& opt) {
  dtk::SearchLimits lim = limits_from(opt);
  const std::string& m = opt.method;

  // The wedge method builds its own instance from --cycles and --indices.
  if (m == "wedge") {
    if (opt.cycles.empty() || opt.indices.empty())
      throw dtk::Error("method wedge requires --cycles m,n and --indices i,j,k,p");
    auto mn = parse_int_list(opt.cycles, "--cycles");
    auto idx = parse_int_list(opt.indices, "--indices");
    if (mn.size() != 2 || idx.size() != 4)
      throw dtk::Error("method wedge requires --cycles m,n and --indices i,j,k,p");
    dtk::WedgeImage w = dtk::wedge(mn[0], mn[1]);
    dtk::PointSet A = dtk::wedge_freezing_set(w, idx[0], idx[1], idx[2], idx[3]);
    json out;
    out["method"] = m;
    out["set"] = points_json(A);
    std::ostringstream text;
    text << "constructed set: " << dtk::to_string(A) << "\n";
    if (opt.and_verify) {
      auto rep = dtk::verify_freezing(w.image, A, lim);
      out["report"] = report_json(rep);
      text << (rep.holds ? "freezing: HOLDS" : "freezing: FAILS") << "\n";
      emit(opt, out, text.str());
      return rep.holds ? 0 : 1;
    }
    emit(opt, out, text.str());
    return 0;
  }

  LoadedImage li = load_image(opt);
  const dtk::DigitalImage& X = li.image;
  json out = base_echo(opt, li);
  out["method"] = m;
  std::ostringstream text;

  // shy-retraction emits a map, everything else a point set
  if (m == "shy-retraction") {
    if (opt.set_file.empty())
      throw dtk::Error("method shy-retraction requires --set (the subimage R)");
    dtk::PointSet R = load_set(opt.set_file, X);
    dtk::ShyRetraction r = [&] {
      if (!opt.anchors_file.empty())
        return dtk::build_shy_retraction(X, R, load_set(opt.anchors_file, X));
      if (static_cast<int>(X.edges().size()) == X.size() - 1 &&
          dtk::is_connected(X))
        return dtk::tree_shy_retraction(X, R);
      return dtk::build_shy_retraction(X, R, R);
    }();
    out["map"] = map_json(r.map);
    json anchors = json::array();
    for (const auto& [K, p] : r.component_anchors) {
      json a;
      a["component"] = points_json(K);
      a["anchor"] = points_json({p})[0];
      anchors.push_back(a);
    }
    out["anchors"] = anchors;
    text << "shy retraction: " << r.map.str() << "\n";
    for (const auto& [K, p] : r.component_anchors)
      text << "  component " << dtk::to_string(K) << " -> " << p.str() << "\n";
    if (opt.and_verify) {
      auto rep = dtk::verify_unique_shy_retraction(X, R, lim);
      out["report"] = report_json(rep);
      text << (rep.holds ? "unique shy retraction: HOLDS"
                         : "unique shy retraction: FAILS")
           << "\n";
      emit(opt, out, text.str());
      return rep.holds ? 0 : 1;
    }
    emit(opt, out, text.str());
    return 0;
  }

  std::vector<dtk::DigitalImage> disks;
  for (const auto& f : opt.disk_files) {
    std::string raw = read_file(f);
    disks.emplace_back(dtk::normalized(parse_input(raw, "auto", f)),
                       X.adjacency());
  }

  dtk::PointSet A = [&]() -> dtk::PointSet {
    if (m == "bd1") {
      int u = X.adjacency().kind == dtk::AdjacencySpec::Kind::cu
                  ? X.adjacency().u
                  : 1;
      return dtk::construct_freezing_bd1(X, u);
    }
    if (m == "corners") return dtk::construct_corner_freezing(X);
    if (m == "thm3.5") {
      if (!disks.empty()) return dtk::construct_freezing_c1_union(X, disks);
      return dtk::construct_freezing_c1(X);
    }
    if (m == "thm3.6") {
      if (!disks.empty())
        return dtk::construct_freezing_c2_union(X, disks, opt.assume_minimal);
      return dtk::construct_freezing_c2(X, opt.assume_minimal);
    }
    if (m == "thm3.7")
      return dtk::construct_freezing_c1_union(X, disks.empty()
                                                     ? std::vector<dtk::DigitalImage>{X}
                                                     : disks);
    if (m == "thm3.8")
      return dtk::construct_freezing_c2_union(
          X, disks.empty() ? std::vector<dtk::DigitalImage>{X} : disks,
          opt.assume_minimal);
    if (m == "cycle-triple") {
      auto idx = parse_int_list(opt.indices, "--indices");
      if (idx.size() != 3)
        throw dtk::Error("method cycle-triple requires --indices i,j,k");
      int n = X.size();
      dtk::CycleImage c = dtk::cycle(n);
      if (!(c.image == X))
        throw dtk::Error("cycle-triple: image is not the standard cycle on " +
                         std::to_string(n) + " labelled points");
      if (!dtk::cycle_freezing_triple_valid(c, idx[0], idx[1], idx[2]))
        throw dtk::Error("cycle-triple: indices do not give unique shorter arcs");
      return dtk::normalized(
          dtk::PointSet{c.vertex(idx[0]), c.vertex(idx[1]), c.vertex(idx[2])});
    }
    if (m == "tree-leaves") return dtk::tree_leaves(X);
    throw dtk::Error("unknown method '" + m + "'");
  }();

  out["set"] = points_json(A);
  text << "constructed set: " << dtk::to_string(A) << "\n";
  if (opt.and_verify) {
    auto rep = dtk::verify_freezing(X, A, lim);
    out["report"] = report_json(rep);
    text << (rep.holds ? "freezing: HOLDS" : "freezing: FAILS") << "\n";
    emit(opt, out, text.str());
    return rep.holds ? 0 : 1;
  }
  emit(opt, out, text.str());
  return 0;
}

// ----------------------------------------------------------------- render

int cmd_render(const Options& opt) {
  LoadedImage li = load_image(opt);
  if (li.image.dim() != 2 || !li.image.adjacency().is_lattice())
    throw dtk::Error("render requires a 2-D lattice image");
  dtk::PointSet overlay;
  if (!opt.set_file.empty()) overlay = load_set(opt.set_file, li.image);
  std::cout << dtk::render_grid(li.image.points(), overlay);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"digital-image toolkit: freezing sets, bounding curves, shy maps"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    auto* pos = sub->add_option("input", opt.input, "image file (GRID or POINTS)");
    if (needs_input) pos->required();
    sub->add_option("--format", opt.format, "grid | points | auto")
        ->check(CLI::IsMember({"grid", "points", "auto"}));
    sub->add_option("--adjacency", opt.adjacency, "c1, c2, ..., cn");
    sub->add_option("--np", opt.np, "normal product: 'u;c1,c1'");
    sub->add_option("--explicit", opt.explicit_file,
                    "edge file of point line-index pairs");
    sub->add_option("--budget", opt.budget, "search node budget");
    sub->add_option("--jobs", opt.jobs, "parallel search jobs");
    sub->add_option("--output", opt.output, "text | machine")
        ->check(CLI::IsMember({"text", "machine"}));
  };

  CLI::App* analyze = app.add_subcommand("analyze", "connectivity, boundaries, disk analysis");
  add_common(analyze, true);

  CLI::App* verify = app.add_subcommand("verify", "run a property verification");
  add_common(verify, true);
  verify->add_option("--property", opt.property,
                     "freezing | cold | unifying | minimal-freezing | "
                     "minimal-unifying | afp-propagation | forced-isomorphism | "
                     "unique-shy-retraction")
      ->required();
  verify->add_option("--set", opt.set_file, "point-set file")->required();

  CLI::App* construct = app.add_subcommand("construct", "build a set or map");
  add_common(construct, false);
  construct
      ->add_option("--method", opt.method,
                   "bd1 | corners | thm3.5 | thm3.6 | thm3.7 | thm3.8 | "
                   "cycle-triple | tree-leaves | wedge | shy-retraction")
      ->required();
  construct->add_option("--set", opt.set_file, "subimage R (shy-retraction)");
  construct->add_option("--anchors", opt.anchors_file,
                        "anchor set A (shy-retraction)");
  construct->add_option("--indices", opt.indices, "vertex indices (cycle/wedge)");
  construct->add_option("--cycles", opt.cycles, "wedge cycle lengths 'm,n'");
  construct->add_option("--disk", opt.disk_files,
                        "disk point files for the union constructions");
  construct->add_flag("--and-verify", opt.and_verify,
                      "verify the constructed object");
  construct->add_flag("--assume-minimal", opt.assume_minimal,
                      "accept an uncertified minimal bounding curve");

  CLI::App* render = app.add_subcommand("render", "ASCII-render a 2-D image");
  add_common(render, true);
  render->add_option("--set", opt.set_file, "overlay point set");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return cmd_analyze(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (construct->parsed()) return cmd_construct(opt);
    if (render->parsed()) return cmd_render(opt);
  } catch (const dtk::ParseError& e) {
    std::cerr << "parse error (line " << e.line;
    if (e.column) std::cerr << ", column " << e.column;
    std::cerr << "): " << e.what() << "\n";
    return 2;
  } catch (const dtk::BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
