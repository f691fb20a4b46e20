// polyanti command line: verification, boundary tracing, convex dimension,
// staircase tools, conjecture search, rendering and report replay for
// antimatroidal point sets.
//
// Exit codes: 0 the requested property holds / run completed clean,
//             1 the property fails (or a counterexample/indeterminate turned up),
//             2 malformed input or a violated precondition.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polyanti/axioms.hpp"
#include "polyanti/cdim.hpp"
#include "polyanti/harness.hpp"
#include "polyanti/planar.hpp"
#include "polyanti/pointfile.hpp"
#include "polyanti/render.hpp"
#include "polyanti/report.hpp"
#include "polyanti/staircase.hpp"

namespace {

using namespace polyanti;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw invalid_input("cannot write '" + out_path + "'");
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void add_input_section(io::Report& report, const PointSet& s) {
  report.add("dim", (long long)s.dim());
  report.add("points", (long long)s.size());
  report.add_section("input", io::point_set_lines(s));
}

staircase::Cuboid parse_cuboid_arg(const std::string& arg) {
  std::vector<int> v;
  std::string part;
  std::istringstream in(arg);
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      int value = std::stoi(part, &used);
      if (used != part.size() || value < 0) throw std::invalid_argument(part);
      v.push_back(value);
    } catch (const std::exception&) {
      throw invalid_input("bad cuboid coordinate '" + part + "' in '" + arg + "'");
    }
  }
  if (v.size() != 6)
    throw invalid_input("cuboid needs 6 comma-separated coordinates, got '" + arg + "'");
  return staircase::Cuboid(Point(v[0], v[1], v[2]), Point(v[3], v[4], v[5]));
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::string& file, const std::string& cls, const std::string& out) {
  PointSet s = io::load_point_file(file);
  io::Report r;
  r.add("command", "verify");

  auto acc = check_accessible(s);
  auto uc = check_union_closed(s);
  auto ic = check_intersection_closed(s);
  auto ex = check_exchange_strict(s);
  auto cp = check_chain_property(s);
  std::optional<Violation> definition_2d;
  r.add("accessible", !acc);
  r.add("union_closed", !uc);
  r.add("intersection_closed", !ic);
  r.add("exchange_strict", !ex);
  r.add("chain_property", !cp);
  if (s.dim() == 2) {
    definition_2d = planar::check_antimatroidal_2d(s);
    r.add("antimatroidal_2d", !definition_2d);
    r.add("orthogonally_convex", planar::is_orthogonally_convex(s));
    r.add("n4_connected", planar::is_n4_connected(s));
    r.add("characterization", planar::characterization_check(s));
  }
  bool poly = !acc && !uc;
  r.add("poly_antimatroid", poly);
  r.add("poset_poly_antimatroid", poly && !ic);

  bool holds = false;
  std::optional<Violation> violation;
  if (cls == "poly-antimatroid") {
    holds = poly;
    violation = acc ? acc : uc;
  } else if (cls == "poset") {
    holds = poly && !ic;
    violation = acc ? acc : (uc ? uc : ic);
  } else {  // antimatroidal-2d
    if (s.dim() != 2) throw invalid_input("class antimatroidal-2d requires a 2-dimensional file");
    holds = !definition_2d;
    violation = definition_2d;
  }
  r.add("class", cls);
  r.add("holds", holds);
  if (violation) {
    r.add("violated_rule", violation->rule);
    r.add("violation", violation->message);
  }
  add_input_section(r, s);
  emit(r.str(), out);
  return holds ? 0 : 1;
}

// ---------------------------------------------------------------- boundary

int cmd_boundary(const std::string& file, bool check_join, const std::string& render_fmt,
                 const std::string& out) {
  PointSet s = io::load_point_file(file);
  Chain lower = planar::trace_lower_boundary(s);
  Chain upper = planar::trace_upper_boundary(s);

  io::Report r;
  r.add("command", "boundary");
  r.add("max", io::format_point_token(s.max_point()));
  r.add("lower", io::format_chain(lower));
  r.add("upper", io::format_chain(upper));
  r.add("lower_points", (long long)lower.size());
  r.add("upper_points", (long long)upper.size());
  bool join_exact = true;
  if (check_join) {
    const Chain chains[2] = {lower, upper};
    join_exact = join_of_chains(chains) == s;
    r.add("join", join_exact ? "exact" : "mismatch");
  }
  if (!render_fmt.empty()) {
    render::Overlays overlays;
    overlays.boundaries = true;
    std::string art = render_fmt == "svg" ? render::svg(s, overlays) : render::ascii(s, overlays);
    std::vector<std::string> lines;
    std::istringstream in(art);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    r.add_section("render", std::move(lines));
  }
  add_input_section(r, s);
  emit(r.str(), out);
  return join_exact ? 0 : 1;
}

// ---------------------------------------------------------------- cdim

int cmd_cdim(const std::string& file, std::size_t chain_cap, std::size_t subset_cap,
             const std::string& out) {
  PointSet s = io::load_point_file(file);
  cdim::SearchCaps caps{chain_cap, subset_cap};
  cdim::CdimResult res = cdim::convex_dimension_exact(s, caps);

  io::Report r;
  r.add("command", "cdim");
  r.add("chain_cap", (long long)chain_cap);
  r.add("subset_cap", (long long)subset_cap);
  r.add("antichain", io::format_point_sequence(res.irreducible_antichain.points()));
  r.add("lower_bound", (long long)res.lower);
  if (res.upper) r.add("upper_bound", (long long)*res.upper);
  r.add("exhausted", res.exhausted);
  if (res.exact()) {
    r.add("exact", (long long)res.value());
    for (std::size_t i = 0; i < res.witnesses.size(); ++i)
      r.add("witness_" + std::to_string(i + 1), io::format_chain(res.witnesses[i]));
  }
  add_input_section(r, s);
  emit(r.str(), out);
  return 0;
}

// ---------------------------------------------------------------- staircase

int cmd_staircase_gen(const std::vector<std::string>& cuboid_args, bool random,
                      std::uint64_t seed, int max_steps, int max_coord, const std::string& out) {
  staircase::StaircaseSpec spec;
  if (random) {
    spec = staircase::random_regular_spec(seed, max_steps, max_coord);
  } else {
    if (cuboid_args.empty()) throw invalid_input("gen needs --cuboid arguments or --random");
    for (const std::string& arg : cuboid_args) spec.cuboids.push_back(parse_cuboid_arg(arg));
  }
  PointSet pts = staircase::staircase_points(spec);  // rejects irregular sequences
  std::ostringstream text;
  for (const auto& c : spec.cuboids)
    text << "# cuboid " << io::format_point_token(c.min_corner()) << ' '
         << io::format_point_token(c.max_corner()) << '\n';
  text << io::format_point_file(pts);
  emit(text.str(), out);
  return 0;
}

int cmd_staircase_check(const std::string& file, const std::vector<std::string>& cuboid_args,
                        const std::string& out) {
  io::Report r;
  r.add("command", "staircase-check");
  if (!cuboid_args.empty()) {
    staircase::StaircaseSpec spec;
    for (const std::string& arg : cuboid_args) spec.cuboids.push_back(parse_cuboid_arg(arg));
    auto report = staircase::validate_regular(spec);
    r.add("cuboids", (long long)spec.cuboids.size());
    r.add("regular", report.ok);
    if (!report.ok) {
      std::vector<std::string> lines;
      for (const auto& v : report.violations)
        lines.push_back(std::string("condition ") + v.condition + " at step " +
                        std::to_string(v.index) + ": " + v.detail);
      r.add_section("violations", std::move(lines));
    }
    emit(r.str(), out);
    return report.ok ? 0 : 1;
  }

  if (file.empty()) throw invalid_input("check needs a point file or --cuboid arguments");
  PointSet s = io::load_point_file(file);
  r.add("poset_poly_antimatroid", staircase::is_poset_poly_antimatroid(s));
  auto decision = staircase::is_step_staircase(s);
  const char* verdict = decision.verdict == staircase::StaircaseVerdict::yes ? "yes"
                        : decision.verdict == staircase::StaircaseVerdict::no ? "no"
                                                                              : "indeterminate";
  r.add("staircase", verdict);
  if (decision.witness) {
    for (std::size_t i = 0; i < decision.witness->cuboids.size(); ++i) {
      const auto& c = decision.witness->cuboids[i];
      r.add("cuboid_" + std::to_string(i + 1),
            io::format_point_token(c.min_corner()) + " " + io::format_point_token(c.max_corner()));
    }
  }
  add_input_section(r, s);
  emit(r.str(), out);
  return decision.verdict == staircase::StaircaseVerdict::yes ? 0 : 1;
}

int cmd_staircase_trace(const std::string& file, const std::string& out) {
  PointSet s = io::load_point_file(file);
  auto chains = staircase::three_chain_decomposition(s);
  const Chain all[3] = {chains.b_x, chains.b_y, chains.b_z};
  bool exact = join_of_chains(all) == s;

  io::Report r;
  r.add("command", "staircase-trace");
  r.add("max", io::format_point_token(s.max_point()));
  r.add("b_x", io::format_chain(chains.b_x));
  r.add("b_y", io::format_chain(chains.b_y));
  r.add("b_z", io::format_chain(chains.b_z));
  r.add("chain_points", (long long)chains.b_x.size());
  r.add("join", exact ? "exact" : "mismatch");
  add_input_section(r, s);
  emit(r.str(), out);
  return exact ? 0 : 1;
}

// ---------------------------------------------------------------- conjecture

int cmd_conjecture(const std::vector<int>& box_coords, const std::string& claim, int bound,
                   int workers, std::size_t samples, std::uint64_t seed,
                   const std::string& ce_dir, const std::string& out) {
  Point box(box_coords[0], box_coords[1], box_coords[2]);
  if (!ce_dir.empty()) std::filesystem::create_directories(ce_dir);
  harness::PersistOptions persist{ce_dir};
  harness::SearchReport report;
  if (samples > 0) {
    report = harness::test_claim_random(box, claim, bound, samples, seed, persist);
  } else if (claim == "staircase") {
    report = harness::test_conjecture_staircase(box, workers, persist);
  } else {
    report = harness::test_cdim_bound(box, bound, workers, persist);
  }
  emit(harness::serialize_report(report), out);
  std::fprintf(stderr, "elapsed: %.3fs\n", report.elapsed_seconds);
  return report.counterexamples.empty() && report.indeterminates.empty() ? 0 : 1;
}

// ---------------------------------------------------------------- render

int cmd_render(const std::string& file, const std::string& format,
               const std::vector<std::string>& overlay_names, const std::string& out) {
  PointSet s = io::load_point_file(file);
  render::Overlays overlays;
  for (const std::string& name : overlay_names) {
    if (name == "boundaries")
      overlays.boundaries = true;
    else if (name == "chains")
      overlays.chains = true;
    else
      throw invalid_input("unknown overlay '" + name + "'");
  }
  emit(format == "svg" ? render::svg(s, overlays) : render::ascii(s, overlays), out);
  return 0;
}

// ---------------------------------------------------------------- replay

class ReplayCheck {
 public:
  explicit ReplayCheck(io::Report& out) : out_(out) {}

  void expect(const std::string& what, bool ok) {
    if (ok) return;
    failed_ = true;
    out_.add("mismatch", what);
  }
  bool failed() const { return failed_; }

 private:
  io::Report& out_;
  bool failed_ = false;
};

PointSet replay_input(const io::Report& rep) {
  const std::string* dim = rep.find("dim");
  const auto* lines = rep.find_section("input");
  if (!dim || !lines) throw invalid_input("report has no replayable input section");
  return io::point_set_from_lines(std::stoi(*dim), *lines);
}

void replay_verify(const io::Report& rep, const PointSet& s, ReplayCheck& check) {
  auto recompute = [&](const std::string& key) -> std::optional<bool> {
    if (key == "accessible") return is_accessible(s);
    if (key == "union_closed") return is_union_closed(s);
    if (key == "intersection_closed") return is_intersection_closed(s);
    if (key == "exchange_strict") return satisfies_exchange_strict(s);
    if (key == "chain_property") return satisfies_chain_property(s);
    if (key == "antimatroidal_2d") return planar::is_antimatroidal_2d(s);
    if (key == "orthogonally_convex") return planar::is_orthogonally_convex(s);
    if (key == "n4_connected") return planar::is_n4_connected(s);
    if (key == "characterization") return planar::characterization_check(s);
    if (key == "poly_antimatroid") return is_poly_antimatroid(s);
    if (key == "poset_poly_antimatroid")
      return is_poly_antimatroid(s) && is_intersection_closed(s);
    return std::nullopt;
  };
  for (const auto& entry : rep.entries()) {
    if (entry.is_section) continue;
    if (auto fresh = recompute(entry.key))
      check.expect(entry.key + " verdict reproduces",
                   entry.value == (*fresh ? "true" : "false"));
  }
}

void replay_boundary(const io::Report& rep, const PointSet& s, ReplayCheck& check) {
  const std::string* lower = rep.find("lower");
  const std::string* upper = rep.find("upper");
  check.expect("report carries both chains", lower && upper);
  if (!lower || !upper) return;
  check.expect("lower chain reproduces", *lower == io::format_chain(planar::trace_lower_boundary(s)));
  check.expect("upper chain reproduces", *upper == io::format_chain(planar::trace_upper_boundary(s)));
  if (const std::string* join = rep.find("join")) {
    const Chain chains[2] = {planar::trace_lower_boundary(s), planar::trace_upper_boundary(s)};
    check.expect("join verdict reproduces",
                 *join == (join_of_chains(chains) == s ? "exact" : "mismatch"));
  }
}

void replay_cdim(const io::Report& rep, const PointSet& s, ReplayCheck& check) {
  const std::string* lower = rep.find("lower_bound");
  check.expect("report carries lower_bound", lower != nullptr);
  if (const std::string* antichain = rep.find("antichain")) {
    std::vector<Point> pts = io::parse_point_sequence(*antichain);
    PointSet irr = cdim::join_irreducibles(s);
    bool ok = true;
    for (std::size_t i = 0; i < pts.size() && ok; ++i) {
      ok = irr.contains(pts[i]);
      for (std::size_t j = 0; j < pts.size() && ok; ++j)
        if (i != j) ok = !leq(pts[i], pts[j]);
    }
    check.expect("antichain certificate re-verifies (irreducible, incomparable)", ok);
  }
  if (const std::string* exact = rep.find("exact")) {
    int k = std::stoi(*exact);
    std::vector<Chain> witnesses;
    for (int i = 1; i <= k; ++i) {
      const std::string* w = rep.find("witness_" + std::to_string(i));
      check.expect("witness_" + std::to_string(i) + " present", w != nullptr);
      if (!w) return;
      std::vector<Point> pts = io::parse_point_sequence(*w);
      witnesses.emplace_back(std::move(pts));  // Chain constructor re-validates
      for (const Point& p : witnesses.back().points())
        check.expect("witness points are members", s.contains(p));
    }
    check.expect("witness count equals exact value", int(witnesses.size()) == k);
    check.expect("witness join reproduces the set", join_of_chains(witnesses) == s);
    if (lower) check.expect("lower bound within exact", std::stoi(*lower) <= k);
  }
}

void replay_staircase_check(const io::Report& rep, const PointSet& s, ReplayCheck& check) {
  const std::string* verdict = rep.find("staircase");
  check.expect("report carries a staircase verdict", verdict != nullptr);
  if (!verdict) return;
  if (*verdict == "yes") {
    staircase::StaircaseSpec witness;
    for (int i = 1;; ++i) {
      const std::string* c = rep.find("cuboid_" + std::to_string(i));
      if (!c) break;
      std::vector<Point> corners = io::parse_point_sequence(*c);
      check.expect("cuboid_" + std::to_string(i) + " has two corners", corners.size() == 2);
      if (corners.size() != 2) return;
      witness.cuboids.emplace_back(corners[0], corners[1]);
    }
    check.expect("witness sequence is regular", staircase::validate_regular(witness).ok);
    check.expect("witness union reproduces the set", staircase::staircase_points(witness) == s);
  } else {
    auto fresh = staircase::is_step_staircase(s);
    const char* name = fresh.verdict == staircase::StaircaseVerdict::yes ? "yes"
                       : fresh.verdict == staircase::StaircaseVerdict::no ? "no"
                                                                          : "indeterminate";
    check.expect("staircase verdict reproduces", *verdict == name);
  }
}

void replay_staircase_trace(const io::Report& rep, const PointSet& s, ReplayCheck& check) {
  auto chains = staircase::three_chain_decomposition(s);
  auto same = [&](const char* key, const Chain& c) {
    const std::string* v = rep.find(key);
    check.expect(std::string(key) + " reproduces", v && *v == io::format_chain(c));
  };
  same("b_x", chains.b_x);
  same("b_y", chains.b_y);
  same("b_z", chains.b_z);
  if (const std::string* join = rep.find("join")) {
    const Chain all[3] = {chains.b_x, chains.b_y, chains.b_z};
    check.expect("join verdict reproduces",
                 *join == (join_of_chains(all) == s ? "exact" : "mismatch"));
  }
}

void replay_conjecture(const io::Report& rep, ReplayCheck& check) {
  const std::string* claim = rep.find("claim");
  const std::string* count = rep.find("counterexamples");
  check.expect("report carries claim and counterexample count", claim && count);
  if (!claim || !count) return;
  int n = std::stoi(*count);
  for (int i = 1; i <= n; ++i) {
    const std::string* line = rep.find("counterexample_" + std::to_string(i));
    check.expect("counterexample_" + std::to_string(i) + " present", line != nullptr);
    if (!line) continue;
    std::size_t space = line->find(' ');
    std::string tag = line->substr(0, space);
    std::vector<Point> pts = io::parse_point_sequence(line->substr(space + 1));
    PointSet set(pts.front().dim(), pts);
    check.expect("counterexample is a poset poly-antimatroid",
                 staircase::is_poset_poly_antimatroid(set));
    if (*claim == "staircase") {
      check.expect("counterexample still fails the staircase claim",
                   staircase::is_step_staircase(set).verdict == staircase::StaircaseVerdict::no);
    } else {
      int bound = std::stoi(tag.substr(tag.find("<=") + 2));
      auto res = cdim::convex_dimension_exact(set);
      check.expect("counterexample still exceeds the bound", res.exact() && res.value() > bound);
    }
  }
}

int cmd_replay(const std::string& file, const std::string& out) {
  io::Report rep = io::Report::parse(read_file(file));
  const std::string* cmd = rep.find("command");
  if (!cmd) throw invalid_input("report has no 'command' line");

  io::Report r;
  r.add("command", "replay");
  r.add("source", *cmd);
  ReplayCheck check(r);
  if (*cmd == "conjecture") {
    replay_conjecture(rep, check);
  } else {
    PointSet s = replay_input(rep);
    if (*cmd == "verify")
      replay_verify(rep, s, check);
    else if (*cmd == "boundary")
      replay_boundary(rep, s, check);
    else if (*cmd == "cdim")
      replay_cdim(rep, s, check);
    else if (*cmd == "staircase-check")
      replay_staircase_check(rep, s, check);
    else if (*cmd == "staircase-trace")
      replay_staircase_trace(rep, s, check);
    else
      throw invalid_input("cannot replay reports from '" + *cmd + "'");
  }
  r.add("verified", !check.failed());
  emit(r.str(), out);
  return check.failed() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometry of antimatroidal point sets: verification, boundary tracing, convex "
               "dimension, staircases and conjecture search"};
  app.require_subcommand(1);

  std::string file, out, cls = "poly-antimatroid", claim = "staircase", format = "ascii";
  std::string ce_dir, render_fmt;
  std::vector<std::string> cuboid_args, overlays;
  std::vector<int> box_coords;
  bool check_join = false, random_spec = false;
  std::uint64_t seed = 0;
  int max_steps = 3, max_coord = 6, workers = 1, bound = 3;
  std::size_t chain_cap = 10000, subset_cap = 2'000'000, samples = 0;

  auto* verify = app.add_subcommand("verify", "Check axioms and report the class verdict");
  verify->add_option("file", file, "point file")->required();
  verify->add_option("--class", cls, "class to certify")
      ->check(CLI::IsMember({"poly-antimatroid", "poset", "antimatroidal-2d"}));
  verify->add_option("-o,--output", out, "write the report here instead of stdout");

  auto* boundary = app.add_subcommand("boundary", "Trace the lower and upper boundary chains");
  boundary->add_option("file", file)->required();
  boundary->add_flag("--check-join", check_join, "verify that the two chains join back to the set");
  boundary->add_option("--render", render_fmt, "embed a rendering (ascii or svg)")
      ->check(CLI::IsMember({"ascii", "svg"}));
  boundary->add_option("-o,--output", out);

  auto* cdim_cmd = app.add_subcommand("cdim", "Convex dimension: bounds, exact value, witnesses");
  cdim_cmd->add_option("file", file)->required();
  cdim_cmd->add_option("--chain-cap", chain_cap, "maximal chains enumerated");
  cdim_cmd->add_option("--subset-cap", subset_cap, "chain subsets tested");
  cdim_cmd->add_option("-o,--output", out);

  auto* stair = app.add_subcommand("staircase", "Generate, check and trace 3D staircases");
  stair->require_subcommand(1);
  auto* gen = stair->add_subcommand("gen", "Emit the points of a regular cuboid sequence");
  gen->add_option("--cuboid", cuboid_args, "cuboid as x0,y0,z0,x1,y1,z1 (repeatable, in order)");
  gen->add_flag("--random", random_spec, "draw a seeded random regular sequence");
  gen->add_option("--seed", seed);
  gen->add_option("--max-steps", max_steps);
  gen->add_option("--max-coord", max_coord);
  gen->add_option("-o,--output", out);
  auto* chk = stair->add_subcommand("check", "Regularity of a sequence, or staircase decision for a point set");
  chk->add_option("file", file, "point file to decide");
  chk->add_option("--cuboid", cuboid_args, "validate this sequence instead");
  chk->add_option("-o,--output", out);
  auto* trc = stair->add_subcommand("trace", "Three axis-order chains and the join verdict");
  trc->add_option("file", file)->required();
  trc->add_option("-o,--output", out);

  auto* conj = app.add_subcommand("conjecture", "Search a box for claim counterexamples");
  conj->add_option("--box", box_coords, "box maxima, e.g. --box 2 2 1")->expected(3)->required();
  conj->add_option("--claim", claim)->check(CLI::IsMember({"staircase", "cdim"}));
  conj->add_option("--bound", bound, "bound for the cdim claim");
  conj->add_option("--workers", workers);
  conj->add_option("--samples", samples, "randomized mode: number of grown samples");
  conj->add_option("--seed", seed, "randomized mode seed");
  conj->add_option("--counterexample-dir", ce_dir, "persist counterexamples as point files");
  conj->add_option("-o,--output", out);

  auto* rend = app.add_subcommand("render", "Static ascii or svg picture of a point set");
  rend->add_option("file", file)->required();
  rend->add_option("--format", format)->check(CLI::IsMember({"ascii", "svg"}));
  rend->add_option("--overlay", overlays, "boundaries and/or chains")->delimiter(',');
  rend->add_option("-o,--output", out);

  auto* replay = app.add_subcommand("replay", "Re-verify the verdicts and witnesses of a report");
  replay->add_option("file", file)->required();
  replay->add_option("-o,--output", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) return cmd_verify(file, cls, out);
    if (*boundary) return cmd_boundary(file, check_join, render_fmt, out);
    if (*cdim_cmd) return cmd_cdim(file, chain_cap, subset_cap, out);
    if (*gen) return cmd_staircase_gen(cuboid_args, random_spec, seed, max_steps, max_coord, out);
    if (*chk) return cmd_staircase_check(file, cuboid_args, out);
    if (*trc) return cmd_staircase_trace(file, out);
    if (*conj) return cmd_conjecture(box_coords, claim, bound, workers, samples, seed, ce_dir, out);
    if (*rend) return cmd_render(file, format, overlays, out);
    if (*replay) return cmd_replay(file, out);
  } catch (const io::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
