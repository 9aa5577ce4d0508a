#pragma once

// The `cofl` command line: decide, solve, gen, render.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cofl/approx.hpp"
#include "cofl/candidates.hpp"
#include "cofl/decision.hpp"
#include "cofl/io.hpp"
#include "cofl/oracle.hpp"
#include "cofl/parametric.hpp"

namespace cofl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInfeasible = 2;

// Raised for user-facing errors that map to exit code 1.
class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline std::string radius_line(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

inline std::string join(const std::vector<double>& vs) {
  std::string s;
  for (double v : vs) s += ' ' + num(v);
  return s;
}

inline AnyInstance load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_instance(buf.str());
  } catch (const ParseError& e) {
    std::string where = path;
    if (e.line() > 0) where += ":" + std::to_string(e.line()) + ":" + std::to_string(e.column());
    throw UsageError(where + ": " + e.what());
  }
}

inline void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

}  // namespace detail

struct Options {
  std::string file;
  double radius = 0.0;
  std::string engine = "exact";
  double eps = 1e-3;
  bool oracle = false;
  std::uint64_t seed = 1;
  int n = 0;
  int k = 2;
  bool circle = false;
  std::string metric = "l2";
  double length = 10.0;
  double height = 5.0;
  double circle_radius = 10.0;
  std::vector<double> centers;
  std::string output;
};

inline int cmd_decide(const Options& o, std::ostream& out) {
  const AnyInstance any = detail::load(o.file);
  if (!(o.radius > 0.0)) throw UsageError("--radius must be positive");
  const DecisionOutcome d = std::holds_alternative<Instance>(any) ? decide_segment(std::get<Instance>(any), o.radius)
                                                                  : decide_circle(std::get<CircularInstance>(any), o.radius);
  if (!d.feasible) {
    out << "NO\n";
    return kExitInfeasible;
  }
  out << "YES" << detail::join(d.packing->centers) << '\n';
  return kExitOk;
}

inline int cmd_solve(const Options& o, std::ostream& out) {
  const AnyInstance any = detail::load(o.file);
  if (const auto* circ = std::get_if<CircularInstance>(&any)) {
    if (o.engine != "fptas") throw UsageError("circular instances support only --engine fptas");
    const ApproxResult r = solve_fptas_circle(*circ, o.eps);
    if (!r.feasible) {
      out << "NO\n";
      return kExitInfeasible;
    }
    out << detail::radius_line(r.radius) << '\n'
        << "centers" << detail::join(r.packing.centers) << '\n'
        << "decision_calls " << r.decision_calls << '\n';
    return kExitOk;
  }
  const Instance& inst = std::get<Instance>(any);
  if (o.oracle) {
    const OracleReport rep = oracle_report(inst);
    out << detail::radius_line(rep.rmax) << '\n'
        << "best_candidate " << detail::num(rep.best_candidate) << '\n'
        << "sweep " << detail::num(rep.sweep) << '\n';
    if (rep.grid) out << "grid " << detail::num(*rep.grid) << '\n';
    return kExitOk;
  }
  if (o.engine == "fptas") {
    const ApproxResult r = solve_fptas_segment(inst, o.eps);
    out << detail::radius_line(r.radius) << '\n'
        << "centers" << detail::join(r.packing.centers) << '\n'
        << "decision_calls " << r.decision_calls << '\n';
    return kExitOk;
  }
  if ((o.engine == "parametric" || o.engine == "k2") && inst.metric != Metric::kEuclidean)
    throw UsageError("--engine " + o.engine + " requires the l2 metric");
  if (o.engine == "k2" && inst.k != 2) throw UsageError("--engine k2 requires k = 2");
  OptimalResult r;
  if (o.engine == "exact") r = solve_exact(inst);
  else if (o.engine == "parametric") r = solve_parametric(inst);
  else r = solve_k2(inst);
  out << detail::radius_line(r.r_max) << '\n'
      << "centers" << detail::join(r.packing.centers) << '\n'
      << "decision_calls " << r.stats.decision_calls << '\n';
  if (o.engine == "exact") out << "candidates " << r.stats.candidates << '\n';
  else out << "comparisons " << r.stats.comparisons << '\n';
  return kExitOk;
}

inline int cmd_gen(const Options& o, std::ostream& out) {
  AnyInstance any;
  if (o.circle) {
    any = gen_circular_instance(o.seed, o.n, o.k, o.circle_radius);
  } else {
    GenParams gp;
    gp.seed = o.seed;
    gp.n = o.n;
    gp.k = o.k;
    gp.segment_length = o.length;
    gp.height_max = o.height;
    gp.metric = o.metric == "linf" ? Metric::kRectilinear : Metric::kEuclidean;
    any = gen_instance(gp);
  }
  detail::write_text(o.output, to_json(any), out);
  return kExitOk;
}

inline int cmd_render(const Options& o, std::ostream& out) {
  const AnyInstance any = detail::load(o.file);
  const std::string svg = render_svg(any, Packing{o.radius, o.centers});
  detail::write_text(o.output, svg, out);
  return kExitOk;
}

// Runs the command line; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Obnoxious facility packing on a segment or a circle", "cofl"};
  app.require_subcommand(1);
  Options o;

  CLI::App* decide = app.add_subcommand("decide", "Can k facilities of radius L be placed?");
  decide->add_option("file", o.file, "Instance file")->required();
  decide->add_option("--radius", o.radius, "Facility radius L")->required();

  CLI::App* solve = app.add_subcommand("solve", "Largest common radius");
  solve->add_option("file", o.file, "Instance file")->required();
  solve->add_option("--engine", o.engine, "Solver engine")
      ->check(CLI::IsMember({"exact", "parametric", "k2", "fptas"}))
      ->capture_default_str();
  solve->add_option("--eps", o.eps, "Relative accuracy for fptas")->check(CLI::Range(0.0, 1.0));
  solve->add_flag("--stats", "Engine statistics (always printed)");
  solve->add_flag("--oracle", o.oracle, "Brute-force oracle (testing)")->group("");

  CLI::App* gen = app.add_subcommand("gen", "Write a random instance");
  gen->add_option("--seed", o.seed)->required();
  gen->add_option("--n", o.n, "Number of demand points")->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--k", o.k, "Number of facilities")->required();
  gen->add_flag("--circle", o.circle, "Circular instance");
  gen->add_option("--metric", o.metric)->check(CLI::IsMember({"l2", "linf"}))->capture_default_str();
  gen->add_option("--length", o.length, "Segment length")->capture_default_str();
  gen->add_option("--height", o.height, "Largest point height above the segment")->capture_default_str();
  gen->add_option("--circle-radius", o.circle_radius)->capture_default_str();
  gen->add_option("-o,--output", o.output, "Output file (default stdout)");

  CLI::App* render = app.add_subcommand("render", "Draw a packing as SVG");
  render->add_option("file", o.file, "Instance file")->required();
  render->add_option("--radius", o.radius)->required();
  render->add_option("--centers", o.centers, "x-coordinates (segment) or angles (circle)")->required();
  render->add_option("-o,--output", o.output, "SVG file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  try {
    if (decide->parsed()) return cmd_decide(o, out);
    if (solve->parsed()) return cmd_solve(o, out);
    if (gen->parsed()) return cmd_gen(o, out);
    return cmd_render(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace cofl::cli
