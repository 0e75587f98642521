// Command line front end: solve, exact, check, bench and render over the
// text formats documented in the README.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "otg/exact.hpp"
#include "otg/gen.hpp"
#include "otg/io.hpp"
#include "otg/solver.hpp"
#include "otg/sweep.hpp"
#include "otg/visibility.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitVerification = 3;
constexpr int kExitCapExceeded = 4;

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
}

otg::Terrain load_terrain(const std::string& path) { return otg::parse_terrain(read_file(path)); }

struct SolveArgs {
  std::string input;
  std::string side = "both";
  std::string out;
  std::string trace;
  bool verify = false;
};

int cmd_solve(const SolveArgs& args) {
  const otg::Terrain t = load_terrain(args.input);

  std::ofstream trace_out;
  otg::SweepHooks left_trace, right_trace;
  otg::SolverHooks hooks;
  bool left_started = false, right_started = false;
  if (!args.trace.empty()) {
    trace_out.open(args.trace, std::ios::binary);
    if (!trace_out) throw std::runtime_error("cannot open '" + args.trace + "' for writing");
    trace_out << otg::kTraceHeader << '\n';
    left_trace.after_event = [&](const otg::SweepEventView& view) {
      if (!left_started) {
        trace_out << "# left sweep\n";
        left_started = true;
      }
      trace_out << otg::trace_line(view) << '\n';
    };
    right_trace.after_event = [&](const otg::SweepEventView& view) {
      if (!right_started) {
        trace_out << "# right sweep (mirrored indices)\n";
        right_started = true;
      }
      trace_out << otg::trace_line(view) << '\n';
    };
    hooks.left = &left_trace;
    hooks.right = &right_trace;
  }

  const otg::SolveSides sides = args.side == "left"    ? otg::SolveSides::Left
                                : args.side == "right" ? otg::SolveSides::Right
                                                       : otg::SolveSides::Both;
  const otg::GuardSolution sol = otg::approx_guard_set(t, sides, hooks);
  write_file(args.out, otg::serialize_solution(otg::to_solution_data(sol)));

  if (args.verify) {
    const auto report = otg::verify_solution(t, sol);
    if (!report.covered) {
      std::fprintf(stderr, "verification failed: %zu uncovered vertices (first: %d)\n",
                   report.uncovered.size(), report.uncovered.front());
      return kExitVerification;
    }
  }
  return kExitOk;
}

struct ExactArgs {
  std::string input;
  std::string out;
  bool reflex_only = false;
  std::size_t cap = 24;
};

int cmd_exact(const ExactArgs& args) {
  const otg::Terrain t = load_terrain(args.input);
  const auto candidates = args.reflex_only ? otg::reflex_vertices(t) : otg::all_vertices(t);
  const auto witnesses = otg::all_vertices(t);
  const auto guards =
      otg::minimum_guard_set(t, candidates, witnesses, otg::ExactOptions{.max_candidates = args.cap});

  otg::SolutionData data;
  data.guards = guards;
  data.lists.resize(guards.size());
  // Assign each witness to the first guard that sees it.
  for (otg::VertexId w : witnesses) {
    for (std::size_t i = 0; i < guards.size(); ++i) {
      if (otg::sees(t, guards[i], w)) {
        data.lists[i].push_back(w);
        break;
      }
    }
  }
  write_file(args.out, otg::serialize_solution(data));
  std::printf("optimum %zu\n", guards.size());
  return kExitOk;
}

int cmd_check(const std::string& terrain_path, const std::string& solution_path) {
  const otg::Terrain t = load_terrain(terrain_path);
  const otg::SolutionData sol = otg::parse_solution(read_file(solution_path));
  for (otg::VertexId g : sol.guards) {
    if (g < 0 || g >= static_cast<otg::VertexId>(t.size()))
      throw otg::ParseError(0, "guard index " + std::to_string(g) + " out of range");
  }
  const auto report = otg::verify_solution(t, sol.guards);
  if (!report.covered) {
    std::printf("uncovered:");
    for (otg::VertexId v : report.uncovered) std::printf(" %d", v);
    std::printf("\n");
    return kExitVerification;
  }
  std::printf("covered\n");
  return kExitOk;
}

struct BenchArgs {
  std::string sizes = "1000,10000,100000";
  std::uint64_t seeds = 3;
};

int cmd_bench(const BenchArgs& args) {
  std::vector<std::int64_t> sizes;
  std::stringstream ss(args.sizes);
  for (std::string tok; std::getline(ss, tok, ',');) sizes.push_back(std::stoll(tok));

  std::printf("%10s %8s %6s %12s %12s %12s %12s %10s %6s\n", "n", "seed", "m", "events", "heap_ops",
              "intersect", "discarded", "time_ms", "ok");
  bool all_ok = true;
  for (const std::int64_t n : sizes) {
    for (std::uint64_t seed = 0; seed < args.seeds; ++seed) {
      otg::GenParams p;
      p.seed = seed * 1000003 + 17;
      p.steps = std::max<std::int64_t>(1, (n - 2) / 2);
      p.max_run = 2;
      p.max_jump = 12;
      p.ends = otg::EndStyle::VerticalBoth;
      const otg::Terrain t = otg::random_terrain(p);

      const auto t0 = std::chrono::steady_clock::now();
      const otg::GuardSolution sol = otg::approx_guard_set(t);
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

      const auto& lc = sol.left_counters;
      const auto& rc = sol.right_counters;
      const std::uint64_t events = lc.events_left_convex + lc.events_right_convex +
                                   lc.events_left_reflex + lc.events_right_reflex +
                                   lc.intersections_total() + rc.events_left_convex +
                                   rc.events_right_convex + rc.events_left_reflex +
                                   rc.events_right_reflex + rc.intersections_total();
      const std::uint64_t m = sol.guard_count();
      bool ok = lc.kt_violations == 0 && rc.kt_violations == 0;
      ok &= lc.heap_bound_violations == 0 && rc.heap_bound_violations == 0;
      ok &= lc.intersections_fired + rc.intersections_fired <= 2 * m;
      all_ok &= ok;
      std::printf("%10lld %8llu %6llu %12llu %12llu %12llu %12llu %10.2f %6s\n",
                  static_cast<long long>(t.size()), static_cast<unsigned long long>(seed),
                  static_cast<unsigned long long>(m), static_cast<unsigned long long>(events),
                  static_cast<unsigned long long>(lc.heap_ops() + rc.heap_ops()),
                  static_cast<unsigned long long>(lc.intersections_fired + rc.intersections_fired),
                  static_cast<unsigned long long>(lc.intersections_discarded +
                                                  rc.intersections_discarded),
                  ms, ok ? "yes" : "NO");
    }
  }
  return all_ok ? kExitOk : kExitVerification;
}

struct RenderArgs {
  std::string input;
  std::string solution;
  std::string out;
};

int cmd_render(const RenderArgs& args) {
  const otg::Terrain t = load_terrain(args.input);
  if (args.solution.empty()) {
    write_file(args.out, otg::render_svg(t));
  } else {
    const otg::SolutionData sol = otg::parse_solution(read_file(args.solution));
    write_file(args.out, otg::render_svg(t, &sol));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orthogonal terrain guarding: exact and 2-approximate vertex guard sets"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "compute a guard set (two optimal one-sided sweeps)");
  solve->add_option("input", solve_args.input, "terrain file ('-' for stdin)")->required();
  solve->add_option("--side", solve_args.side, "left, right or both")
      ->check(CLI::IsMember({"left", "right", "both"}));
  solve->add_option("--out", solve_args.out, "solution file (default stdout)");
  solve->add_option("--trace", solve_args.trace, "write a sweep event trace");
  solve->add_flag("--verify", solve_args.verify, "check coverage with the oracle");

  ExactArgs exact_args;
  auto* exact = app.add_subcommand("exact", "exact minimum guard set (small instances)");
  exact->add_option("input", exact_args.input, "terrain file ('-' for stdin)")->required();
  exact->add_option("--out", exact_args.out, "solution file (default stdout)");
  exact->add_flag("--reflex-only", exact_args.reflex_only, "restrict candidates to reflex vertices");
  exact->add_option("--cap", exact_args.cap, "candidate cap (default 24)");

  std::string check_terrain, check_solution;
  auto* check = app.add_subcommand("check", "verify a solution file covers every vertex");
  check->add_option("terrain", check_terrain, "terrain file")->required();
  check->add_option("solution", check_solution, "solution file")->required();

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "timing and counter table on generated terrains");
  bench->add_option("--sizes", bench_args.sizes, "comma separated vertex counts");
  bench->add_option("--seeds", bench_args.seeds, "seeds per size");

  RenderArgs render_args;
  auto* render = app.add_subcommand("render", "emit an SVG drawing");
  render->add_option("input", render_args.input, "terrain file")->required();
  render->add_option("--solution", render_args.solution, "solution file to overlay");
  render->add_option("--out", render_args.out, "output SVG (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve) return cmd_solve(solve_args);
    if (*exact) return cmd_exact(exact_args);
    if (*check) return cmd_check(check_terrain, check_solution);
    if (*bench) return cmd_bench(bench_args);
    if (*render) return cmd_render(render_args);
  } catch (const otg::CapExceededError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitCapExceeded;
  } catch (const otg::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  } catch (const otg::TerrainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  } catch (const otg::InfeasibleError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
