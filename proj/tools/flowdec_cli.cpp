// Command-line front end: scenario generation, the three solvers plus the
// exact oracle, solution verification, a benchmark sweep, and the
// receding-horizon simulator.
#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "flowdec/core.hpp"
#include "flowdec/flowdec.hpp"
#include "flowdec/json_io.hpp"
#include "flowdec/oracle.hpp"
#include "flowdec/rng.hpp"
#include "flowdec/scenario.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using flowdec::Assignment;
using flowdec::Instance;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRefused = 3;

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

Assignment run_algorithm(const std::string& algorithm, const Instance& inst) {
  if (algorithm == "flowdec") return flowdec::flowdec(inst);
  if (algorithm == "private-first") return flowdec::private_first(inst);
  if (algorithm == "shared-first") return flowdec::shared_first(inst);
  if (algorithm == "oracle") return flowdec::exact_solve(inst).assignment;
  throw CLI::ValidationError("--algorithm",
                             "unknown algorithm \"" + algorithm + "\"");
}

struct GenerateArgs {
  flowdec::ScenarioParams params;
  std::string out;
};

int cmd_generate(const GenerateArgs& args) {
  const Instance instance = flowdec::generate(args.params);
  flowdec::save_json(flowdec::instance_to_json(instance), args.out);
  std::cerr << "wrote " << args.out << "\n";
  return kExitOk;
}

struct SolveArgs {
  std::string algorithm;
  std::string in;
  std::string out;
  std::string debug_network;
};

int cmd_solve(const SolveArgs& args) {
  const Instance instance = flowdec::load_instance(args.in);
  if (!args.debug_network.empty())
    flowdec::save_text(
        flowdec::debug_networks_dot(instance, args.algorithm),
        args.debug_network);
  const Assignment assignment = run_algorithm(args.algorithm, instance);
  if (!args.out.empty())
    flowdec::save_json(flowdec::assignment_to_json(assignment, instance),
                       args.out);
  std::cout << flowdec::format_double(
                   flowdec::total_reward(assignment, instance))
            << "\n";
  return kExitOk;
}

struct VerifyArgs {
  std::string instance_path;
  std::string solution_path;
};

int cmd_verify(const VerifyArgs& args) {
  const Instance instance = flowdec::load_instance(args.instance_path);
  const Assignment assignment =
      flowdec::load_assignment(args.solution_path, instance);
  const flowdec::ValidationReport report =
      flowdec::validate(assignment, instance);
  if (report.empty()) {
    std::cout << "ok\n";
    return kExitOk;
  }
  for (const flowdec::Violation& v : report)
    std::cout << "violation " << v.to_string() << "\n";
  return kExitVerifyFailed;
}

struct BenchmarkArgs {
  int grid = 10;
  std::vector<int> horizons;
  std::vector<int> fleets;
  int fleet_size = 5;
  int repeats = 1;
  std::uint64_t seed = 0;
  bool with_oracle = false;
  bool parallel = false;
  std::vector<std::string> algorithms = {"flowdec"};
  std::string out;
};

struct BenchmarkRow {
  int T = 0;
  int F = 0;
  int a = 0;
  int n = 0;
  std::string algorithm;
  double runtime_ms = 0.0;
  double value = 0.0;
  std::optional<double> oracle_value;
  std::optional<double> approx_ratio;
};

std::string benchmark_csv(const std::vector<BenchmarkRow>& rows,
                          bool timings_unreliable) {
  std::string csv;
  if (timings_unreliable)
    csv += "# cells ran concurrently; runtime_ms is unreliable\n";
  csv += "T,F,a,n,algorithm,runtime_ms,value,oracle_value,approx_ratio\n";
  for (const BenchmarkRow& row : rows) {
    csv += std::to_string(row.T) + "," + std::to_string(row.F) + "," +
           std::to_string(row.a) + "," + std::to_string(row.n) + "," +
           row.algorithm + "," + flowdec::format_double(row.runtime_ms) + "," +
           flowdec::format_double(row.value) + ",";
    if (row.oracle_value) csv += flowdec::format_double(*row.oracle_value);
    csv += ",";
    if (row.approx_ratio) csv += flowdec::format_double(*row.approx_ratio);
    csv += "\n";
  }
  return csv;
}

int cmd_benchmark(const BenchmarkArgs& args) {
  // Objects per reward type are fixed at 3, matching the scenario family
  // the solver family targets.
  constexpr int kObjects = 3;

  struct Cell {
    flowdec::ScenarioParams params;
  };
  std::vector<Cell> cells;
  flowdec::SplitMix64 seeder(args.seed);
  for (int T : args.horizons)
    for (int F : args.fleets)
      for (int rep = 0; rep < args.repeats; ++rep) {
        (void)rep;
        flowdec::ScenarioParams p;
        p.rows = p.cols = args.grid;
        p.horizon = T;
        p.fleet_count = F;
        p.fleet_size = args.fleet_size;
        p.objects_per_type = kObjects;
        p.seed = seeder.next();
        cells.push_back({p});
      }

  std::vector<std::vector<BenchmarkRow>> results(cells.size());
  auto run_cell = [&](std::size_t c) {
    const Cell& cell = cells[c];
    const Instance instance = flowdec::generate(cell.params);
    std::optional<double> oracle_value;
    if (args.with_oracle &&
        flowdec::search_space_log10(instance) <= flowdec::kOracleLog10Limit)
      oracle_value = flowdec::exact_solve(instance).opt;
    for (const std::string& algorithm : args.algorithms) {
      BenchmarkRow row;
      row.T = cell.params.horizon;
      row.F = cell.params.fleet_count;
      row.a = cell.params.fleet_size;
      row.n = cell.params.rows * cell.params.cols;
      row.algorithm = algorithm;
      const auto start = std::chrono::steady_clock::now();
      const Assignment assignment = run_algorithm(algorithm, instance);
      row.runtime_ms = elapsed_ms(start);
      row.value = flowdec::total_reward(assignment, instance);
      row.oracle_value = oracle_value;
      if (oracle_value && *oracle_value > 0.0)
        row.approx_ratio = row.value / *oracle_value;
      results[c].push_back(std::move(row));
    }
  };

  if (args.parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t c = 0; c < cells.size(); ++c) run_cell(c);
  } else {
    for (std::size_t c = 0; c < cells.size(); ++c) run_cell(c);
  }

  std::vector<BenchmarkRow> rows;
  for (auto& cell_rows : results)
    for (auto& row : cell_rows) rows.push_back(std::move(row));
  const std::string csv = benchmark_csv(rows, args.parallel);
  if (args.out.empty())
    std::cout << csv;
  else
    flowdec::save_text(csv, args.out);
  return kExitOk;
}

struct SimulateArgs {
  flowdec::ScenarioParams params;
  int steps = 1;
  std::string planner = "flowdec";
  std::string out;
  std::string csv;
};

int cmd_simulate(const SimulateArgs& args) {
  flowdec::Planner planner = flowdec::Planner::kFlowDec;
  if (args.planner == "private-first")
    planner = flowdec::Planner::kPrivateFirst;
  else if (args.planner == "shared-first")
    planner = flowdec::Planner::kSharedFirst;
  else if (args.planner != "flowdec")
    throw CLI::ValidationError("--planner",
                               "unknown planner \"" + args.planner + "\"");
  const flowdec::SimReport report =
      flowdec::simulate(args.params, args.steps, planner);
  if (!args.out.empty())
    flowdec::save_json(flowdec::sim_report_to_json(report), args.out);
  if (!args.csv.empty())
    flowdec::save_text(flowdec::sim_report_to_csv(report), args.csv);
  if (args.out.empty() && args.csv.empty())
    std::cout << flowdec::sim_report_to_json(report).dump(2) << "\n";
  std::cerr << "total realized reward: "
            << flowdec::format_double(report.total_realized) << "\n";
  return kExitOk;
}

void add_scenario_flags(CLI::App* cmd, flowdec::ScenarioParams& params) {
  cmd->add_option("--rows", params.rows, "grid rows")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--cols", params.cols, "grid columns")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--horizon", params.horizon, "planning horizon T")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--fleets", params.fleet_count, "number of fleets F")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--fleet-size", params.fleet_size, "agents per fleet")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--objects", params.objects_per_type,
                  "tracked objects per reward type")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", params.seed, "random seed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"heterogeneous multi-fleet task allocation"};
  app.require_subcommand(1);

  GenerateArgs generate_args;
  CLI::App* generate = app.add_subcommand("generate", "write a random instance");
  add_scenario_flags(generate, generate_args.params);
  generate->add_option("--out", generate_args.out, "output instance path")
      ->required();

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "solve an instance");
  solve->add_option("--algorithm", solve_args.algorithm, "solver to run")
      ->required()
      ->check(CLI::IsMember(
          {"flowdec", "private-first", "shared-first", "oracle"}));
  solve->add_option("--in", solve_args.in, "instance path")->required();
  solve->add_option("--out", solve_args.out, "solution output path");
  solve->add_option("--debug-network", solve_args.debug_network,
                    "dump solver networks as DOT to this path");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "check a solution");
  verify->add_option("--instance", verify_args.instance_path)->required();
  verify->add_option("--solution", verify_args.solution_path)->required();

  BenchmarkArgs bench_args;
  CLI::App* benchmark =
      app.add_subcommand("benchmark", "timing sweep over T and F");
  benchmark->add_option("--grid", bench_args.grid, "square grid side")
      ->check(CLI::PositiveNumber);
  benchmark->add_option("--horizons", bench_args.horizons, "horizon values")
      ->required();
  benchmark->add_option("--fleets", bench_args.fleets, "fleet counts")
      ->required();
  benchmark->add_option("--fleet-size", bench_args.fleet_size)
      ->check(CLI::PositiveNumber);
  benchmark->add_option("--repeats", bench_args.repeats)
      ->check(CLI::PositiveNumber);
  benchmark->add_option("--seed", bench_args.seed);
  benchmark->add_flag("--with-oracle", bench_args.with_oracle,
                      "add oracle value and ratio when the bound permits");
  benchmark->add_flag("--parallel", bench_args.parallel,
                      "run cells concurrently (timings become unreliable)");
  benchmark->add_option("--algorithms", bench_args.algorithms)
      ->check(CLI::IsMember({"flowdec", "private-first", "shared-first"}));
  benchmark->add_option("--out", bench_args.out, "CSV output path");

  SimulateArgs sim_args;
  CLI::App* simulate =
      app.add_subcommand("simulate", "receding-horizon simulation");
  add_scenario_flags(simulate, sim_args.params);
  simulate->add_option("--steps", sim_args.steps, "simulation steps")
      ->required()
      ->check(CLI::PositiveNumber);
  simulate->add_option("--planner", sim_args.planner)
      ->check(CLI::IsMember({"flowdec", "private-first", "shared-first"}));
  simulate->add_option("--out", sim_args.out, "report JSON path");
  simulate->add_option("--csv", sim_args.csv, "report CSV path");

  try {
    app.parse(argc, argv);
    if (generate->parsed()) return cmd_generate(generate_args);
    if (solve->parsed()) return cmd_solve(solve_args);
    if (verify->parsed()) return cmd_verify(verify_args);
    if (benchmark->parsed()) return cmd_benchmark(bench_args);
    if (simulate->parsed()) return cmd_simulate(sim_args);
    return kExitUsage;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const flowdec::SearchSpaceExceededError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitRefused;
  } catch (const flowdec::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
