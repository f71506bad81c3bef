#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "flowdec/graph.hpp"
#include "flowdec/instance.hpp"
#include "flowdec/rng.hpp"

namespace flowdec {

/// Randomized tracking scenario: a rows x cols grid, one shared and F
/// private reward types seeded by `objects_per_type` objects each, and
/// uniform fleets of `fleet_size` agents.
struct ScenarioParams {
  int rows = 1;
  int cols = 1;
  int horizon = 1;
  int fleet_count = 1;
  int fleet_size = 1;
  int objects_per_type = 1;
  std::uint64_t seed = 0;
};

/// 4-neighbor grid with a self-loop at every vertex so agents can wait and
/// the random walk can stay put. Vertex (r, c) is r*cols + c; per vertex the
/// edge order is self-loop, up, down, left, right (in-bounds only).
WorkspaceGraph make_grid(int rows, int cols);

/// One step of the uniform random walk: each vertex spreads its mass evenly
/// over its out-neighbors. Conserves total mass because every vertex has an
/// out-edge. Parallelized over destination vertices for large graphs; the
/// summation order per vertex is fixed, so results do not depend on the
/// thread count.
std::vector<double> propagate(const std::vector<double>& rewards,
                              const WorkspaceGraph& graph);

/// Straightforward scatter formulation of the same walk, kept as the serial
/// reference implementation for tests and benchmarks.
std::vector<double> propagate_serial(const std::vector<double>& rewards,
                                     const WorkspaceGraph& graph);

/// Draws a random instance: objects placed uniformly with replacement per
/// reward type (reward at step 0 = object count per vertex, later steps by
/// expectation propagation), agents placed uniformly. Draw order: objects
/// for types 0..F, then agents fleet by fleet; deterministic given the seed.
Instance generate(const ScenarioParams& params);

enum class Planner { kFlowDec, kPrivateFirst, kSharedFirst };

/// Receding-horizon simulation state: true object positions per type,
/// agent counts per fleet, and the realized reward so far. Object and agent
/// totals are invariant over time.
struct SimState {
  int step = 0;
  std::vector<std::vector<int>> object_positions;  // [type][object] -> vertex
  std::vector<std::vector<int>> agent_counts;      // [fleet][vertex]
  double accrued_reward = 0.0;
};

struct SimStepRecord {
  int step = 0;
  double planned_value = 0.0;
  double realized_reward = 0.0;
  double plan_ms = 0.0;
};

struct SimReport {
  std::vector<SimStepRecord> steps;
  double total_realized = 0.0;
  double total_plan_ms = 0.0;
  SimState final_state;
};

/// Runs `steps` receding-horizon iterations: expected rewards are
/// propagated from the true object positions over the horizon, the planner
/// solves the resulting instance, only the first transition is executed,
/// co-location with the true objects is scored, and the objects take one
/// random-walk step. Deterministic given the parameters.
SimReport simulate(const ScenarioParams& params, int steps, Planner planner,
                   int threads = 0);

/// Simulation core over an arbitrary graph and explicit initial state;
/// `generate`/`simulate` are thin wrappers over this.
SimReport run_simulation(const WorkspaceGraph& graph, int horizon,
                         std::vector<int> fleet_sizes,
                         std::vector<std::vector<int>> agent_counts,
                         std::vector<std::vector<int>> object_positions,
                         int steps, Planner planner, Xoshiro256StarStar& rng,
                         int threads = 0);

}  // namespace flowdec
