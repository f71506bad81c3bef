#include "flowdec/scenario.hpp"

#include <chrono>
#include <stdexcept>

#include "flowdec/core.hpp"
#include "flowdec/flowdec.hpp"

namespace flowdec {

namespace {

void check_params(const ScenarioParams& p) {
  if (p.rows < 1) throw std::invalid_argument("rows must be positive");
  if (p.cols < 1) throw std::invalid_argument("cols must be positive");
  if (p.horizon < 1) throw std::invalid_argument("horizon must be positive");
  if (p.fleet_count < 1) throw std::invalid_argument("fleets must be positive");
  if (p.fleet_size < 1)
    throw std::invalid_argument("fleet size must be positive");
  if (p.objects_per_type < 1)
    throw std::invalid_argument("objects must be positive");
}

std::vector<std::vector<int>> draw_objects(const ScenarioParams& p,
                                           Xoshiro256StarStar& rng, int n) {
  std::vector<std::vector<int>> objects(p.fleet_count + 1);
  for (auto& type : objects) {
    type.resize(p.objects_per_type);
    for (int& vertex : type)
      vertex = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(n)));
  }
  return objects;
}

std::vector<std::vector<int>> draw_agents(const ScenarioParams& p,
                                          Xoshiro256StarStar& rng, int n) {
  std::vector<std::vector<int>> counts(p.fleet_count, std::vector<int>(n, 0));
  for (int f = 0; f < p.fleet_count; ++f)
    for (int a = 0; a < p.fleet_size; ++a)
      ++counts[f][rng.bounded(static_cast<std::uint64_t>(n))];
  return counts;
}

RewardTable expected_rewards(const std::vector<int>& object_positions,
                             const WorkspaceGraph& graph, int horizon) {
  const int n = graph.vertex_count();
  RewardTable table(horizon, n);
  std::vector<double> row(n, 0.0);
  for (int vertex : object_positions) row[vertex] += 1.0;
  for (int i = 0; i < n; ++i) table.at(0, i) = row[i];
  for (int tau = 1; tau <= horizon; ++tau) {
    row = propagate(row, graph);
    for (int i = 0; i < n; ++i) table.at(tau, i) = row[i];
  }
  return table;
}

Instance build_instance(const WorkspaceGraph& graph, int horizon,
                        const std::vector<int>& fleet_sizes,
                        const std::vector<std::vector<int>>& agent_counts,
                        const std::vector<std::vector<int>>& objects) {
  std::vector<RewardTable> rewards;
  rewards.reserve(objects.size());
  for (const auto& type : objects)
    rewards.push_back(expected_rewards(type, graph, horizon));
  return Instance(graph, horizon, fleet_sizes, agent_counts,
                  std::move(rewards));
}

}  // namespace

WorkspaceGraph make_grid(int rows, int cols) {
  if (rows < 1 || cols < 1)
    throw std::invalid_argument("grid dimensions must be positive");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(rows) * cols * 5);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int v = r * cols + c;
      edges.push_back({v, v});
      if (r > 0) edges.push_back({v, v - cols});
      if (r + 1 < rows) edges.push_back({v, v + cols});
      if (c > 0) edges.push_back({v, v - 1});
      if (c + 1 < cols) edges.push_back({v, v + 1});
    }
  }
  return WorkspaceGraph(rows * cols, std::move(edges));
}

std::vector<double> propagate(const std::vector<double>& rewards,
                              const WorkspaceGraph& graph) {
  const int n = graph.vertex_count();
  if (static_cast<int>(rewards.size()) != n)
    throw std::invalid_argument("reward row size mismatch");
  std::vector<double> next(n, 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (n >= 4096)
#endif
  for (int j = 0; j < n; ++j) {
    double sum = 0.0;
    for (int edge_id : graph.in_edge_ids(j)) {
      const int i = graph.edge(edge_id).from;
      sum += rewards[i] / graph.out_degree(i);
    }
    next[j] = sum;
  }
  return next;
}

std::vector<double> propagate_serial(const std::vector<double>& rewards,
                                     const WorkspaceGraph& graph) {
  const int n = graph.vertex_count();
  if (static_cast<int>(rewards.size()) != n)
    throw std::invalid_argument("reward row size mismatch");
  std::vector<double> next(n, 0.0);
  for (int i = 0; i < n; ++i) {
    const double share = rewards[i] / graph.out_degree(i);
    for (int edge_id : graph.out_edge_ids(i))
      next[graph.edge(edge_id).to] += share;
  }
  return next;
}

Instance generate(const ScenarioParams& params) {
  check_params(params);
  const WorkspaceGraph graph = make_grid(params.rows, params.cols);
  const int n = graph.vertex_count();
  Xoshiro256StarStar rng(params.seed);
  const auto objects = draw_objects(params, rng, n);
  const auto agents = draw_agents(params, rng, n);
  return build_instance(graph, params.horizon,
                        std::vector<int>(params.fleet_count, params.fleet_size),
                        agents, objects);
}

SimReport run_simulation(const WorkspaceGraph& graph, int horizon,
                         std::vector<int> fleet_sizes,
                         std::vector<std::vector<int>> agent_counts,
                         std::vector<std::vector<int>> object_positions,
                         int steps, Planner planner, Xoshiro256StarStar& rng,
                         int threads) {
  if (steps < 1) throw std::invalid_argument("need at least one step");
  const int F = static_cast<int>(fleet_sizes.size());
  const int n = graph.vertex_count();

  SimReport report;
  SimState state{0, std::move(object_positions), std::move(agent_counts), 0.0};

  for (int k = 0; k < steps; ++k) {
    const Instance instance = build_instance(graph, horizon, fleet_sizes,
                                             state.agent_counts,
                                             state.object_positions);

    const auto start = std::chrono::steady_clock::now();
    Assignment plan = [&] {
      try {
        switch (planner) {
          case Planner::kPrivateFirst:
            return private_first(instance, threads);
          case Planner::kSharedFirst:
            return shared_first(instance, threads);
          case Planner::kFlowDec:
          default:
            return flowdec(instance, threads);
        }
      } catch (const std::exception& e) {
        throw std::runtime_error("planning failed at step " +
                                 std::to_string(k) + ": " + e.what());
      }
    }();
    const double plan_ms =
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - start)
            .count();

    // Execute only the first transition of the plan.
    for (int f = 0; f < F; ++f) {
      std::vector<long long> next = agent_positions(plan, instance, f, 1);
      for (int j = 0; j < n; ++j)
        state.agent_counts[f][j] = static_cast<int>(next[j]);
    }

    // Score co-location with the true objects: each object counts once per
    // step no matter how many agents sit on it.
    double realized = 0.0;
    std::vector<std::uint8_t> any(n, 0);
    for (int f = 0; f < F; ++f)
      for (int j = 0; j < n; ++j)
        if (state.agent_counts[f][j] > 0) any[j] = 1;
    for (int vertex : state.object_positions[0])
      if (any[vertex]) realized += 1.0;
    for (int f = 0; f < F; ++f)
      for (int vertex : state.object_positions[f + 1])
        if (state.agent_counts[f][vertex] > 0) realized += 1.0;

    // The objects take one random-walk step.
    for (auto& type : state.object_positions) {
      for (int& vertex : type) {
        const auto& out = graph.out_edge_ids(vertex);
        vertex = graph.edge(out[rng.bounded(out.size())]).to;
      }
    }

    state.accrued_reward += realized;
    state.step = k + 1;
    report.steps.push_back(
        {k, total_reward(plan, instance), realized, plan_ms});
    report.total_realized += realized;
    report.total_plan_ms += plan_ms;
  }
  report.final_state = std::move(state);
  return report;
}

SimReport simulate(const ScenarioParams& params, int steps, Planner planner,
                   int threads) {
  check_params(params);
  const WorkspaceGraph graph = make_grid(params.rows, params.cols);
  Xoshiro256StarStar rng(params.seed);
  auto objects = draw_objects(params, rng, graph.vertex_count());
  auto agents = draw_agents(params, rng, graph.vertex_count());
  return run_simulation(graph, params.horizon,
                        std::vector<int>(params.fleet_count, params.fleet_size),
                        std::move(agents), std::move(objects), steps, planner,
                        rng, threads);
}

}  // namespace flowdec
