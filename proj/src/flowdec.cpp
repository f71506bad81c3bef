#include "flowdec/flowdec.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "flowdec/core.hpp"
#include "flowdec/homogeneous.hpp"
#include "flowdec/mcf.hpp"
#include "flowdec/parallel.hpp"

namespace flowdec {

namespace {

// Runs fn(f) for every fleet, in parallel when more than one worker is
// available. Each call writes only its own slot, so results are identical
// to the serial order regardless of the thread count.
template <typename Fn>
void for_each_fleet(int fleet_count, int threads, Fn&& fn) {
  const int workers = resolve_threads(threads);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(workers) \
    if (workers > 1 && fleet_count > 1)
#endif
  for (int f = 0; f < fleet_count; ++f) fn(f);
  (void)workers;
}

void copy_fleet_solution(const HomogeneousSolution& solution, int fleet,
                         Assignment& assignment) {
  const int T = assignment.horizon();
  const int n = assignment.vertex_count();
  for (int tau = 0; tau < T; ++tau)
    for (const auto& [edge_id, amount] : solution.transitions[tau])
      assignment.add_x(fleet, tau, edge_id, amount);
  for (int tau = 0; tau <= T; ++tau)
    for (int j = 0; j < n; ++j)
      if (solution.claims[tau][j]) assignment.set_z(fleet, tau, j);
}

RewardTable scaled_shared_plus_private(const Instance& instance, int fleet) {
  const int T = instance.horizon();
  const int n = instance.graph().vertex_count();
  const double scale = 1.0 / instance.fleet_count();
  RewardTable table(T, n);
  for (int tau = 0; tau <= T; ++tau)
    for (int j = 0; j < n; ++j)
      table.at(tau, j) = instance.private_rewards(fleet).at(tau, j) +
                         instance.shared_rewards().at(tau, j) * scale;
  return table;
}

}  // namespace

Assignment private_first(const Instance& instance, int threads) {
  const int F = instance.fleet_count();
  const int T = instance.horizon();
  const int n = instance.graph().vertex_count();

  std::vector<HomogeneousSolution> solutions(F);
  for_each_fleet(F, threads, [&](int f) {
    solutions[f] =
        solve_homogeneous(scaled_shared_plus_private(instance, f),
                          instance.initial_positions(f), instance.graph(), T,
                          instance.fleet_size(f));
  });

  Assignment assignment(F, T, n);
  for (int f = 0; f < F; ++f) copy_fleet_solution(solutions[f], f, assignment);

  // Deduplicate shared claims: scan fleets in index order and credit the
  // first claimant. Claims on zero shared rewards are suppressed.
  const RewardTable& shared = instance.shared_rewards();
  for (int tau = 0; tau <= T; ++tau) {
    for (int j = 0; j < n; ++j) {
      if (shared.at(tau, j) <= 0.0) continue;
      for (int f = 0; f < F; ++f) {
        if (assignment.z(f, tau, j)) {
          assignment.set_y(f, tau, j);
          break;
        }
      }
    }
  }
  return assignment;
}

Assignment shared_first(const Instance& instance, int threads,
                        FleetAttribution* attribution_out) {
  const int F = instance.fleet_count();
  const int T = instance.horizon();
  const int n = instance.graph().vertex_count();

  // Stage 1: all agents pooled against the shared set.
  std::vector<int> pooled_starts(n, 0);
  for (int f = 0; f < F; ++f)
    for (int j = 0; j < n; ++j)
      pooled_starts[j] += instance.initial_positions(f)[j];
  const HomogeneousNetwork pooled = build_network(
      instance.shared_rewards(), pooled_starts, instance.graph(), T,
      instance.total_agents());
  const FlowResult pooled_flow = solve_mcf(pooled.network);
  const auto paths = decompose_paths(pooled.network, pooled_flow);

  // Attribute unit paths to fleets: at each start vertex, fleets take
  // paths in ascending fleet order, as many as they have agents there.
  FleetAttribution attribution(F, T, n);
  std::vector<int> taken(n, 0);
  for (const auto& path : paths) {
    const HomArcRef& first = pooled.arc_refs[path.front()];
    if (first.kind != HomArcKind::kSource)
      throw std::logic_error("pooled path does not start at the source");
    const int start_vertex = first.index;
    int slot = taken[start_vertex]++;
    int fleet = 0;
    while (fleet < F) {
      const int here = instance.initial_positions(fleet)[start_vertex];
      if (slot < here) break;
      slot -= here;
      ++fleet;
    }
    if (fleet == F)
      throw std::logic_error("more pooled paths than agents at a vertex");
    for (int arc : path) {
      const HomArcRef& ref = pooled.arc_refs[arc];
      if (ref.kind == HomArcKind::kReward)
        attribution.set(fleet, ref.tau, ref.index);
    }
  }

  // Stage 2: per-fleet solve over private rewards plus attributed shared.
  std::vector<HomogeneousSolution> solutions(F);
  for_each_fleet(F, threads, [&](int f) {
    RewardTable combined(T, n);
    for (int tau = 0; tau <= T; ++tau)
      for (int j = 0; j < n; ++j)
        combined.at(tau, j) =
            instance.private_rewards(f).at(tau, j) +
            (attribution.at(f, tau, j) ? instance.shared_rewards().at(tau, j)
                                       : 0.0);
    solutions[f] = solve_homogeneous(combined, instance.initial_positions(f),
                                     instance.graph(), T,
                                     instance.fleet_size(f));
  });

  Assignment assignment(F, T, n);
  for (int f = 0; f < F; ++f) {
    copy_fleet_solution(solutions[f], f, assignment);
    for (int tau = 0; tau <= T; ++tau)
      for (int j = 0; j < n; ++j)
        if (attribution.at(f, tau, j) && assignment.z(f, tau, j))
          assignment.set_y(f, tau, j);
  }
  if (attribution_out != nullptr) *attribution_out = attribution;
  return assignment;
}

Assignment flowdec(const Instance& instance, int threads) {
  Assignment from_private = private_first(instance, threads);
  Assignment from_shared = shared_first(instance, threads);
  const double private_value = total_reward(from_private, instance);
  const double shared_value = total_reward(from_shared, instance);
  return private_value > shared_value ? std::move(from_private)
                                      : std::move(from_shared);
}

std::string debug_networks_dot(const Instance& instance,
                               const std::string& algorithm) {
  const int F = instance.fleet_count();
  const int T = instance.horizon();
  const int n = instance.graph().vertex_count();
  std::string dot;

  auto add_private_first = [&] {
    for (int f = 0; f < F; ++f) {
      const auto hom = build_network(scaled_shared_plus_private(instance, f),
                                     instance.initial_positions(f),
                                     instance.graph(), T,
                                     instance.fleet_size(f));
      dot += to_dot(hom.network,
                    "private_first_fleet" + std::to_string(f + 1));
    }
  };
  auto add_shared_first = [&] {
    std::vector<int> pooled_starts(n, 0);
    for (int f = 0; f < F; ++f)
      for (int j = 0; j < n; ++j)
        pooled_starts[j] += instance.initial_positions(f)[j];
    const auto pooled = build_network(instance.shared_rewards(), pooled_starts,
                                      instance.graph(), T,
                                      instance.total_agents());
    dot += to_dot(pooled.network, "shared_first_pooled");

    FleetAttribution attribution(F, T, n);
    shared_first(instance, 0, &attribution);
    for (int f = 0; f < F; ++f) {
      RewardTable combined(T, n);
      for (int tau = 0; tau <= T; ++tau)
        for (int j = 0; j < n; ++j)
          combined.at(tau, j) =
              instance.private_rewards(f).at(tau, j) +
              (attribution.at(f, tau, j) ? instance.shared_rewards().at(tau, j)
                                         : 0.0);
      const auto hom = build_network(combined, instance.initial_positions(f),
                                     instance.graph(), T,
                                     instance.fleet_size(f));
      dot += to_dot(hom.network, "shared_first_fleet" + std::to_string(f + 1));
    }
  };

  if (algorithm == "private-first") {
    add_private_first();
  } else if (algorithm == "shared-first") {
    add_shared_first();
  } else if (algorithm == "flowdec") {
    add_private_first();
    add_shared_first();
  }
  return dot;
}

}  // namespace flowdec
