#pragma once
#include <utility>
#include <vector>

#include "flowdec/assignment.hpp"
#include "flowdec/graph.hpp"
#include "flowdec/instance.hpp"
#include "flowdec/rng.hpp"

namespace testutil {

using flowdec::Edge;
using flowdec::Instance;
using flowdec::RewardTable;
using flowdec::WorkspaceGraph;

// 2-vertex graph where both moving and waiting are possible.
inline WorkspaceGraph two_vertex_graph() {
  return WorkspaceGraph(2, {{0, 1}, {1, 0}, {0, 0}, {1, 1}});
}

// Builds an instance with all-zero rewards; callers fill in what they need.
struct InstanceBuilder {
  WorkspaceGraph graph;
  int horizon;
  std::vector<int> fleet_sizes;
  std::vector<std::vector<int>> p0;
  std::vector<RewardTable> rewards;

  InstanceBuilder(WorkspaceGraph g, int T, std::vector<int> sizes,
                  std::vector<std::vector<int>> positions)
      : graph(std::move(g)),
        horizon(T),
        fleet_sizes(std::move(sizes)),
        p0(std::move(positions)) {
    for (std::size_t t = 0; t <= fleet_sizes.size(); ++t)
      rewards.emplace_back(horizon, graph.vertex_count());
  }

  RewardTable& shared() { return rewards[0]; }
  RewardTable& private_of(int fleet) { return rewards[fleet + 1]; }

  Instance build() const {
    return Instance(graph, horizon, fleet_sizes, p0, rewards);
  }
};

// Random strongly-out-connected graph: a random out-edge per vertex plus a
// sprinkle of extras, self-loops allowed.
inline WorkspaceGraph random_graph(flowdec::Xoshiro256StarStar& rng, int n) {
  std::vector<Edge> edges;
  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  for (int v = 0; v < n; ++v) {
    const int to = static_cast<int>(rng.bounded(n));
    edges.push_back({v, to});
    used[v][to] = true;
  }
  const int extras = static_cast<int>(rng.bounded(2 * n + 1));
  for (int k = 0; k < extras; ++k) {
    const int from = static_cast<int>(rng.bounded(n));
    const int to = static_cast<int>(rng.bounded(n));
    if (!used[from][to]) {
      used[from][to] = true;
      edges.push_back({from, to});
    }
  }
  return WorkspaceGraph(n, std::move(edges));
}

// Random instance on a random graph: sparse rewards in [0, 4), random agent
// placement. fleet_sizes picks the fleet structure.
inline Instance random_instance(flowdec::Xoshiro256StarStar& rng, int n, int T,
                                std::vector<int> fleet_sizes,
                                bool with_shared = true) {
  WorkspaceGraph graph = random_graph(rng, n);
  const int F = static_cast<int>(fleet_sizes.size());
  std::vector<std::vector<int>> p0(F, std::vector<int>(n, 0));
  for (int f = 0; f < F; ++f)
    for (int a = 0; a < fleet_sizes[f]; ++a) ++p0[f][rng.bounded(n)];
  std::vector<RewardTable> rewards;
  for (int t = 0; t <= F; ++t) {
    RewardTable table(T, n);
    if (t > 0 || with_shared) {
      for (int tau = 0; tau <= T; ++tau)
        for (int i = 0; i < n; ++i)
          if (rng.bounded(2) == 0)
            table.at(tau, i) = static_cast<double>(rng.bounded(4000)) / 1000.0;
    }
    rewards.push_back(std::move(table));
  }
  return Instance(std::move(graph), T, std::move(fleet_sizes), std::move(p0),
                  std::move(rewards));
}

}  // namespace testutil
