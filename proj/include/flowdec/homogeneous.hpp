#pragma once
#include <cstdint>
#include <utility>
#include <vector>

#include "flowdec/graph.hpp"
#include "flowdec/instance.hpp"
#include "flowdec/mcf.hpp"

namespace flowdec {

/// Arc classes of the time-expanded reduction. Source arcs feed the start
/// vertices, gather arcs drain step T into the sink, pass arcs cross a
/// time-expanded vertex without collecting, reward arcs are the capacity-1
/// negative-cost copies, and move arcs follow workspace edges between
/// consecutive steps.
enum class HomArcKind : char { kSource, kGather, kPass, kReward, kMove };

struct HomArcRef {
  HomArcKind kind;
  int tau;    // time step (kSource: 0, kGather: T)
  int index;  // vertex id, or edge id for kMove arcs
};

/// A built reduction: the flow network plus enough metadata to map arcs
/// back to transitions and reward claims.
struct HomogeneousNetwork {
  FlowNetwork network;
  std::vector<HomArcRef> arc_refs;
  int horizon = 0;
  int vertex_count = 0;

  // Node layout: the two copies of vertex i at step tau sit at
  // 2*(tau*n + i) and 2*(tau*n + i) + 1; source and sink follow.
  static int entry_node(int tau, int i, int n) { return 2 * (tau * n + i); }
  static int exit_node(int tau, int i, int n) { return 2 * (tau * n + i) + 1; }
  static int source_node(int horizon, int n) { return 2 * n * (horizon + 1); }
  static int sink_node(int horizon, int n) {
    return source_node(horizon, n) + 1;
  }
};

/// Single-pool solution: transitions per step (edge id, count, sorted by
/// edge id), claim bits per step and vertex, and the collected value.
struct HomogeneousSolution {
  std::vector<std::vector<std::pair<int, long long>>> transitions;
  std::vector<std::vector<std::uint8_t>> claims;
  double value = 0.0;
};

/// Builds the min-cost-flow reduction of the single-pool problem: source
/// arcs sized by the start counts, unbounded pass/move/gather arcs, and one
/// capacity-1 arc of cost -R per positive reward cell. Required flow equals
/// the pool size.
HomogeneousNetwork build_network(const RewardTable& rewards,
                                 const std::vector<int>& start_counts,
                                 const WorkspaceGraph& graph, int horizon,
                                 long long pool_size);

/// Exact optimum of the single-pool problem, decoded from the optimal flow.
HomogeneousSolution solve_homogeneous(
    const RewardTable& rewards, const std::vector<int>& start_counts,
    const WorkspaceGraph& graph, int horizon, long long pool_size,
    McfMethod method = McfMethod::NetworkSimplex);

/// Decode of an already-solved reduction (used where the flow itself is
/// also needed, e.g. for path decomposition).
HomogeneousSolution decode_solution(const HomogeneousNetwork& hom,
                                    const RewardTable& rewards,
                                    const FlowResult& result);

}  // namespace flowdec
