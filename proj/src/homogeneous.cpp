#include "flowdec/homogeneous.hpp"

#include <cmath>
#include <stdexcept>

namespace flowdec {

HomogeneousNetwork build_network(const RewardTable& rewards,
                                 const std::vector<int>& start_counts,
                                 const WorkspaceGraph& graph, int horizon,
                                 long long pool_size) {
  const int n = graph.vertex_count();
  const int T = horizon;
  if (pool_size < 1) throw std::invalid_argument("empty agent pool");
  if (T < 1) throw std::invalid_argument("horizon must be positive");
  if (rewards.horizon() != T || rewards.vertex_count() != n)
    throw std::invalid_argument("reward table dimensions mismatch");
  if (static_cast<int>(start_counts.size()) != n)
    throw std::invalid_argument("start counts must cover every vertex");
  long long total = 0;
  for (int c : start_counts) {
    if (c < 0) throw std::invalid_argument("negative start count");
    total += c;
  }
  if (total != pool_size)
    throw std::invalid_argument("start counts do not sum to the pool size");

  HomogeneousNetwork hom;
  hom.horizon = T;
  hom.vertex_count = n;
  FlowNetwork& net = hom.network;
  net.node_count = 2 * n * (T + 1) + 2;
  net.source = HomogeneousNetwork::source_node(T, n);
  net.sink = HomogeneousNetwork::sink_node(T, n);
  net.required_flow = pool_size;

  auto push = [&](int from, int to, long long cap, double cost, HomArcKind kind,
                  int tau, int index) {
    net.arcs.push_back({from, to, cap, cost});
    hom.arc_refs.push_back({kind, tau, index});
  };

  for (int i = 0; i < n; ++i)
    if (start_counts[i] > 0)
      push(net.source, HomogeneousNetwork::entry_node(0, i, n),
           start_counts[i], 0.0, HomArcKind::kSource, 0, i);
  for (int i = 0; i < n; ++i)
    push(HomogeneousNetwork::exit_node(T, i, n), net.sink, kUnboundedCapacity,
         0.0, HomArcKind::kGather, T, i);
  for (int tau = 0; tau <= T; ++tau)
    for (int i = 0; i < n; ++i)
      push(HomogeneousNetwork::entry_node(tau, i, n),
           HomogeneousNetwork::exit_node(tau, i, n), kUnboundedCapacity, 0.0,
           HomArcKind::kPass, tau, i);
  for (int tau = 0; tau <= T; ++tau)
    for (int i = 0; i < n; ++i)
      if (rewards.at(tau, i) > 0.0)
        push(HomogeneousNetwork::entry_node(tau, i, n),
             HomogeneousNetwork::exit_node(tau, i, n), 1, -rewards.at(tau, i),
             HomArcKind::kReward, tau, i);
  for (int tau = 0; tau < T; ++tau)
    for (int e = 0; e < graph.edge_count(); ++e)
      push(HomogeneousNetwork::exit_node(tau, graph.edge(e).from, n),
           HomogeneousNetwork::entry_node(tau + 1, graph.edge(e).to, n),
           kUnboundedCapacity, 0.0, HomArcKind::kMove, tau, e);
  return hom;
}

HomogeneousSolution decode_solution(const HomogeneousNetwork& hom,
                                    const RewardTable& rewards,
                                    const FlowResult& result) {
  const int T = hom.horizon;
  HomogeneousSolution solution;
  solution.transitions.resize(T);
  solution.claims.assign(T + 1,
                         std::vector<std::uint8_t>(hom.vertex_count, 0));
  for (std::size_t a = 0; a < hom.network.arcs.size(); ++a) {
    const long long flow = result.arc_flow[a];
    if (flow == 0) continue;
    const HomArcRef& ref = hom.arc_refs[a];
    switch (ref.kind) {
      case HomArcKind::kMove:
        solution.transitions[ref.tau].emplace_back(ref.index, flow);
        break;
      case HomArcKind::kReward:
        if (flow != 1) throw std::logic_error("reward arc flow must be 0 or 1");
        solution.claims[ref.tau][ref.index] = 1;
        break;
      case HomArcKind::kSource:
        // Source arc capacities sum to the pool, so any feasible flow
        // saturates them and matches the start counts.
        if (flow != hom.network.arcs[a].capacity)
          throw std::logic_error("start arc not saturated");
        break;
      case HomArcKind::kGather:
      case HomArcKind::kPass:
        break;
    }
  }
  // Move arcs are emitted per step in edge-id order, so the per-step
  // transition lists come out sorted already.
  for (int tau = 0; tau <= T; ++tau)
    for (int i = 0; i < hom.vertex_count; ++i)
      if (solution.claims[tau][i]) solution.value += rewards.at(tau, i);
  if (std::abs(solution.value + result.total_cost) > 1e-9)
    throw std::logic_error("decoded value disagrees with the flow cost");
  return solution;
}

HomogeneousSolution solve_homogeneous(const RewardTable& rewards,
                                      const std::vector<int>& start_counts,
                                      const WorkspaceGraph& graph, int horizon,
                                      long long pool_size, McfMethod method) {
  const HomogeneousNetwork hom =
      build_network(rewards, start_counts, graph, horizon, pool_size);
  const FlowResult result = solve_mcf(hom.network, method);
  return decode_solution(hom, rewards, result);
}

}  // namespace flowdec
