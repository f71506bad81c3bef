#pragma once
#include <stdexcept>
#include <string>
#include <vector>

namespace flowdec {

/// Capacity sentinel for arcs without a real bound. No arc can carry more
/// than the required flow, so solvers substitute that value.
inline constexpr long long kUnboundedCapacity = -1;

struct McfArc {
  int from = 0;
  int to = 0;
  long long capacity = 0;  // kUnboundedCapacity for no bound
  double cost = 0.0;
};

/// Single-source single-sink min-cost-flow problem on a DAG multigraph.
/// Parallel arcs are first-class: everything is arc-indexed, never
/// endpoint-indexed.
struct FlowNetwork {
  int node_count = 0;
  std::vector<McfArc> arcs;
  int source = 0;
  int sink = 0;
  long long required_flow = 0;

  long long effective_capacity(int arc_id) const {
    const long long cap = arcs[arc_id].capacity;
    return cap == kUnboundedCapacity ? required_flow : cap;
  }
};

struct FlowResult {
  std::vector<long long> arc_flow;
  double total_cost = 0.0;
};

enum class McfMethod {
  /// Primal network simplex with a block pivot rule. Default: its runtime
  /// is driven by the network size rather than by the flow value.
  NetworkSimplex,
  /// Successive shortest augmenting paths with node potentials: initial
  /// potentials by one relaxation pass in topological order, then Dijkstra
  /// on reduced costs. Reference implementation used for cross-checking.
  SuccessiveShortestPaths,
};

class InfeasibleNetworkError : public std::runtime_error {
 public:
  InfeasibleNetworkError(long long deficit_, const std::string& what)
      : std::runtime_error(what), deficit(deficit_) {}
  long long deficit;
};

/// Integral min-cost flow of value required_flow. Throws
/// InfeasibleNetworkError naming the deficit when the requirement exceeds
/// the maximum flow.
FlowResult solve_mcf(const FlowNetwork& network,
                     McfMethod method = McfMethod::NetworkSimplex);

FlowResult solve_mcf_network_simplex(const FlowNetwork& network);
FlowResult solve_mcf_ssp(const FlowNetwork& network);

/// Splits an integral flow of value h* into h* unit source-to-sink paths
/// (lists of arc ids) by greedy peeling, lowest arc id first. Superimposing
/// the paths reproduces the flow arc-for-arc. Throws std::logic_error if
/// the input is not a conserving integral flow of the required value.
std::vector<std::vector<int>> decompose_paths(const FlowNetwork& network,
                                              const FlowResult& result);

/// Graphviz rendering for debugging; includes flow values when given.
std::string to_dot(const FlowNetwork& network, const std::string& name,
                   const FlowResult* result = nullptr);

}  // namespace flowdec
