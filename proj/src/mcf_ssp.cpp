#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

#include "flowdec/mcf.hpp"
#include "mcf_internal.hpp"

namespace flowdec {

namespace {

constexpr double kReducedCostTolerance = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Residual arc ids: 2a is the forward copy of arc a, 2a+1 the backward one.
struct Residual {
  std::vector<long long> capacity;
  std::vector<double> cost;
  std::vector<int> head;
  std::vector<std::vector<int>> adjacency;  // per node, ascending residual id
};

std::vector<int> topological_order(const FlowNetwork& net) {
  std::vector<int> indegree(net.node_count, 0);
  for (const McfArc& arc : net.arcs) ++indegree[arc.to];
  std::vector<std::vector<int>> out(net.node_count);
  for (int a = 0; a < static_cast<int>(net.arcs.size()); ++a)
    out[net.arcs[a].from].push_back(net.arcs[a].to);

  std::vector<int> order;
  order.reserve(net.node_count);
  for (int v = 0; v < net.node_count; ++v)
    if (indegree[v] == 0) order.push_back(v);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int w : out[order[i]])
      if (--indegree[w] == 0) order.push_back(w);
  if (static_cast<int>(order.size()) != net.node_count)
    throw std::invalid_argument("network is not a DAG");
  return order;
}

}  // namespace

FlowResult solve_mcf_ssp(const FlowNetwork& network) {
  detail::check_network(network);
  const int n = network.node_count;
  const int m = static_cast<int>(network.arcs.size());
  const long long target = network.required_flow;

  FlowResult result;
  result.arc_flow.assign(m, 0);
  if (target == 0) return result;

  Residual res;
  res.capacity.resize(2 * m);
  res.cost.resize(2 * m);
  res.head.resize(2 * m);
  res.adjacency.assign(n, {});
  for (int a = 0; a < m; ++a) {
    res.capacity[2 * a] = network.effective_capacity(a);
    res.cost[2 * a] = network.arcs[a].cost;
    res.head[2 * a] = network.arcs[a].to;
    res.capacity[2 * a + 1] = 0;
    res.cost[2 * a + 1] = -network.arcs[a].cost;
    res.head[2 * a + 1] = network.arcs[a].from;
    res.adjacency[network.arcs[a].from].push_back(2 * a);
    res.adjacency[network.arcs[a].to].push_back(2 * a + 1);
  }

  // Negative costs are fine on a DAG: one relaxation pass in topological
  // order yields valid starting potentials without Bellman-Ford iteration.
  std::vector<double> potential(n, 0.0);
  {
    std::vector<double> dist(n, kInf);
    dist[network.source] = 0.0;
    for (int v : topological_order(network)) {
      if (dist[v] == kInf) continue;
      for (int r : res.adjacency[v]) {
        if (r % 2 != 0 || res.capacity[r] <= 0) continue;
        dist[res.head[r]] = std::min(dist[res.head[r]], dist[v] + res.cost[r]);
      }
    }
    for (int v = 0; v < n; ++v)
      if (dist[v] != kInf) potential[v] = dist[v];
  }

  std::vector<double> dist(n);
  std::vector<int> parent_residual(n);
  long long pushed = 0;
  while (pushed < target) {
    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(parent_residual.begin(), parent_residual.end(), -1);
    dist[network.source] = 0.0;
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    queue.push({0.0, network.source});
    while (!queue.empty()) {
      const auto [d, v] = queue.top();
      queue.pop();
      if (d > dist[v]) continue;
      for (int r : res.adjacency[v]) {
        if (res.capacity[r] <= 0) continue;
        double reduced = res.cost[r] + potential[v] - potential[res.head[r]];
        if (reduced < 0.0) {
          if (reduced < -kReducedCostTolerance)
            throw std::logic_error("reduced cost drifted negative");
          reduced = 0.0;
        }
        const int w = res.head[r];
        if (d + reduced < dist[w]) {
          dist[w] = d + reduced;
          parent_residual[w] = r;
          queue.push({dist[w], w});
        }
      }
    }
    if (dist[network.sink] == kInf)
      throw InfeasibleNetworkError(
          target - pushed, "required flow exceeds the maximum flow by " +
                               std::to_string(target - pushed));

    const double sink_dist = dist[network.sink];
    for (int v = 0; v < n; ++v)
      potential[v] += std::min(dist[v], sink_dist);

    long long bottleneck = target - pushed;
    for (int v = network.sink; v != network.source;) {
      const int r = parent_residual[v];
      bottleneck = std::min(bottleneck, res.capacity[r]);
      v = res.head[r ^ 1];
    }
    for (int v = network.sink; v != network.source;) {
      const int r = parent_residual[v];
      res.capacity[r] -= bottleneck;
      res.capacity[r ^ 1] += bottleneck;
      v = res.head[r ^ 1];
    }
    pushed += bottleneck;
  }

  for (int a = 0; a < m; ++a) {
    result.arc_flow[a] = res.capacity[2 * a + 1];
    result.total_cost +=
        static_cast<double>(result.arc_flow[a]) * network.arcs[a].cost;
  }
  return result;
}

}  // namespace flowdec
