#include "flowdec/mcf.hpp"

#include <cstdio>
#include <string>

#include "mcf_internal.hpp"

namespace flowdec {

namespace detail {

void check_network(const FlowNetwork& net) {
  if (net.node_count < 2)
    throw std::invalid_argument("network needs at least source and sink");
  if (net.source < 0 || net.source >= net.node_count || net.sink < 0 ||
      net.sink >= net.node_count || net.source == net.sink)
    throw std::invalid_argument("bad source/sink");
  if (net.required_flow < 0)
    throw std::invalid_argument("required flow must be nonnegative");
  for (const McfArc& arc : net.arcs) {
    if (arc.from < 0 || arc.from >= net.node_count || arc.to < 0 ||
        arc.to >= net.node_count)
      throw std::invalid_argument("arc endpoint out of range");
    if (arc.from == arc.to)
      throw std::invalid_argument("self-loop arcs are not allowed");
    if (arc.capacity < 0 && arc.capacity != kUnboundedCapacity)
      throw std::invalid_argument("negative arc capacity");
  }
}

}  // namespace detail

FlowResult solve_mcf(const FlowNetwork& network, McfMethod method) {
  switch (method) {
    case McfMethod::NetworkSimplex:
      return solve_mcf_network_simplex(network);
    case McfMethod::SuccessiveShortestPaths:
      return solve_mcf_ssp(network);
  }
  throw std::invalid_argument("unknown MCF method");
}

std::vector<std::vector<int>> decompose_paths(const FlowNetwork& network,
                                              const FlowResult& result) {
  detail::check_network(network);
  const int M = static_cast<int>(network.arcs.size());
  if (static_cast<int>(result.arc_flow.size()) != M)
    throw std::logic_error("flow vector does not match the arc list");

  std::vector<long long> balance(network.node_count, 0);
  for (int a = 0; a < M; ++a) {
    const long long flow = result.arc_flow[a];
    if (flow < 0 || flow > network.effective_capacity(a))
      throw std::logic_error("arc flow outside [0, capacity]");
    balance[network.arcs[a].from] += flow;
    balance[network.arcs[a].to] -= flow;
  }
  for (int v = 0; v < network.node_count; ++v) {
    const long long expected = v == network.source ? network.required_flow
                               : v == network.sink ? -network.required_flow
                                                   : 0;
    if (balance[v] != expected)
      throw std::logic_error("flow is not a conserving h* flow");
  }

  std::vector<std::vector<int>> out_arcs(network.node_count);
  for (int a = 0; a < M; ++a) out_arcs[network.arcs[a].from].push_back(a);

  std::vector<long long> remaining = result.arc_flow;
  std::vector<std::vector<int>> paths;
  paths.reserve(static_cast<std::size_t>(network.required_flow));
  for (long long unit = 0; unit < network.required_flow; ++unit) {
    std::vector<int> path;
    int node = network.source;
    while (node != network.sink) {
      int chosen = -1;
      for (int a : out_arcs[node]) {
        if (remaining[a] > 0) {
          chosen = a;
          break;
        }
      }
      if (chosen < 0 || static_cast<int>(path.size()) > M)
        throw std::logic_error("flow decomposition got stuck");
      --remaining[chosen];
      path.push_back(chosen);
      node = network.arcs[chosen].to;
    }
    paths.push_back(std::move(path));
  }
  for (long long flow : remaining)
    if (flow != 0) throw std::logic_error("flow left over after peeling");
  return paths;
}

std::string to_dot(const FlowNetwork& network, const std::string& name,
                   const FlowResult* result) {
  std::string dot = "digraph \"" + name + "\" {\n";
  dot += "  rankdir=LR;\n";
  dot += "  " + std::to_string(network.source) + " [label=\"s\"];\n";
  dot += "  " + std::to_string(network.sink) + " [label=\"g\"];\n";
  char buf[160];
  for (std::size_t a = 0; a < network.arcs.size(); ++a) {
    const McfArc& arc = network.arcs[a];
    std::string cap = arc.capacity == kUnboundedCapacity
                          ? "inf"
                          : std::to_string(arc.capacity);
    if (result != nullptr)
      std::snprintf(buf, sizeof(buf), "%d -> %d [label=\"%lld/%s @ %.6g\"];\n",
                    arc.from, arc.to, result->arc_flow[a], cap.c_str(),
                    arc.cost);
    else
      std::snprintf(buf, sizeof(buf), "%d -> %d [label=\"%s @ %.6g\"];\n",
                    arc.from, arc.to, cap.c_str(), arc.cost);
    dot += "  ";
    dot += buf;
  }
  dot += "}\n";
  return dot;
}

}  // namespace flowdec
