#include "flowdec/core.hpp"

#include <stdexcept>

namespace flowdec {

namespace {

void require_matching_dimensions(const Assignment& assignment,
                                 const Instance& instance) {
  if (assignment.fleet_count() != instance.fleet_count() ||
      assignment.horizon() != instance.horizon() ||
      assignment.vertex_count() != instance.graph().vertex_count())
    throw std::invalid_argument(
        "assignment dimensions do not match the instance");
}

}  // namespace

std::string Violation::to_string() const {
  std::string out = "(" + constraint + ")";
  if (fleet > 0) out += " fleet=" + std::to_string(fleet);
  if (tau >= 0) out += " tau=" + std::to_string(tau);
  if (vertex >= 0) out += " j=" + std::to_string(vertex);
  if (!detail.empty()) out += ": " + detail;
  return out;
}

double total_reward(const Assignment& assignment, const Instance& instance) {
  require_matching_dimensions(assignment, instance);
  const int F = instance.fleet_count();
  const int T = instance.horizon();
  const int n = instance.graph().vertex_count();
  const RewardTable& shared = instance.shared_rewards();

  double total = 0.0;
  for (int f = 0; f < F; ++f) {
    const RewardTable& priv = instance.private_rewards(f);
    for (int tau = 0; tau <= T; ++tau) {
      const auto& y = assignment.y_row(f, tau);
      const auto& z = assignment.z_row(f, tau);
      for (int j = 0; j < n; ++j) {
        if (y[j]) total += shared.at(tau, j);
        if (z[j]) total += priv.at(tau, j);
      }
    }
  }
  return total;
}

ValidationReport validate(const Assignment& assignment,
                          const Instance& instance) {
  require_matching_dimensions(assignment, instance);
  const int F = instance.fleet_count();
  const int T = instance.horizon();
  const int n = instance.graph().vertex_count();
  const auto& graph = instance.graph();

  ValidationReport report;
  auto add = [&report](std::string id, int fleet_label, int tau, int vertex,
                       std::string detail) {
    report.push_back(
        {std::move(id), fleet_label, tau, vertex, std::move(detail)});
  };

  for (int f = 0; f < F; ++f) {
    const long long size = instance.fleet_size(f);
    // Inflow per vertex at the previous step, i.e. positions at step tau.
    std::vector<long long> arrived(n, 0);
    for (int tau = 0; tau < T; ++tau) {
      std::vector<long long> outflow(n, 0);
      std::vector<long long> inflow(n, 0);
      for (const auto& [edge_id, amount] : assignment.x_entries(f, tau)) {
        const Edge e = graph.edge(edge_id);
        if (amount > size)
          add("dom", f + 1, tau, e.from,
              "transition count " + std::to_string(amount) +
                  " exceeds fleet size " + std::to_string(size));
        outflow[e.from] += amount;
        inflow[e.to] += amount;
      }
      for (int j = 0; j < n; ++j) {
        if (tau == 0) {
          const long long start = instance.initial_positions(f)[j];
          if (outflow[j] != start)
            add("1b", f + 1, 0, j,
                "outflow " + std::to_string(outflow[j]) +
                    " != initial count " + std::to_string(start));
        } else if (tau <= T - 2) {
          if (arrived[j] != outflow[j])
            add("1c", f + 1, tau, j,
                "arrivals " + std::to_string(arrived[j]) + " != departures " +
                    std::to_string(outflow[j]));
        }
        if (assignment.y(f, tau, j) && outflow[j] < 1)
          add("1d", f + 1, tau, j, "shared claim without an agent");
        if (assignment.z(f, tau, j) && outflow[j] < 1)
          add("1g", f + 1, tau, j, "private claim without an agent");
      }
      arrived = std::move(inflow);
    }
    for (int j = 0; j < n; ++j) {
      if (assignment.y(f, T, j) && arrived[j] < 1)
        add("1e", f + 1, T, j, "shared claim without an arriving agent");
      if (assignment.z(f, T, j) && arrived[j] < 1)
        add("1h", f + 1, T, j, "private claim without an arriving agent");
    }
  }

  // At most one fleet may claim each shared reward. The per-fleet cap on z
  // (1i) cannot be violated by the bitset representation.
  for (int tau = 0; tau <= T; ++tau) {
    for (int j = 0; j < n; ++j) {
      int claimants = 0;
      for (int f = 0; f < F; ++f)
        if (assignment.y(f, tau, j)) ++claimants;
      if (claimants > 1)
        add("1f", 0, tau, j,
            std::to_string(claimants) + " fleets claim the shared reward");
    }
  }
  return report;
}

std::vector<long long> agent_positions(const Assignment& assignment,
                                       const Instance& instance, int fleet,
                                       int tau) {
  require_matching_dimensions(assignment, instance);
  const int T = instance.horizon();
  if (fleet < 0 || fleet >= instance.fleet_count())
    throw std::out_of_range("fleet index out of range");
  if (tau < 0 || tau > T) throw std::out_of_range("step out of [0..T]");

  const auto& graph = instance.graph();
  std::vector<long long> counts(graph.vertex_count(), 0);
  if (tau < T) {
    for (const auto& [edge_id, amount] : assignment.x_entries(fleet, tau))
      counts[graph.edge(edge_id).from] += amount;
  } else {
    for (const auto& [edge_id, amount] : assignment.x_entries(fleet, T - 1))
      counts[graph.edge(edge_id).to] += amount;
  }
  return counts;
}

}  // namespace flowdec
