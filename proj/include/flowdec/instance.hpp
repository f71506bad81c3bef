#pragma once
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "flowdec/graph.hpp"

namespace flowdec {

/// Dense (horizon+1) x vertex_count table of nonnegative rewards.
class RewardTable {
 public:
  RewardTable(int horizon, int vertex_count, double fill = 0.0)
      : horizon_(horizon),
        n_(vertex_count),
        values_(static_cast<std::size_t>(horizon + 1) * vertex_count, fill) {}

  int horizon() const { return horizon_; }
  int vertex_count() const { return n_; }
  double at(int tau, int i) const {
    return values_[static_cast<std::size_t>(tau) * n_ + i];
  }
  double& at(int tau, int i) {
    return values_[static_cast<std::size_t>(tau) * n_ + i];
  }
  const std::vector<double>& values() const { return values_; }

  friend bool operator==(const RewardTable&, const RewardTable&) = default;

 private:
  int horizon_;
  int n_;
  std::vector<double> values_;
};

/// A full problem instance: workspace graph, horizon T, F fleets with
/// initial position counts, and F+1 reward tables (index 0 is the shared
/// set, index t >= 1 is the private set of fleet t). Immutable after
/// construction and safe to share across threads.
class Instance {
 public:
  Instance(WorkspaceGraph graph, int horizon, std::vector<int> fleet_sizes,
           std::vector<std::vector<int>> initial_positions,
           std::vector<RewardTable> rewards)
      : graph_(std::move(graph)),
        horizon_(horizon),
        fleet_sizes_(std::move(fleet_sizes)),
        initial_positions_(std::move(initial_positions)),
        rewards_(std::move(rewards)) {
    const int n = graph_.vertex_count();
    if (horizon_ < 1) throw std::invalid_argument("horizon must be positive");
    const int F = static_cast<int>(fleet_sizes_.size());
    if (F < 1) throw std::invalid_argument("need at least one fleet");
    for (int f = 0; f < F; ++f)
      if (fleet_sizes_[f] < 1)
        throw std::invalid_argument("fleet " + std::to_string(f + 1) +
                                    " must have at least one agent");
    if (static_cast<int>(initial_positions_.size()) != F)
      throw std::invalid_argument("initial positions must cover every fleet");
    for (int f = 0; f < F; ++f) {
      const auto& p0 = initial_positions_[f];
      if (static_cast<int>(p0.size()) != n)
        throw std::invalid_argument("initial positions of fleet " +
                                    std::to_string(f + 1) +
                                    " must have one count per vertex");
      long long total = 0;
      for (int c : p0) {
        if (c < 0) throw std::invalid_argument("negative position count");
        total += c;
      }
      if (total != fleet_sizes_[f])
        throw std::invalid_argument("initial positions of fleet " +
                                    std::to_string(f + 1) +
                                    " do not sum to its size");
    }
    if (static_cast<int>(rewards_.size()) != F + 1)
      throw std::invalid_argument("expected " + std::to_string(F + 1) +
                                  " reward tables");
    for (const auto& table : rewards_) {
      if (table.horizon() != horizon_ || table.vertex_count() != n)
        throw std::invalid_argument("reward table dimensions mismatch");
      for (double v : table.values())
        if (v < 0.0) throw std::invalid_argument("rewards must be nonnegative");
    }
  }

  const WorkspaceGraph& graph() const { return graph_; }
  int horizon() const { return horizon_; }
  int fleet_count() const { return static_cast<int>(fleet_sizes_.size()); }
  int fleet_size(int fleet) const { return fleet_sizes_[fleet]; }
  const std::vector<int>& fleet_sizes() const { return fleet_sizes_; }
  const std::vector<int>& initial_positions(int fleet) const {
    return initial_positions_[fleet];
  }

  /// Reward table by type: 0 = shared, t >= 1 = private set of fleet t-1.
  const RewardTable& rewards(int type) const { return rewards_[type]; }
  const RewardTable& shared_rewards() const { return rewards_[0]; }
  const RewardTable& private_rewards(int fleet) const {
    return rewards_[fleet + 1];
  }

  long long total_agents() const {
    long long total = 0;
    for (int a : fleet_sizes_) total += a;
    return total;
  }

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.graph_ == b.graph_ && a.horizon_ == b.horizon_ &&
           a.fleet_sizes_ == b.fleet_sizes_ &&
           a.initial_positions_ == b.initial_positions_ &&
           a.rewards_ == b.rewards_;
  }

 private:
  WorkspaceGraph graph_;
  int horizon_;
  std::vector<int> fleet_sizes_;
  std::vector<std::vector<int>> initial_positions_;
  std::vector<RewardTable> rewards_;
};

}  // namespace flowdec
