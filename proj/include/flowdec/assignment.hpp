#pragma once
#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace flowdec {

/// Decision variables of the heterogeneous problem. Transitions x are
/// stored sparsely per (fleet, step) as edge-id/count pairs sorted by edge
/// id; the claim indicators y (shared) and z (private) are dense bitsets
/// per (fleet, step) because they are scanned densely when merging fleet
/// solutions. Fleets, steps, and vertices are 0-indexed here; file formats
/// label fleets 1..F.
class Assignment {
 public:
  Assignment(int fleet_count, int horizon, int vertex_count)
      : F_(fleet_count), T_(horizon), n_(vertex_count) {
    x_.assign(F_, std::vector<std::vector<std::pair<int, long long>>>(T_));
    y_.assign(F_, std::vector<std::vector<std::uint8_t>>(
                      T_ + 1, std::vector<std::uint8_t>(n_, 0)));
    z_ = y_;
  }

  int fleet_count() const { return F_; }
  int horizon() const { return T_; }
  int vertex_count() const { return n_; }

  /// Flow of fleet agents on an edge at step tau in [0..T-1]; 0 if unset.
  long long x(int fleet, int tau, int edge_id) const {
    const auto& row = x_[fleet][tau];
    auto it = std::lower_bound(row.begin(), row.end(), edge_id,
                               [](const auto& e, int id) { return e.first < id; });
    return (it != row.end() && it->first == edge_id) ? it->second : 0;
  }

  /// Adds flow on an edge; entries stay sorted and zero entries are not kept.
  void add_x(int fleet, int tau, int edge_id, long long amount) {
    if (amount < 0) throw std::invalid_argument("negative transition count");
    if (amount == 0) return;
    auto& row = x_[fleet][tau];
    auto it = std::lower_bound(row.begin(), row.end(), edge_id,
                               [](const auto& e, int id) { return e.first < id; });
    if (it != row.end() && it->first == edge_id)
      it->second += amount;
    else
      row.insert(it, {edge_id, amount});
  }

  const std::vector<std::pair<int, long long>>& x_entries(int fleet,
                                                          int tau) const {
    return x_[fleet][tau];
  }

  bool y(int fleet, int tau, int vertex) const { return y_[fleet][tau][vertex]; }
  void set_y(int fleet, int tau, int vertex, bool value = true) {
    y_[fleet][tau][vertex] = value ? 1 : 0;
  }
  bool z(int fleet, int tau, int vertex) const { return z_[fleet][tau][vertex]; }
  void set_z(int fleet, int tau, int vertex, bool value = true) {
    z_[fleet][tau][vertex] = value ? 1 : 0;
  }

  const std::vector<std::uint8_t>& y_row(int fleet, int tau) const {
    return y_[fleet][tau];
  }
  const std::vector<std::uint8_t>& z_row(int fleet, int tau) const {
    return z_[fleet][tau];
  }

  friend bool operator==(const Assignment& a, const Assignment& b) {
    return a.F_ == b.F_ && a.T_ == b.T_ && a.n_ == b.n_ && a.x_ == b.x_ &&
           a.y_ == b.y_ && a.z_ == b.z_;
  }

 private:
  int F_;
  int T_;
  int n_;
  std::vector<std::vector<std::vector<std::pair<int, long long>>>> x_;
  std::vector<std::vector<std::vector<std::uint8_t>>> y_;
  std::vector<std::vector<std::vector<std::uint8_t>>> z_;
};

}  // namespace flowdec
