#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "flowdec/assignment.hpp"
#include "flowdec/instance.hpp"

namespace flowdec {

/// Which fleet was credited with each shared reward collected by the
/// pooled first stage of SharedFirst. At most one fleet per (step, vertex).
class FleetAttribution {
 public:
  FleetAttribution(int fleet_count, int horizon, int vertex_count)
      : F_(fleet_count),
        T_(horizon),
        n_(vertex_count),
        bits_(static_cast<std::size_t>(fleet_count) * (horizon + 1) *
                  vertex_count,
              0) {}

  bool at(int fleet, int tau, int vertex) const {
    return bits_[offset(fleet, tau, vertex)];
  }
  void set(int fleet, int tau, int vertex) {
    bits_[offset(fleet, tau, vertex)] = 1;
  }
  int fleet_count() const { return F_; }
  int horizon() const { return T_; }
  int vertex_count() const { return n_; }

 private:
  std::size_t offset(int fleet, int tau, int vertex) const {
    return (static_cast<std::size_t>(fleet) * (T_ + 1) + tau) * n_ + vertex;
  }
  int F_, T_, n_;
  std::vector<std::uint8_t> bits_;
};

/// Per-fleet solve over the private rewards plus the shared set scaled by
/// 1/F, followed by deduplication of shared claims (first fleet in index
/// order wins, and only where a shared reward actually exists).
Assignment private_first(const Instance& instance, int threads = 0);

/// Pooled solve over the shared set, unit-path decomposition to attribute
/// collected shared rewards to fleets, then per-fleet solves over the
/// private rewards plus each fleet's attributed shared rewards. The final
/// shared claims are the attribution intersected with the second-stage
/// claims, so nothing is double counted.
Assignment shared_first(const Instance& instance, int threads = 0,
                        FleetAttribution* attribution_out = nullptr);

/// Runs both subroutines and keeps the better assignment; SharedFirst wins
/// exact ties, so the returned value is exactly the max of the two.
Assignment flowdec(const Instance& instance, int threads = 0);

/// DOT dump of every network a solver run would build, for debugging.
std::string debug_networks_dot(const Instance& instance,
                               const std::string& algorithm);

}  // namespace flowdec
