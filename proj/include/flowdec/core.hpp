#pragma once
#include <string>
#include <vector>

#include "flowdec/assignment.hpp"
#include "flowdec/instance.hpp"

namespace flowdec {

/// One violated constraint. `constraint` carries the short id used in
/// verification output ("1b".."1i", or "dom" for a variable out of its
/// domain); `fleet` is the 1-based fleet label (0 when not fleet-specific).
struct Violation {
  std::string constraint;
  int fleet = 0;
  int tau = -1;
  int vertex = -1;
  std::string detail;

  std::string to_string() const;
};

/// Empty iff the assignment is feasible.
using ValidationReport = std::vector<Violation>;

/// Total collected reward: sum over fleets, steps, and vertices of
/// shared rewards gated by y plus private rewards gated by z. Pure sum;
/// feasibility is the validator's job.
double total_reward(const Assignment& assignment, const Instance& instance);

/// Checks initial positions, flow continuity, the claim/flow couplings for
/// y and z, and the one-claim-per-reward caps. Throws on dimension
/// mismatch; everything else is reported, not thrown.
ValidationReport validate(const Assignment& assignment,
                          const Instance& instance);

/// Agent counts per vertex for one fleet at step tau in [0..T]. Steps
/// before T read the outgoing transitions at tau; step T reads the
/// transitions arriving from T-1.
std::vector<long long> agent_positions(const Assignment& assignment,
                                       const Instance& instance, int fleet,
                                       int tau);

}  // namespace flowdec
