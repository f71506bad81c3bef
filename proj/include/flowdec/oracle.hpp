#pragma once
#include <stdexcept>
#include <string>

#include "flowdec/assignment.hpp"
#include "flowdec/instance.hpp"

namespace flowdec {

/// An optimal assignment together with its value split into the shared and
/// private portions (opt = shared_part + private_part).
struct OracleResult {
  Assignment assignment;
  double opt = 0.0;
  double shared_part = 0.0;
  double private_part = 0.0;
};

class SearchSpaceExceededError : public std::runtime_error {
 public:
  SearchSpaceExceededError(double log10_size_, const std::string& what)
      : std::runtime_error(what), log10_size(log10_size_) {}
  double log10_size;
};

/// log10 of (max out-degree)^(T * total agents), the joint-trajectory count
/// the exact solver would enumerate.
double search_space_log10(const Instance& instance);

/// Upper bound on the enumerated search space: 10^7 joint trajectories.
inline constexpr double kOracleLog10Limit = 7.0;

/// Exact optimum by exhaustive enumeration of joint agent trajectories.
/// Given the positions, claims are forced: every positive reward with an
/// eligible agent present is collected, shared rewards credited to the
/// lowest-index fleet present. Ties between optima go to the
/// lexicographically smallest trajectory encoding (per-agent out-edge
/// choices, agents in fleet order then start-vertex order). Refuses
/// instances whose search space exceeds the bound.
OracleResult exact_solve(const Instance& instance, int threads = 0);

}  // namespace flowdec
