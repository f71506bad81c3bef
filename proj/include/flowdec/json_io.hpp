#pragma once
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "flowdec/assignment.hpp"
#include "flowdec/instance.hpp"
#include "flowdec/scenario.hpp"

namespace flowdec {

/// Malformed or inconsistent input file.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using json = nlohmann::ordered_json;

// Instance files: {"n", "edges", "T", "F", "fleet_sizes", "p0", "rewards"}
// with rewards[t][tau][i] for t = 0 (shared) through F (private sets).
json instance_to_json(const Instance& instance);
Instance instance_from_json(const json& j);

// Assignment files: sparse x entries and y/z index triples; fleets are
// labeled 1..F to match the reward-set numbering.
json assignment_to_json(const Assignment& assignment, const Instance& instance);
Assignment assignment_from_json(const json& j, const Instance& instance);

json sim_report_to_json(const SimReport& report);
std::string sim_report_to_csv(const SimReport& report);

Instance load_instance(const std::string& path);
Assignment load_assignment(const std::string& path, const Instance& instance);
void save_json(const json& j, const std::string& path);
void save_text(const std::string& text, const std::string& path);

/// Round-trip-exact decimal rendering of a double.
std::string format_double(double value);

}  // namespace flowdec
