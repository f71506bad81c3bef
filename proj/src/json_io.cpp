#include "flowdec/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <vector>

#include "flowdec/core.hpp"

namespace flowdec {

namespace {

const json& expect(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end())
    throw FormatError(std::string("missing field \"") + key + "\"");
  return *it;
}

int expect_int(const json& j, const char* key) {
  const json& v = expect(j, key);
  if (!v.is_number_integer())
    throw FormatError(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

}  // namespace

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

json instance_to_json(const Instance& instance) {
  const int n = instance.graph().vertex_count();
  const int T = instance.horizon();
  const int F = instance.fleet_count();

  json j;
  j["n"] = n;
  json edges = json::array();
  for (const Edge& e : instance.graph().edges())
    edges.push_back(json::array({e.from, e.to}));
  j["edges"] = std::move(edges);
  j["T"] = T;
  j["F"] = F;
  j["fleet_sizes"] = instance.fleet_sizes();
  json p0 = json::array();
  for (int f = 0; f < F; ++f) p0.push_back(instance.initial_positions(f));
  j["p0"] = std::move(p0);
  json rewards = json::array();
  for (int t = 0; t <= F; ++t) {
    json table = json::array();
    for (int tau = 0; tau <= T; ++tau) {
      json row = json::array();
      for (int i = 0; i < n; ++i) row.push_back(instance.rewards(t).at(tau, i));
      table.push_back(std::move(row));
    }
    rewards.push_back(std::move(table));
  }
  j["rewards"] = std::move(rewards);
  return j;
}

Instance instance_from_json(const json& j) {
  const int n = expect_int(j, "n");
  const int T = expect_int(j, "T");
  const int F = expect_int(j, "F");

  const json& edges_json = expect(j, "edges");
  if (!edges_json.is_array()) throw FormatError("\"edges\" must be an array");
  std::vector<Edge> edges;
  edges.reserve(edges_json.size());
  for (const json& e : edges_json) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw FormatError("each edge must be a pair of vertex ids");
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }

  const json& sizes_json = expect(j, "fleet_sizes");
  if (!sizes_json.is_array() || static_cast<int>(sizes_json.size()) != F)
    throw FormatError("\"fleet_sizes\" must list one size per fleet");
  std::vector<int> fleet_sizes;
  for (const json& s : sizes_json) {
    if (!s.is_number_integer()) throw FormatError("fleet sizes must be integers");
    fleet_sizes.push_back(s.get<int>());
  }

  const json& p0_json = expect(j, "p0");
  if (!p0_json.is_array() || static_cast<int>(p0_json.size()) != F)
    throw FormatError("\"p0\" must list one count row per fleet");
  std::vector<std::vector<int>> p0;
  for (const json& row : p0_json) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw FormatError("each \"p0\" row must have one count per vertex");
    std::vector<int> counts;
    for (const json& c : row) {
      if (!c.is_number_integer())
        throw FormatError("position counts must be integers");
      counts.push_back(c.get<int>());
    }
    p0.push_back(std::move(counts));
  }

  const json& rewards_json = expect(j, "rewards");
  if (!rewards_json.is_array() ||
      static_cast<int>(rewards_json.size()) != F + 1)
    throw FormatError("\"rewards\" must hold F+1 tables");
  std::vector<RewardTable> rewards;
  for (const json& table_json : rewards_json) {
    if (!table_json.is_array() ||
        static_cast<int>(table_json.size()) != T + 1)
      throw FormatError("each reward table must have T+1 rows");
    RewardTable table(T, n);
    for (int tau = 0; tau <= T; ++tau) {
      const json& row = table_json[tau];
      if (!row.is_array() || static_cast<int>(row.size()) != n)
        throw FormatError("each reward row must have one value per vertex");
      for (int i = 0; i < n; ++i) {
        if (!row[i].is_number())
          throw FormatError("rewards must be numbers");
        table.at(tau, i) = row[i].get<double>();
      }
    }
    rewards.push_back(std::move(table));
  }

  try {
    return Instance(WorkspaceGraph(n, std::move(edges)), T,
                    std::move(fleet_sizes), std::move(p0), std::move(rewards));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

json assignment_to_json(const Assignment& assignment,
                        const Instance& instance) {
  const int F = assignment.fleet_count();
  const int T = assignment.horizon();
  const int n = assignment.vertex_count();

  json j;
  json x = json::array();
  for (int f = 0; f < F; ++f)
    for (int tau = 0; tau < T; ++tau)
      for (const auto& [edge_id, amount] : assignment.x_entries(f, tau)) {
        const Edge e = instance.graph().edge(edge_id);
        x.push_back({{"f", f + 1},
                     {"tau", tau},
                     {"i", e.from},
                     {"j", e.to},
                     {"v", amount}});
      }
  j["x"] = std::move(x);

  auto claims = [&](auto&& getter) {
    json out = json::array();
    for (int f = 0; f < F; ++f)
      for (int tau = 0; tau <= T; ++tau)
        for (int vertex = 0; vertex < n; ++vertex)
          if (getter(f, tau, vertex))
            out.push_back({{"f", f + 1}, {"tau", tau}, {"j", vertex}});
    return out;
  };
  j["y"] = claims([&](int f, int tau, int v) { return assignment.y(f, tau, v); });
  j["z"] = claims([&](int f, int tau, int v) { return assignment.z(f, tau, v); });
  j["reward"] = total_reward(assignment, instance);
  return j;
}

Assignment assignment_from_json(const json& j, const Instance& instance) {
  const int F = instance.fleet_count();
  const int T = instance.horizon();
  const int n = instance.graph().vertex_count();
  Assignment assignment(F, T, n);

  const json& x = expect(j, "x");
  if (!x.is_array()) throw FormatError("\"x\" must be an array");
  for (const json& entry : x) {
    const int f = expect_int(entry, "f");
    const int tau = expect_int(entry, "tau");
    const int i = expect_int(entry, "i");
    const int to = expect_int(entry, "j");
    const json& v = expect(entry, "v");
    if (!v.is_number_integer())
      throw FormatError("transition counts must be integers");
    const long long amount = v.get<long long>();
    if (f < 1 || f > F) throw FormatError("fleet label out of 1..F");
    if (tau < 0 || tau >= T) throw FormatError("transition step out of range");
    if (amount < 0) throw FormatError("negative transition count");
    const auto edge_id = instance.graph().edge_id(i, to);
    if (!edge_id)
      throw FormatError("transition on a nonexistent edge (" +
                        std::to_string(i) + "," + std::to_string(to) + ")");
    assignment.add_x(f - 1, tau, *edge_id, amount);
  }

  auto read_claims = [&](const char* key, auto&& setter) {
    const json& list = expect(j, key);
    if (!list.is_array())
      throw FormatError(std::string("\"") + key + "\" must be an array");
    for (const json& entry : list) {
      const int f = expect_int(entry, "f");
      const int tau = expect_int(entry, "tau");
      const int vertex = expect_int(entry, "j");
      if (f < 1 || f > F) throw FormatError("fleet label out of 1..F");
      if (tau < 0 || tau > T) throw FormatError("claim step out of range");
      if (vertex < 0 || vertex >= n) throw FormatError("claim vertex out of range");
      setter(f - 1, tau, vertex);
    }
  };
  read_claims("y", [&](int f, int tau, int v) { assignment.set_y(f, tau, v); });
  read_claims("z", [&](int f, int tau, int v) { assignment.set_z(f, tau, v); });
  return assignment;
}

json sim_report_to_json(const SimReport& report) {
  json j;
  json steps = json::array();
  for (const SimStepRecord& r : report.steps)
    steps.push_back({{"step", r.step},
                     {"planned_value", r.planned_value},
                     {"realized_reward", r.realized_reward},
                     {"plan_ms", r.plan_ms}});
  j["steps"] = std::move(steps);
  j["total_realized"] = report.total_realized;
  j["total_plan_ms"] = report.total_plan_ms;
  return j;
}

std::string sim_report_to_csv(const SimReport& report) {
  std::string csv = "step,planned_value,realized_reward,plan_ms\n";
  for (const SimStepRecord& r : report.steps) {
    csv += std::to_string(r.step) + "," + format_double(r.planned_value) +
           "," + format_double(r.realized_reward) + "," +
           format_double(r.plan_ms) + "\n";
  }
  return csv;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw FormatError(std::string("invalid JSON in ") + path + ": " + e.what());
  }
  return instance_from_json(j);
}

Assignment load_assignment(const std::string& path, const Instance& instance) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw FormatError(std::string("invalid JSON in ") + path + ": " + e.what());
  }
  return assignment_from_json(j, instance);
}

void save_json(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  out << j.dump(2) << "\n";
}

void save_text(const std::string& text, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  out << text;
}

}  // namespace flowdec
