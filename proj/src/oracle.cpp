#include "flowdec/oracle.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <vector>

#include "flowdec/parallel.hpp"

namespace flowdec {

namespace {

struct AgentStart {
  int fleet;
  int start;
};

// Enumeration state: per-agent positions, presence counters per reward
// type, and the running value of forced claims. Copyable so each parallel
// branch owns one.
struct SearchContext {
  explicit SearchContext(const Instance& instance,
                         const std::vector<AgentStart>& agents)
      : inst(&instance), agents(&agents) {
    const int F = instance.fleet_count();
    const int T = instance.horizon();
    const int n = instance.graph().vertex_count();
    cells = static_cast<std::size_t>(T + 1) * n;
    fleet_presence.assign(static_cast<std::size_t>(F) * cells, 0);
    any_presence.assign(cells, 0);
    pos.resize(agents.size());
    choices.assign(agents.size() * static_cast<std::size_t>(T), 0);
    for (std::size_t a = 0; a < agents.size(); ++a) {
      pos[a] = agents[a].start;
      enter(agents[a].fleet, 0, agents[a].start);
    }
  }

  void enter(int fleet, int tau, int j) {
    const std::size_t cell = static_cast<std::size_t>(tau) *
                                 inst->graph().vertex_count() +
                             j;
    if (++fleet_presence[fleet * cells + cell] == 1)
      value += inst->private_rewards(fleet).at(tau, j);
    if (++any_presence[cell] == 1) value += inst->shared_rewards().at(tau, j);
  }

  void leave(int fleet, int tau, int j) {
    const std::size_t cell = static_cast<std::size_t>(tau) *
                                 inst->graph().vertex_count() +
                             j;
    if (--fleet_presence[fleet * cells + cell] == 0)
      value -= inst->private_rewards(fleet).at(tau, j);
    if (--any_presence[cell] == 0) value -= inst->shared_rewards().at(tau, j);
  }

  const Instance* inst;
  const std::vector<AgentStart>* agents;
  std::size_t cells = 0;
  std::vector<int> fleet_presence;
  std::vector<int> any_presence;
  std::vector<int> pos;
  std::vector<int> choices;
  double value = 0.0;

  double best_value = -std::numeric_limits<double>::infinity();
  std::vector<int> best_choices;
};

// Depth-first over per-agent out-edge choices, agent-major so the flat
// choice vector is the lexicographic trajectory encoding. Strictly-greater
// replacement keeps the first (smallest) maximizer.
void search(SearchContext& ctx, std::size_t slot) {
  const int T = ctx.inst->horizon();
  if (slot == ctx.choices.size()) {
    if (ctx.value > ctx.best_value) {
      ctx.best_value = ctx.value;
      ctx.best_choices = ctx.choices;
    }
    return;
  }
  const std::size_t agent = slot / T;
  const int tau = static_cast<int>(slot % T) + 1;
  const int fleet = (*ctx.agents)[agent].fleet;
  const int from = ctx.pos[agent];
  const auto& out = ctx.inst->graph().out_edge_ids(from);
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    const int to = ctx.inst->graph().edge(out[idx]).to;
    ctx.choices[slot] = static_cast<int>(idx);
    ctx.enter(fleet, tau, to);
    ctx.pos[agent] = to;
    search(ctx, slot + 1);
    ctx.pos[agent] = from;
    ctx.leave(fleet, tau, to);
  }
}

std::vector<AgentStart> expand_agents(const Instance& instance) {
  std::vector<AgentStart> agents;
  agents.reserve(instance.total_agents());
  for (int f = 0; f < instance.fleet_count(); ++f)
    for (int i = 0; i < instance.graph().vertex_count(); ++i)
      for (int c = 0; c < instance.initial_positions(f)[i]; ++c)
        agents.push_back({f, i});
  return agents;
}

int max_out_degree(const WorkspaceGraph& graph) {
  int deg = 0;
  for (int v = 0; v < graph.vertex_count(); ++v)
    deg = std::max(deg, graph.out_degree(v));
  return deg;
}

OracleResult assemble(const Instance& instance,
                      const std::vector<AgentStart>& agents,
                      const std::vector<int>& choices, double best_value) {
  const int F = instance.fleet_count();
  const int T = instance.horizon();
  const int n = instance.graph().vertex_count();
  const auto& graph = instance.graph();

  OracleResult result{Assignment(F, T, n)};
  std::vector<std::vector<std::uint8_t>> present(
      F + 1, std::vector<std::uint8_t>(static_cast<std::size_t>(T + 1) * n, 0));
  auto mark = [&](int type, int tau, int j) {
    present[type][static_cast<std::size_t>(tau) * n + j] = 1;
  };

  for (std::size_t a = 0; a < agents.size(); ++a) {
    int at = agents[a].start;
    mark(0, 0, at);
    mark(agents[a].fleet + 1, 0, at);
    for (int tau = 0; tau < T; ++tau) {
      const int edge_id =
          graph.out_edge_ids(at)[choices[a * static_cast<std::size_t>(T) + tau]];
      result.assignment.add_x(agents[a].fleet, tau, edge_id, 1);
      at = graph.edge(edge_id).to;
      mark(0, tau + 1, at);
      mark(agents[a].fleet + 1, tau + 1, at);
    }
  }

  // Forced claims: every positive reward with an eligible agent present is
  // collected once, shared ones by the lowest-index fleet present.
  for (int tau = 0; tau <= T; ++tau) {
    for (int j = 0; j < n; ++j) {
      const std::size_t cell = static_cast<std::size_t>(tau) * n + j;
      for (int f = 0; f < F; ++f) {
        if (present[f + 1][cell] &&
            instance.private_rewards(f).at(tau, j) > 0.0) {
          result.assignment.set_z(f, tau, j);
          result.private_part += instance.private_rewards(f).at(tau, j);
        }
      }
      if (present[0][cell] && instance.shared_rewards().at(tau, j) > 0.0) {
        for (int f = 0; f < F; ++f) {
          if (present[f + 1][cell]) {
            result.assignment.set_y(f, tau, j);
            break;
          }
        }
        result.shared_part += instance.shared_rewards().at(tau, j);
      }
    }
  }
  result.opt = result.shared_part + result.private_part;
  if (std::abs(result.opt - best_value) > 1e-9)
    throw std::logic_error("oracle bookkeeping mismatch");
  return result;
}

}  // namespace

double search_space_log10(const Instance& instance) {
  return static_cast<double>(instance.total_agents()) * instance.horizon() *
         std::log10(static_cast<double>(max_out_degree(instance.graph())));
}

OracleResult exact_solve(const Instance& instance, int threads) {
  const double log10_size = search_space_log10(instance);
  if (log10_size > kOracleLog10Limit) {
    char msg[160];
    std::snprintf(msg, sizeof(msg),
                  "joint trajectory space %d^%lld ~ 10^%.2f exceeds 10^%.0f",
                  max_out_degree(instance.graph()),
                  instance.total_agents() * instance.horizon(), log10_size,
                  kOracleLog10Limit);
    throw SearchSpaceExceededError(log10_size, msg);
  }

  const std::vector<AgentStart> agents = expand_agents(instance);
  const auto& graph = instance.graph();

  // With out-degree one everywhere the trajectories are forced; handle that
  // directly so recursion depth stays bounded by the search-space check.
  if (max_out_degree(graph) == 1) {
    SearchContext ctx(instance, agents);
    return assemble(instance, agents, ctx.choices, [&] {
      for (std::size_t a = 0; a < agents.size(); ++a) {
        int at = agents[a].start;
        for (int tau = 1; tau <= instance.horizon(); ++tau) {
          at = graph.edge(graph.out_edge_ids(at)[0]).to;
          ctx.enter(agents[a].fleet, tau, at);
        }
      }
      return ctx.value;
    }());
  }

  const int workers = resolve_threads(threads);
  const auto& first_out = graph.out_edge_ids(agents[0].start);
  const int branches = static_cast<int>(first_out.size());

  if (workers <= 1 || branches <= 1) {
    SearchContext ctx(instance, agents);
    search(ctx, 0);
    return assemble(instance, agents, ctx.best_choices, ctx.best_value);
  }

  // Parallel over the first agent's first move; the serial reduction below
  // keeps the lexicographic tie-break identical to the serial search.
  std::vector<SearchContext> contexts(branches, SearchContext(instance, agents));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(workers)
#endif
  for (int c = 0; c < branches; ++c) {
    SearchContext& ctx = contexts[c];
    const int to = graph.edge(first_out[c]).to;
    ctx.choices[0] = c;
    ctx.enter(agents[0].fleet, 1, to);
    ctx.pos[0] = to;
    search(ctx, 1);
  }
  int best = 0;
  for (int c = 1; c < branches; ++c)
    if (contexts[c].best_value > contexts[best].best_value) best = c;
  return assemble(instance, agents, contexts[best].best_choices,
                  contexts[best].best_value);
}

}  // namespace flowdec
