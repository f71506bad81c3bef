#include <algorithm>
#include <cmath>
#include <vector>

#include "flowdec/mcf.hpp"
#include "mcf_internal.hpp"

namespace flowdec {

namespace {

constexpr double kPivotTolerance = 1e-10;

enum class ArcState : char { kLower, kUpper, kTree };

// Primal network simplex over the original arcs plus one artificial arc per
// node hung off a virtual root. Capacities are integral, so every pivot
// moves an integral amount and the final flow is integral. The entering
// rule is a block search over the arc list (most negative violation within
// the block, lowest arc id on ties), which keeps runs deterministic.
class NetworkSimplex {
 public:
  explicit NetworkSimplex(const FlowNetwork& net)
      : net_(net),
        root_(net.node_count),
        arc_count_(static_cast<int>(net.arcs.size()) + net.node_count) {
    const int node_count = net.node_count + 1;
    const int m = static_cast<int>(net.arcs.size());
    src_.resize(arc_count_);
    dst_.resize(arc_count_);
    cap_.resize(arc_count_);
    cost_.resize(arc_count_);
    flow_.assign(arc_count_, 0);
    state_.assign(arc_count_, ArcState::kLower);

    double cost_sum = 1.0;
    for (int a = 0; a < m; ++a) {
      src_[a] = net.arcs[a].from;
      dst_[a] = net.arcs[a].to;
      cap_[a] = net.effective_capacity(a);
      cost_[a] = net.arcs[a].cost;
      cost_sum += std::abs(net.arcs[a].cost);
    }

    const long long h = net.required_flow;
    parent_.assign(node_count, root_);
    pred_arc_.assign(node_count, -1);
    depth_.assign(node_count, 1);
    depth_[root_] = 0;
    parent_[root_] = -1;
    pi_.assign(node_count, 0.0);
    children_.assign(node_count, {});
    for (int v = 0; v < net.node_count; ++v) {
      const long long supply = v == net.source ? h : (v == net.sink ? -h : 0);
      const int a = m + v;
      if (supply >= 0) {
        src_[a] = v;
        dst_[a] = root_;
        flow_[a] = supply;
        pi_[v] = -cost_sum;
      } else {
        src_[a] = root_;
        dst_[a] = v;
        flow_[a] = -supply;
        pi_[v] = cost_sum;
      }
      cap_[a] = h;
      cost_[a] = cost_sum;
      state_[a] = ArcState::kTree;
      pred_arc_[v] = a;
      children_[root_].push_back(v);
    }
  }

  FlowResult run() {
    const int m = static_cast<int>(net_.arcs.size());
    if (net_.required_flow > 0) pivot_loop();

    long long deficit = 0;
    for (int a = m; a < arc_count_; ++a) deficit = std::max(deficit, flow_[a]);
    if (deficit > 0)
      throw InfeasibleNetworkError(
          deficit, "required flow exceeds the maximum flow by " +
                       std::to_string(deficit));

    FlowResult result;
    result.arc_flow.assign(flow_.begin(), flow_.begin() + m);
    result.total_cost = 0.0;
    for (int a = 0; a < m; ++a)
      result.total_cost +=
          static_cast<double>(result.arc_flow[a]) * net_.arcs[a].cost;
    return result;
  }

 private:
  void pivot_loop() {
    const int block = std::max(
        64, static_cast<int>(std::sqrt(static_cast<double>(arc_count_))));
    const long long pivot_limit = 1000LL * arc_count_ + 100000;
    long long pivots = 0;
    int cursor = 0;
    while (true) {
      if (++pivots > pivot_limit)
        throw std::runtime_error("network simplex exceeded its pivot limit");
      int entering = -1;
      int direction = 0;
      double best = -kPivotTolerance;
      int scanned = 0;
      while (scanned < arc_count_) {
        const int a = cursor;
        cursor = cursor + 1 == arc_count_ ? 0 : cursor + 1;
        ++scanned;
        if (state_[a] == ArcState::kLower && cap_[a] > 0) {
          const double rc = cost_[a] + pi_[src_[a]] - pi_[dst_[a]];
          if (rc < best) {
            best = rc;
            entering = a;
            direction = +1;
          }
        } else if (state_[a] == ArcState::kUpper) {
          const double rc = cost_[a] + pi_[src_[a]] - pi_[dst_[a]];
          if (-rc < best) {
            best = -rc;
            entering = a;
            direction = -1;
          }
        }
        if (scanned % block == 0 && entering >= 0) break;
      }
      if (entering < 0) return;
      pivot(entering, direction);
    }
  }

  struct CycleArc {
    int arc;
    int sign;  // +1: flow moves with the arc, -1: against it
  };

  long long residual(const CycleArc& c) const {
    return c.sign > 0 ? cap_[c.arc] - flow_[c.arc] : flow_[c.arc];
  }

  void pivot(int entering, int direction) {
    // Flow is pushed along the entering arc (forward when it sits at its
    // lower bound, backward when at its upper bound) and returns through
    // the tree path between its endpoints.
    const int enter_tail = direction > 0 ? src_[entering] : dst_[entering];
    const int enter_head = direction > 0 ? dst_[entering] : src_[entering];

    head_side_.clear();
    tail_side_.clear();
    int a = enter_head;
    int b = enter_tail;
    while (a != b) {
      if (depth_[a] >= depth_[b]) {
        const int arc = pred_arc_[a];
        head_side_.push_back({arc, src_[arc] == a ? +1 : -1});
        a = parent_[a];
      } else {
        const int arc = pred_arc_[b];
        tail_side_.push_back({arc, dst_[arc] == b ? +1 : -1});
        b = parent_[b];
      }
    }

    const long long enter_residual =
        direction > 0 ? cap_[entering] - flow_[entering] : flow_[entering];
    long long delta = enter_residual;
    for (const CycleArc& c : head_side_) delta = std::min(delta, residual(c));
    for (const CycleArc& c : tail_side_) delta = std::min(delta, residual(c));

    // Leaving arc: first bottleneck in the fixed scan order entering arc,
    // head side, tail side.
    int leaving = entering;
    bool leaving_on_head_side = false;
    if (enter_residual != delta || delta == 0) {
      leaving = -1;
      for (const CycleArc& c : head_side_) {
        if (residual(c) == delta) {
          leaving = c.arc;
          leaving_on_head_side = true;
          break;
        }
      }
      if (leaving < 0) {
        for (const CycleArc& c : tail_side_) {
          if (residual(c) == delta) {
            leaving = c.arc;
            leaving_on_head_side = false;
            break;
          }
        }
      }
      if (leaving < 0) leaving = entering;
    }

    if (delta > 0) {
      flow_[entering] += direction > 0 ? delta : -delta;
      for (const CycleArc& c : head_side_) flow_[c.arc] += c.sign * delta;
      for (const CycleArc& c : tail_side_) flow_[c.arc] += c.sign * delta;
    }

    if (leaving == entering) {
      state_[entering] = direction > 0 ? ArcState::kUpper : ArcState::kLower;
      return;
    }

    // The leaving arc connects its deeper endpoint to the rest of the tree;
    // that endpoint's subtree is re-hung from the entering arc.
    const int cut_child = depth_[src_[leaving]] > depth_[dst_[leaving]]
                              ? src_[leaving]
                              : dst_[leaving];
    const int attach_inside = leaving_on_head_side ? enter_head : enter_tail;
    const int attach_outside = leaving_on_head_side ? enter_tail : enter_head;

    state_[entering] = ArcState::kTree;
    state_[leaving] = flow_[leaving] == 0 ? ArcState::kLower : ArcState::kUpper;

    // Reverse the parent chain attach_inside -> ... -> cut_child.
    int node = attach_inside;
    int new_parent = attach_outside;
    int new_arc = entering;
    while (true) {
      const int old_parent = parent_[node];
      const int old_arc = pred_arc_[node];
      detach_child(old_parent, node);
      parent_[node] = new_parent;
      pred_arc_[node] = new_arc;
      children_[new_parent].push_back(node);
      if (node == cut_child) break;
      new_parent = node;
      new_arc = old_arc;
      node = old_parent;
    }
    refresh_subtree(attach_inside);
  }

  void detach_child(int parent, int child) {
    auto& kids = children_[parent];
    kids.erase(std::find(kids.begin(), kids.end(), child));
  }

  // Recomputes depth and potential below `top` after a re-hang.
  void refresh_subtree(int top) {
    stack_.clear();
    stack_.push_back(top);
    while (!stack_.empty()) {
      const int v = stack_.back();
      stack_.pop_back();
      const int arc = pred_arc_[v];
      const int p = parent_[v];
      depth_[v] = depth_[p] + 1;
      pi_[v] = dst_[arc] == v ? pi_[p] + cost_[arc] : pi_[p] - cost_[arc];
      for (int child : children_[v]) stack_.push_back(child);
    }
  }

  const FlowNetwork& net_;
  int root_;
  int arc_count_;

  std::vector<int> src_, dst_;
  std::vector<long long> cap_, flow_;
  std::vector<double> cost_;
  std::vector<ArcState> state_;

  std::vector<int> parent_, pred_arc_, depth_;
  std::vector<double> pi_;
  std::vector<std::vector<int>> children_;
  std::vector<CycleArc> head_side_, tail_side_;
  std::vector<int> stack_;
};

}  // namespace

FlowResult solve_mcf_network_simplex(const FlowNetwork& network) {
  detail::check_network(network);
  return NetworkSimplex(network).run();
}

}  // namespace flowdec
