#pragma once
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace flowdec {

struct Edge {
  int from = 0;
  int to = 0;
  friend bool operator==(Edge, Edge) = default;
};

/// Directed workspace graph. Self-loops are allowed, duplicate edges are
/// rejected (transitions are keyed by edge), and every vertex must have at
/// least one outgoing edge: agents move every step and the reward random
/// walk needs somewhere to send its mass.
class WorkspaceGraph {
 public:
  WorkspaceGraph(int vertex_count, std::vector<Edge> edges)
      : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ <= 0) throw std::invalid_argument("graph needs at least one vertex");
    out_.assign(n_, {});
    in_.assign(n_, {});
    by_endpoints_.reserve(edges_.size());
    for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
      const Edge e = edges_[id];
      if (e.from < 0 || e.from >= n_ || e.to < 0 || e.to >= n_)
        throw std::invalid_argument("edge endpoint out of range: (" +
                                    std::to_string(e.from) + "," +
                                    std::to_string(e.to) + ")");
      const std::uint64_t key = pack(e.from, e.to);
      if (!by_endpoints_.emplace(key, id).second)
        throw std::invalid_argument("duplicate edge (" +
                                    std::to_string(e.from) + "," +
                                    std::to_string(e.to) + ")");
      out_[e.from].push_back(id);
      in_[e.to].push_back(id);
    }
    for (int v = 0; v < n_; ++v)
      if (out_[v].empty())
        throw std::invalid_argument("vertex " + std::to_string(v) +
                                    " has no outgoing edge");
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  Edge edge(int edge_id) const { return edges_[edge_id]; }

  /// Outgoing/incoming edge ids of a vertex, in edge-list order.
  const std::vector<int>& out_edge_ids(int v) const { return out_[v]; }
  const std::vector<int>& in_edge_ids(int v) const { return in_[v]; }
  int out_degree(int v) const { return static_cast<int>(out_[v].size()); }

  std::optional<int> edge_id(int from, int to) const {
    auto it = by_endpoints_.find(pack(from, to));
    if (it == by_endpoints_.end()) return std::nullopt;
    return it->second;
  }

  friend bool operator==(const WorkspaceGraph& a, const WorkspaceGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  static std::uint64_t pack(int from, int to) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(from)) << 32) |
           static_cast<std::uint32_t>(to);
  }

  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::unordered_map<std::uint64_t, int> by_endpoints_;
};

}  // namespace flowdec
