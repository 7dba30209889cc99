#pragma once

#include <vector>

#include "ptc/graph.hpp"

namespace ptc::detail {

/// Dense unit-capacity flow network for the small graphs this library targets.
/// Flow is kept antisymmetric, so a pair of opposite arcs models an undirected edge.
class UnitFlow {
 public:
  explicit UnitFlow(int nodes);

  void add_arc(int from, int to);
  void add_undirected(int a, int b) {
    add_arc(a, b);
    add_arc(b, a);
  }

  /// Augments until `limit` units flow (limit < 0: no limit). Returns the flow value.
  int max_flow(int source, int sink, int limit = -1);

  /// Decomposes the current flow into source-sink node sequences. Consumes the flow.
  std::vector<std::vector<int>> take_paths(int source, int sink);

 private:
  int residual(int a, int b) const { return cap_[a * n_ + b] - flow_[a * n_ + b]; }
  bool augment(int source, int sink);

  int n_;
  std::vector<int> cap_;
  std::vector<int> flow_;
};

/// Internally disjoint x-y paths as vertex sequences, at most `limit` of them
/// (limit < 0: all). The direct edge, if present, is the first path.
std::vector<std::vector<int>> disjoint_paths(const Graph& g, int x, int y, int limit = -1);

/// Edge-disjoint x-y paths as vertex sequences, at most `limit` of them.
std::vector<std::vector<int>> edge_disjoint_paths(const Graph& g, int x, int y, int limit = -1);

}  // namespace ptc::detail
