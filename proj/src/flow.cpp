#include "flow.hpp"

#include <algorithm>
#include <queue>

namespace ptc::detail {

UnitFlow::UnitFlow(int nodes) : n_(nodes), cap_(nodes * nodes, 0), flow_(nodes * nodes, 0) {}

void UnitFlow::add_arc(int from, int to) { cap_[from * n_ + to] += 1; }

bool UnitFlow::augment(int source, int sink) {
  std::vector<int> parent(n_, -1);
  parent[source] = source;
  std::queue<int> queue;
  queue.push(source);
  while (!queue.empty() && parent[sink] < 0) {
    const int a = queue.front();
    queue.pop();
    for (int b = 0; b < n_; ++b) {
      if (parent[b] < 0 && residual(a, b) > 0) {
        parent[b] = a;
        queue.push(b);
      }
    }
  }
  if (parent[sink] < 0) return false;
  for (int b = sink; b != source; b = parent[b]) {
    const int a = parent[b];
    flow_[a * n_ + b] += 1;
    flow_[b * n_ + a] -= 1;
  }
  return true;
}

int UnitFlow::max_flow(int source, int sink, int limit) {
  int value = 0;
  for (int a = 0; a < n_; ++a) value += flow_[source * n_ + a];
  while ((limit < 0 || value < limit) && augment(source, sink)) ++value;
  return value;
}

std::vector<std::vector<int>> UnitFlow::take_paths(int source, int sink) {
  std::vector<std::vector<int>> paths;
  for (;;) {
    std::vector<int> parent(n_, -1);
    parent[source] = source;
    std::queue<int> queue;
    queue.push(source);
    while (!queue.empty() && parent[sink] < 0) {
      const int a = queue.front();
      queue.pop();
      for (int b = 0; b < n_; ++b) {
        if (parent[b] < 0 && flow_[a * n_ + b] > 0) {
          parent[b] = a;
          queue.push(b);
        }
      }
    }
    if (parent[sink] < 0) break;
    std::vector<int> path;
    for (int b = sink; b != source; b = parent[b]) {
      const int a = parent[b];
      flow_[a * n_ + b] -= 1;
      flow_[b * n_ + a] += 1;
      path.push_back(b);
    }
    path.push_back(source);
    std::reverse(path.begin(), path.end());
    paths.push_back(std::move(path));
  }
  return paths;
}

std::vector<std::vector<int>> disjoint_paths(const Graph& g, int x, int y, int limit) {
  std::vector<std::vector<int>> result;
  if (g.adjacent(x, y)) {
    result.push_back({x, y});
    if (limit >= 0 && limit <= 1) return result;
  }
  const int n = g.order();
  // vertex v splits into in-node 2v and out-node 2v+1
  UnitFlow net(2 * n);
  for (int v = 0; v < n; ++v) net.add_arc(2 * v, 2 * v + 1);
  for (const Edge& e : g.edges()) {
    if (e == Edge(x, y)) continue;
    net.add_arc(2 * e.u + 1, 2 * e.v);
    net.add_arc(2 * e.v + 1, 2 * e.u);
  }
  const int remaining = limit < 0 ? -1 : limit - static_cast<int>(result.size());
  net.max_flow(2 * x + 1, 2 * y, remaining);
  for (const auto& nodes : net.take_paths(2 * x + 1, 2 * y)) {
    std::vector<int> path;
    for (int node : nodes) {
      const int v = node / 2;
      if (path.empty() || path.back() != v) path.push_back(v);
    }
    result.push_back(std::move(path));
  }
  return result;
}

std::vector<std::vector<int>> edge_disjoint_paths(const Graph& g, int x, int y, int limit) {
  UnitFlow net(g.order());
  for (const Edge& e : g.edges()) net.add_undirected(e.u, e.v);
  net.max_flow(x, y, limit);
  return net.take_paths(x, y);
}

}  // namespace ptc::detail
