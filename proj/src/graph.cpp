#include "ptc/graph.hpp"

#include <algorithm>
#include <sstream>

#include "flow.hpp"

namespace ptc {

VertexSet VertexSet::of(std::span<const int> members) {
  Mask m = 0;
  for (int v : members) {
    if (v < 0 || v >= kMaxOrder) throw InputError("vertex " + std::to_string(v) + " outside 0..63");
    m |= bit(v);
  }
  return VertexSet(m);
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for_each_bit(bits_, [&](int v) { out.push_back(v); });
  return out;
}

bool lex_less(VertexSet a, VertexSet b) {
  Mask x = a.bits_;
  Mask y = b.bits_;
  while (x != 0 && y != 0) {
    const int vx = lowest(x);
    const int vy = lowest(y);
    if (vx != vy) return vx < vy;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

std::string to_string(VertexSet s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for_each_bit(s.bits(), [&](int v) {
    out << (first ? "" : ",") << v;
    first = false;
  });
  out << '}';
  return out.str();
}

Graph::Graph(int n) {
  if (n < 1 || n > kMaxOrder) {
    throw InputError("graph order must be in 1..64, got " + std::to_string(n));
  }
  adjacency_.assign(n, 0);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < order(); ++u) {
    for_each_bit(adjacency_[u] & ~low_bits(u + 1), [&](int v) { out.emplace_back(u, v); });
  }
  return out;
}

GraphBuilder::GraphBuilder(int n) : graph_(n) {}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
  const int n = graph_.order();
  if (u < 0 || v < 0 || u >= n || v >= n) {
    throw InputError("edge " + std::to_string(u) + "-" + std::to_string(v) + " has an endpoint outside 0.." +
                     std::to_string(n - 1));
  }
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  if (!graph_.adjacent(u, v)) {
    graph_.adjacency_[u] |= bit(v);
    graph_.adjacency_[v] |= bit(u);
    ++graph_.edge_count_;
  }
  return *this;
}

Graph build_graph(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const Edge& e : edges) b.add_edge(e.u, e.v);
  return b.build();
}

Graph complement(const Graph& g) {
  const int n = g.order();
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) b.add_edge(u, v);
    }
  }
  return b.build();
}

int min_degree(const Graph& g) {
  int d = g.order();
  for (int v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

int max_degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

Mask reachable(const Graph& g, int start, Mask blocked) {
  Mask seen = bit(start);
  Mask frontier = seen;
  while (frontier != 0) {
    Mask next = 0;
    for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
    next &= ~seen & ~blocked;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool induces_connected(const Graph& g, Mask within) {
  if (within == 0) return false;
  Mask seen = bit(lowest(within));
  Mask frontier = seen;
  while (frontier != 0) {
    Mask next = 0;
    for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == within;
}

bool is_connected(const Graph& g) { return reachable(g, 0) == g.vertices().bits(); }

int local_vertex_connectivity(const Graph& g, int x, int y) {
  return static_cast<int>(detail::disjoint_paths(g, x, y).size());
}

int local_edge_connectivity(const Graph& g, int x, int y) {
  detail::UnitFlow net(g.order());
  for (const Edge& e : g.edges()) net.add_undirected(e.u, e.v);
  return net.max_flow(x, y);
}

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n == 1 || !is_connected(g)) return 0;
  if (g.is_complete()) return n - 1;
  int best = min_degree(g);
  // Some vertex among the first best+1 lies outside a minimum cut, and is
  // separated by it from a non-neighbour.
  for (int x = 0; x <= best && x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (y == x || g.adjacent(x, y)) continue;
      best = std::min(best, static_cast<int>(detail::disjoint_paths(g, x, y, best).size()));
    }
  }
  return best;
}

int edge_connectivity(const Graph& g) {
  const int n = g.order();
  if (n == 1) return 0;
  int best = min_degree(g);
  for (int y = 1; y < n && best > 0; ++y) {
    detail::UnitFlow net(n);
    for (const Edge& e : g.edges()) net.add_undirected(e.u, e.v);
    best = std::min(best, net.max_flow(0, y, best));
  }
  return best;
}

std::vector<Edge> edge_boundary(const Graph& g, VertexSet x, VertexSet y) {
  if (!x.disjoint(y)) throw InputError("edge_boundary needs disjoint vertex sets");
  const Mask all = g.vertices().bits();
  if ((x.bits() & ~all) != 0 || (y.bits() & ~all) != 0) throw InputError("vertex set exceeds graph order");
  std::vector<Edge> out;
  for_each_bit(x.bits(), [&](int u) {
    for_each_bit(g.neighbors(u) & y.bits(), [&](int v) { out.emplace_back(u, v); });
  });
  std::sort(out.begin(), out.end());
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet x) {
  if (x.empty()) throw InputError("induced subgraph of an empty vertex set");
  if (!x.subset_of(g.vertices())) throw InputError("vertex set exceeds graph order");
  InducedSubgraph out{Graph(x.size()), x.members()};
  std::vector<int> label(g.order(), -1);
  for (int i = 0; i < static_cast<int>(out.original.size()); ++i) label[out.original[i]] = i;
  GraphBuilder b(x.size());
  for (int u : out.original) {
    for_each_bit(g.neighbors(u) & x.bits(), [&](int v) {
      if (u < v) b.add_edge(label[u], label[v]);
    });
  }
  out.graph = b.build();
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int shift = a.order();
  GraphBuilder out(a.order() + b.order());
  for (const Edge& e : a.edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : b.edges()) out.add_edge(e.u + shift, e.v + shift);
  return out.build();
}

}  // namespace ptc
