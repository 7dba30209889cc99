#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptc {

/// Widest vertex set a single machine word can hold.
inline constexpr int kMaxOrder = 64;

using Mask = std::uint64_t;

/// Rejected caller input: bad parameters, malformed specs, out-of-range vertices.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr Mask bit(int v) { return Mask{1} << v; }
inline constexpr Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : (bit(n) - 1); }
inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest(Mask m) { return std::countr_zero(m); }

/// Calls fn(v) for every vertex v in m, in increasing order.
template <class Fn>
inline void for_each_bit(Mask m, Fn&& fn) {
  while (m != 0) {
    fn(std::countr_zero(m));
    m &= m - 1;
  }
}

/// A subset of {0..n-1} held as a bit-set.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Mask bits) : bits_(bits) {}
  static VertexSet of(std::span<const int> members);
  static VertexSet of(std::initializer_list<int> members) {
    return of(std::span<const int>(members.begin(), members.size()));
  }
  static constexpr VertexSet range(int n) { return VertexSet(low_bits(n)); }

  constexpr Mask bits() const { return bits_; }
  int size() const { return popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool disjoint(VertexSet o) const { return (bits_ & o.bits_) == 0; }
  std::vector<int> members() const;

  void insert(int v) { bits_ |= bit(v); }
  void erase(int v) { bits_ &= ~bit(v); }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

  /// Lexicographic order on the sorted member lists.
  friend bool lex_less(VertexSet a, VertexSet b);

 private:
  Mask bits_ = 0;
};

std::string to_string(VertexSet s);

/// Unordered vertex pair, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  constexpr Edge() = default;
  constexpr Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  /// Edgeless graph on one vertex.
  Graph() : Graph(1) {}

  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  int order() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return edge_count_; }
  Mask neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return popcount(adjacency_[v]); }
  bool adjacent(int u, int v) const { return (adjacency_[u] >> v) & 1U; }
  VertexSet vertices() const { return VertexSet::range(order()); }
  bool is_complete() const { return 2 * edge_count_ == order() * (order() - 1); }

  /// Edges in lexicographic order of (u, v) with u < v.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;
  std::vector<Mask> adjacency_;
  int edge_count_ = 0;
};

/// Accumulates edges, then freezes them into a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);

  /// Adds uv; duplicates collapse. Throws InputError on a loop or out-of-range endpoint.
  GraphBuilder& add_edge(int u, int v);
  bool has_edge(int u, int v) const { return graph_.adjacent(u, v); }
  int order() const { return graph_.order(); }
  Graph build() const { return graph_; }

 private:
  Graph graph_;
};

Graph build_graph(int n, std::span<const Edge> edges);

Graph complement(const Graph& g);
int min_degree(const Graph& g);
int max_degree(const Graph& g);
bool is_connected(const Graph& g);

/// Vertices reachable from `start` without entering `blocked`.
Mask reachable(const Graph& g, int start, Mask blocked = 0);

/// True when the vertices of `within` induce a connected subgraph (false for the empty set).
bool induces_connected(const Graph& g, Mask within);

/// kappa(G): 0 for disconnected or single-vertex graphs, n-1 for K_n, otherwise the
/// smallest vertex cut, computed by vertex-split max flow over non-adjacent pairs.
int vertex_connectivity(const Graph& g);

/// Maximum number of internally disjoint x-y paths (the edge xy counts as one).
int local_vertex_connectivity(const Graph& g, int x, int y);

/// Maximum number of edge-disjoint x-y paths.
int local_edge_connectivity(const Graph& g, int x, int y);

/// lambda(G), the edge connectivity.
int edge_connectivity(const Graph& g);

std::vector<Edge> edge_boundary(const Graph& g, VertexSet x, VertexSet y);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> original;  // new label -> old label
};

InducedSubgraph induced_subgraph(const Graph& g, VertexSet x);

/// Vertices of `a` first, then vertices of `b` shifted by a.order(); no edges between.
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace ptc
