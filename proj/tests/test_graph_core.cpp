#include <doctest.h>

#include "oracles.hpp"
#include "ptc/generators.hpp"
#include "ptc/graph.hpp"

using namespace ptc;

namespace {

Graph star(int leaves) {
  GraphBuilder b(leaves + 1);
  for (int v = 1; v <= leaves; ++v) b.add_edge(0, v);
  return b.build();
}

Graph petersen() {
  GraphBuilder b(10);
  for (int i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, i + 5);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return b.build();
}

}  // namespace

TEST_SUITE("graph_core") {
  TEST_CASE("build_graph collapses duplicates and rejects bad edges") {
    const std::vector<Edge> tri{{0, 1}, {1, 2}, {0, 2}};
    CHECK(build_graph(3, tri).edge_count() == 3);
    CHECK(build_graph(4, {}).edge_count() == 0);
    const std::vector<Edge> dup{{0, 1}, {1, 0}};
    CHECK(build_graph(2, dup).edge_count() == 1);
    GraphBuilder b(3);
    CHECK_THROWS_AS(b.add_edge(0, 3), InputError);
    CHECK_THROWS_AS(b.add_edge(1, 1), InputError);
    CHECK_THROWS_AS(GraphBuilder(0), InputError);
    CHECK_THROWS_AS(GraphBuilder(65), InputError);
  }

  TEST_CASE("edges come out sorted") {
    const Graph g = cycle(4);
    const std::vector<Edge> expect{{0, 1}, {0, 3}, {1, 2}, {2, 3}};
    CHECK(g.edges() == expect);
  }

  TEST_CASE("complement") {
    CHECK(complement(complete(5)).edge_count() == 0);
    CHECK(complement(empty_graph(4)) == complete(4));
    const Graph c5 = cycle(5);
    CHECK(oracle::relabel(complement(c5), {0, 2, 4, 1, 3}) == c5);
  }

  TEST_CASE("degrees") {
    CHECK(min_degree(complete(6)) == 5);
    CHECK(max_degree(complete(6)) == 5);
    CHECK(min_degree(star(3)) == 1);
    CHECK(max_degree(star(3)) == 3);
    const Graph h = harary(8, 3);
    CHECK(min_degree(h) == 3);
    CHECK(max_degree(h) == 3);
  }

  TEST_CASE("connectedness") {
    CHECK(is_connected(path(5)));
    CHECK_FALSE(is_connected(disjoint_union(complete(2), complete(2))));
    CHECK(is_connected(Graph(1)));
  }

  TEST_CASE("vertex connectivity on named graphs") {
    CHECK(vertex_connectivity(complete(5)) == 4);
    CHECK(vertex_connectivity(harary(10, 4)) == 4);
    CHECK(vertex_connectivity(wheel(5)) == 3);
    CHECK(vertex_connectivity(Graph(1)) == 0);
    CHECK(vertex_connectivity(empty_graph(3)) == 0);
    CHECK(vertex_connectivity(petersen()) == 3);
    CHECK(vertex_connectivity(path(2)) == 1);
  }

  TEST_CASE("vertex connectivity matches the cut oracle on every graph up to 5 vertices") {
    for (int n = 1; n <= 5; ++n) {
      const int pairs = n * (n - 1) / 2;
      for (int sub = 0; sub < (1 << pairs); ++sub) {
        GraphBuilder b(n);
        int i = 0;
        for (int u = 0; u < n; ++u) {
          for (int v = u + 1; v < n; ++v, ++i) {
            if ((sub >> i) & 1) b.add_edge(u, v);
          }
        }
        const Graph g = b.build();
        REQUIRE(vertex_connectivity(g) == oracle::vertex_connectivity(g));
      }
    }
  }

  TEST_CASE("vertex connectivity matches the cut oracle on random 6-vertex graphs") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 400; ++t) {
      const Graph g = oracle::random_graph(rng, 6, 0.2 + 0.6 * (t % 5) / 4.0);
      REQUIRE(vertex_connectivity(g) == oracle::vertex_connectivity(g));
    }
  }

  TEST_CASE("local connectivities") {
    const Graph k4 = complete(4);
    CHECK(local_vertex_connectivity(k4, 0, 1) == 3);
    CHECK(local_edge_connectivity(k4, 0, 1) == 3);
    CHECK(edge_connectivity(cycle(6)) == 2);
    CHECK(edge_connectivity(disjoint_union(cycle(3), cycle(3))) == 0);
  }

  TEST_CASE("edge boundary") {
    CHECK(edge_boundary(complete(4), VertexSet::of({0}), VertexSet::of({1, 2, 3})).size() == 3);
    const Graph two_k2 = disjoint_union(complete(2), complete(2));
    CHECK(edge_boundary(two_k2, VertexSet::of({0, 1}), VertexSet::of({2, 3})).empty());
    CHECK(edge_boundary(complete_bipartite(3, 3), VertexSet::of({0, 1, 2}), VertexSet::of({3, 4, 5})).size() == 9);
    CHECK_THROWS_AS(edge_boundary(complete(4), VertexSet::of({0, 1}), VertexSet::of({1, 2})), InputError);
  }

  TEST_CASE("induced subgraph") {
    CHECK(induced_subgraph(complete(5), VertexSet::of({0, 2, 4})).graph == complete(3));
    CHECK(induced_subgraph(cycle(6), VertexSet::of({0, 2, 4})).graph.edge_count() == 0);
    const auto outer = induced_subgraph(petersen(), VertexSet::of({0, 1, 2, 3, 4}));
    CHECK(outer.graph == cycle(5));
    CHECK(outer.original == std::vector<int>{0, 1, 2, 3, 4});
    CHECK_THROWS_AS(induced_subgraph(cycle(4), VertexSet()), InputError);
  }

  TEST_CASE("random graph invariants") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 1000; ++t) {
      const int n = 2 + t % 7;
      const Graph g = oracle::random_graph(rng, n, 0.5);
      int degree_sum = 0;
      for (int v = 0; v < n; ++v) {
        REQUIRE_FALSE(g.adjacent(v, v));
        degree_sum += g.degree(v);
        for (int u = 0; u < n; ++u) REQUIRE(g.adjacent(u, v) == g.adjacent(v, u));
      }
      REQUIRE(degree_sum == 2 * g.edge_count());
      REQUIRE(vertex_connectivity(g) <= min_degree(g));
      REQUIRE((vertex_connectivity(g) == 0) == !is_connected(g));
      REQUIRE(complement(complement(g)) == g);
      REQUIRE(g.edge_count() + complement(g).edge_count() == n * (n - 1) / 2);
    }
  }

  TEST_CASE("vertex set helpers") {
    const VertexSet s = VertexSet::of({3, 1, 4});
    CHECK(s.size() == 3);
    CHECK(s.members() == std::vector<int>{1, 3, 4});
    CHECK(to_string(s) == "{1,3,4}");
    CHECK(lex_less(VertexSet::of({0, 5}), VertexSet::of({1, 2})));
    CHECK(lex_less(VertexSet::of({0, 1}), VertexSet::of({0, 1, 2})));
  }
}
