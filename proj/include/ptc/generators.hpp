#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ptc/graph.hpp"

namespace ptc {

Graph empty_graph(int n);
Graph complete(int n);
Graph complete_bipartite(int r, int s);
Graph path(int n);
Graph cycle(int n);
/// Hub (vertex 0) joined to a cycle on vertices 1..n-1.
Graph wheel(int n);

/// Harary graph H(n, d): circulant with offsets 1..floor(d/2); odd d adds
/// diameters (even n) or the near-diameter chords of the odd-n case.
Graph harary(int n, int d);

/// G v H: vertices of g first, then h; every g-vertex adjacent to every h-vertex.
Graph join(const Graph& g, const Graph& h);

/// Product vertex (u, v) is numbered u * |V(h)| + v.
Graph cartesian(const Graph& g, const Graph& h);
Graph lexicographic(const Graph& g, const Graph& h);

/// K_n without the matching {0-1, 2-3, ...} of size r.
Graph complete_minus_matching(int n, int r);

/// K_{k+l-1} v (n-k-l+1)K_1, the clique on the first k+l-1 vertices.
Graph prop_2_3_graph(int n, int k, int l);
bool prop_2_3_in_range(int n, int k, int l);
long prop_2_3_edge_formula(int n, int k, int l);

/// lK_1 v C_{n-l} plus the chord y_1 y_{floor((n-l)/2)}; independent set first.
Graph prop_3_3_graph(int n, int l);
long prop_3_3_edge_formula(int n, int l);

/// P_s o (l+1)K_1 (s = floor(n/(l+1))) with r = n mod (l+1) extra vertices joined
/// to the last layer, a path through the extra vertices and a path through the first layer.
struct Prop34Construction {
  Graph graph;
  int layers = 0;   // s
  int extra = 0;    // r
  long formula_edges = 0;
  bool in_proposition_range = false;  // (n-4)/3 <= l <= (n-r-2)/2
};
Prop34Construction prop_3_4_construction(int n, int l);
Graph prop_3_4_graph(int n, int l);
long prop_3_4_edge_formula(int n, int l);

/// One maximal member of the complement families characterizing tau_3 = n-5.
struct FamilyMember {
  std::string name;     // e.g. "C3+C3+4K1"
  Graph complement;     // the family graph
  Graph graph;          // its complement, a candidate with tau_3 = n-5
};
std::vector<FamilyMember> lemma_3_6_family(int n);

/// Canonical text form, e.g. "harary:9,3" or "join:(complete:1),(cycle:6)".
struct GeneratorSpec {
  enum class Kind {
    Empty,
    Complete,
    CompleteBipartite,
    Path,
    Cycle,
    Wheel,
    Harary,
    Join,
    Cartesian,
    Lex,
    CompleteMinusMatching,
    Prop23,
    Prop33,
    Prop34,
    Lemma36Family,
  };

  Kind kind = Kind::Complete;
  std::vector<int> params;
  std::vector<GeneratorSpec> operands;

  Graph build() const;
  std::string to_string() const;
};

GeneratorSpec parse_generator_spec(std::string_view text);

}  // namespace ptc
