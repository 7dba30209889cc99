#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ptc/graph.hpp"

namespace ptc {

/// Which Steiner trees count and how trees in a packing may overlap.
enum class Mode {
  InternalPendant,  // tau: terminals are leaves; trees meet exactly in the terminals
  EdgePendant,      // mu: terminals are leaves; trees are only edge-disjoint
  InternalPlain,    // kappa_k: any tree containing the terminals; trees meet exactly in the terminals
};

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);

inline bool is_pendant(Mode m) { return m != Mode::InternalPlain; }
inline bool is_internal(Mode m) { return m != Mode::EdgePendant; }

struct SteinerTree {
  std::vector<Edge> edges;

  VertexSet vertices() const;
  friend bool operator==(const SteinerTree&, const SteinerTree&) = default;
};

struct TreePacking {
  Mode mode = Mode::InternalPendant;
  VertexSet terminals;
  std::vector<SteinerTree> trees;

  int size() const { return static_cast<int>(trees.size()); }
};

enum class PackingFault {
  None,
  TooFewTerminals,
  EdgeNotInGraph,
  DuplicateEdge,
  NotATree,
  MissingTerminal,
  TerminalNotLeaf,
  SharedEdge,
  SharedVertex,
};

std::string_view to_string(PackingFault fault);

struct PackingCheck {
  PackingFault fault = PackingFault::None;
  int tree = -1;   // offending tree
  int other = -1;  // second tree for pairwise faults

  explicit operator bool() const { return fault == PackingFault::None; }
};

/// Checks every packing invariant for the packing's mode against g.
PackingCheck verify_packing(const Graph& g, const TreePacking& p);

struct LocalResult {
  int value = 0;
  TreePacking witness;
  /// False when the search stopped at the requested limit; value is then a lower bound.
  bool exact = true;
  std::uint64_t nodes = 0;
};

/// Maximum packing of S-Steiner trees under `mode`, stopping early once `limit`
/// trees are packed (limit < 0: no limit).
LocalResult local_connectivity(const Graph& g, VertexSet terminals, Mode mode, int limit = -1);

struct SolveOptions {
  /// Use the closed forms for K_n and K_{r,s} when the graph has that shape.
  bool fast_paths = true;
  /// Cap the search with min(delta-k+1, kappa-k+2, n-k) in InternalPendant mode.
  bool bound_caps = true;
  int threads = 1;
};

struct ConnectivityResult {
  int value = 0;
  VertexSet minimizing_terminals;
  TreePacking witness;
  std::uint64_t terminal_sets_examined = 0;
  bool used_fast_path = false;
};

/// Minimum of local_connectivity over all k-subsets. The minimizing set is the
/// lexicographically smallest one attaining the minimum; its witness is maximum.
ConnectivityResult global_connectivity(const Graph& g, int k, Mode mode, const SolveOptions& options = {});

/// min over k-subsets of min(local value, cap); returns as soon as the running
/// minimum drops below `stop_below`.
int connectivity_value(const Graph& g, int k, Mode mode, int cap, int stop_below = 0);

/// min(delta-k+1, kappa-k+2, n-k) floored at 0; an upper bound on tau_k for k >= 3.
int connectivity_upper_bound(const Graph& g, int k);

/// Closed form max{min{r-k+1, s-k+1}, 0} for tau_k(K_{r,s}).
int complete_bipartite_tau(int r, int s, int k);

/// Part sizes {r, s} with r <= s if g is complete bipartite with both parts nonempty.
bool complete_bipartite_parts(const Graph& g, int& r, int& s);

}  // namespace ptc
