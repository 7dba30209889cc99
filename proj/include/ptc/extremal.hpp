#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ptc/graph.hpp"

namespace ptc {

enum class Strategy { SparseAsc, DenseDesc, ConstructionOnly };
std::string_view to_string(Strategy s);
Strategy parse_strategy(std::string_view text);

enum class SearchStatus {
  Exact,            // f_value certified minimal
  UpperBound,       // witness found, minimality not certified
  Infeasible,       // no connected graph attains the value
  BudgetExhausted,  // stopped before any conclusion
};
std::string_view to_string(SearchStatus s);

/// Zero means unlimited.
struct Budget {
  std::uint64_t max_graphs = 0;
  double max_seconds = 0;
};

struct ExtremalRecord {
  int n = 0;
  int k = 0;
  int l = 0;
  long f_value = -1;  // -1 when unknown
  std::optional<Graph> witness;
  Strategy strategy = Strategy::SparseAsc;
  SearchStatus status = SearchStatus::BudgetExhausted;
  bool exhaustive = false;
  std::uint64_t graphs_examined = 0;
  /// Every connected graph with fewer edges than this was refuted (or excluded by a degree bound).
  long refuted_below = 0;
};

struct ExtremalOptions {
  Strategy strategy = Strategy::SparseAsc;
  Budget budget;
  int threads = 1;
  /// SparseAsc refuses n > 7 unless set.
  bool allow_long_run = false;
};

/// Minimum edge count of a connected n-vertex graph with tau_k = l.
ExtremalRecord f_min_edges(int n, int k, int l, const ExtremalOptions& options = {});

/// Degree lower bound ceil((k+l-1)n/2) for l >= 1, and n-1 always.
long extremal_lower_bound(int n, int k, int l);

/// A construction with tau_k = l, if one is known for these parameters.
std::optional<Graph> extremal_construction(int n, int k, int l);

/// tau_k(g) == l, computed with an early cutoff.
bool has_tau_exactly(const Graph& g, int k, int l);

struct EnumerationOptions {
  int n = 1;
  int edges = -1;  // -1: every edge count
  int min_degree = 0;
  int max_degree = -1;
  int min_kappa = 0;
  bool require_connected = true;
  /// Only emit labelings with non-increasing degrees. Keeps every isomorphism class.
  bool isomorph_rejection = true;
};

/// Calls `visit` for each matching graph; returning false stops the walk.
/// Returns the number of graphs emitted.
std::uint64_t enumerate_graphs(const EnumerationOptions& options, const std::function<bool(const Graph&)>& visit);

/// Every graph on n vertices with maximum degree <= 2, one per isomorphism
/// class (disjoint unions of paths and cycles), ordered by edge count descending.
std::vector<Graph> path_cycle_unions(int n);

/// True if h is isomorphic to a (not necessarily induced) subgraph of host.
bool is_subgraph_of(const Graph& h, const Graph& host);

enum class Verdict {
  Confirmed,
  WithinBounds,
  Violated,
  /// Claim fails below its stated hypothesis; not a refutation.
  ExploratoryMismatch,
  SkippedOutOfRange,
  SkippedBudget,
};
std::string_view to_string(Verdict v);

struct TheoremCheck {
  std::string id;      // e.g. "T1.3-7"
  int n = 0;
  int k = 0;
  int l = 0;
  long claim_low = 0;  // equal to claim_high for exact claims
  long claim_high = 0;
  long computed = -1;
  bool computed_exact = false;  // false: computed is an upper bound from a construction
  Verdict verdict = Verdict::SkippedOutOfRange;
  bool in_hypothesis = false;
  std::string note;
};

struct VerifyOptions {
  Budget budget{0, 60};
  int threads = 1;
};

std::vector<TheoremCheck> verify_theorems(int n_min, int n_max, int k_min, int k_max,
                                          const std::vector<std::string>& theorems = {"T1.1", "T1.2", "T1.3"},
                                          const VerifyOptions& options = {});

struct CharacterizationCheck {
  std::string id;       // e.g. "P3.1"
  std::string reading;  // "literal" or "contextual" where the statement is ambiguous
  int n = 0;
  int k = 0;
  std::uint64_t graphs_checked = 0;
  std::uint64_t class_members = 0;
  std::uint64_t forward_failures = 0;   // in the class but wrong tau
  std::uint64_t backward_failures = 0;  // right tau but outside the class
  Verdict verdict = Verdict::SkippedOutOfRange;
  std::string example;  // graph6 of a failing graph, if any
  std::string note;
};

/// Supported ids: L2.5, L2.6, L3.1, L3.2, L3.3, P3.1, L3.6.
std::vector<CharacterizationCheck> verify_characterization(std::string_view lemma_id, int n);

}  // namespace ptc
