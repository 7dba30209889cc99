#include <doctest.h>

#include "oracles.hpp"
#include "ptc/extremal.hpp"
#include "ptc/generators.hpp"
#include "ptc/graph_io.hpp"
#include "ptc/tree_packing.hpp"

using namespace ptc;

namespace {

std::uint64_t count(const EnumerationOptions& o) {
  return enumerate_graphs(o, [](const Graph&) { return true; });
}

ExtremalRecord solve(int n, int k, int l, Strategy s) {
  ExtremalOptions o;
  o.strategy = s;
  o.allow_long_run = true;
  return f_min_edges(n, k, l, o);
}

}  // namespace

TEST_SUITE("extremal") {
  TEST_CASE("labeled enumeration is complete") {
    EnumerationOptions o;
    o.n = 4;
    o.isomorph_rejection = false;
    CHECK(count(o) == 38);
    CHECK(count(o) == oracle::connected_labeled_count(4));
    o.n = 5;
    CHECK(count(o) == oracle::connected_labeled_count(5));
    o.require_connected = false;
    CHECK(count(o) == 1024);
  }

  TEST_CASE("enumeration respects its filters") {
    EnumerationOptions o;
    o.n = 4;
    o.edges = 3;
    o.min_degree = 1;
    o.min_kappa = 1;
    std::vector<Graph> seen;
    enumerate_graphs(o, [&](const Graph& g) {
      seen.push_back(g);
      return true;
    });
    bool path_like = false;
    bool star_like = false;
    for (const Graph& g : seen) {
      CHECK(is_connected(g));
      CHECK(g.edge_count() == 3);
      path_like = path_like || oracle::isomorphic(g, path(4));
      star_like = star_like || max_degree(g) == 3;
    }
    CHECK(path_like);
    CHECK(star_like);

    EnumerationOptions full;
    full.n = 5;
    full.edges = 10;
    std::vector<Graph> only;
    enumerate_graphs(full, [&](const Graph& g) {
      only.push_back(g);
      return true;
    });
    REQUIRE(only.size() == 1);
    CHECK(only[0] == complete(5));
  }

  TEST_CASE("isomorph rejection keeps every class") {
    for (int n = 2; n <= 6; ++n) {
      EnumerationOptions labeled;
      labeled.n = n;
      labeled.isomorph_rejection = false;
      labeled.require_connected = false;
      std::vector<Graph> reps;
      EnumerationOptions reduced = labeled;
      reduced.isomorph_rejection = true;
      enumerate_graphs(reduced, [&](const Graph& g) {
        reps.push_back(g);
        return true;
      });
      std::uint64_t misses = 0;
      std::uint64_t sampled = 0;
      enumerate_graphs(labeled, [&](const Graph& g) {
        if (++sampled % 7 != 0 && n == 6) return true;
        bool found = false;
        for (const Graph& r : reps) {
          if (r.edge_count() == g.edge_count() && oracle::isomorphic(r, g)) {
            found = true;
            break;
          }
        }
        if (!found) ++misses;
        return true;
      });
      CAPTURE(n);
      CHECK(misses == 0);
    }
  }

  TEST_CASE("path and cycle unions") {
    const auto six = path_cycle_unions(6);
    // partitions of the 6 vertices into paths and cycles (>= 3), up to isomorphism
    CHECK(six.size() == 19);
    CHECK(path_cycle_unions(10).size() == 106);
    for (std::size_t i = 1; i < six.size(); ++i) CHECK(six[i - 1].edge_count() >= six[i].edge_count());
    for (const Graph& g : six) CHECK(max_degree(g) <= 2);
    CHECK(six.front().edge_count() == 6);
    CHECK(six.back().edge_count() == 0);
  }

  TEST_CASE("subgraph embedding") {
    CHECK(is_subgraph_of(path(4), cycle(4)));
    CHECK(is_subgraph_of(disjoint_union(complete(2), complete(2)), cycle(4)));
    CHECK_FALSE(is_subgraph_of(cycle(3), cycle(4)));
    CHECK_FALSE(is_subgraph_of(cycle(4), disjoint_union(cycle(3), Graph(1))));
    CHECK(is_subgraph_of(empty_graph(5), cycle(5)));
  }

  TEST_CASE("sparse search reproduces small extremal values") {
    const auto tree = solve(7, 3, 0, Strategy::SparseAsc);
    CHECK(tree.f_value == 6);
    CHECK(tree.exhaustive);
    REQUIRE(tree.witness);
    CHECK(tree.witness->edge_count() == 6);
    CHECK(is_connected(*tree.witness));

    const auto one = solve(6, 3, 1, Strategy::SparseAsc);
    CHECK(one.f_value == 9);
    CHECK(one.status == SearchStatus::Exact);
    CHECK(global_connectivity(*one.witness, 3, Mode::InternalPendant).value == 1);
  }

  TEST_CASE("dense search reproduces near-complete values") {
    const auto full = solve(8, 3, 5, Strategy::DenseDesc);
    CHECK(full.f_value == 28);
    CHECK(*full.witness == complete(8));
    const auto minus = solve(8, 3, 4, Strategy::DenseDesc);
    CHECK(minus.f_value == 26);
    CHECK(max_degree(complement(*minus.witness)) == 1);
    CHECK(complement(*minus.witness).edge_count() == 2);
  }

  TEST_CASE("thirty-seven edges suffice for five pendant trees on ten vertices") {
    const Graph g = complement(disjoint_union(disjoint_union(cycle(4), cycle(4)), empty_graph(2)));
    CHECK(g.edge_count() == 37);
    CHECK(min_degree(g) - 3 + 1 == 5);
    for (Mask s = 0; s < bit(10); ++s) {
      if (popcount(s) != 3) continue;
      const auto r = local_connectivity(g, VertexSet(s), Mode::InternalPendant, 5);
      CHECK(r.witness.size() == 5);
      CHECK(static_cast<bool>(verify_packing(g, r.witness)));
    }
    const auto rec = solve(10, 3, 5, Strategy::DenseDesc);
    CHECK(rec.f_value == 37);
    CHECK(rec.exhaustive);
  }

  TEST_CASE("complete graph minus any matching keeps one tree for n-2 terminals") {
    const Graph g = complete_minus_matching(7, 3);
    CHECK(oracle::global_tree_packing(g, 5, Mode::InternalPendant) == 1);
    for (int n = 6; n <= 10; ++n) {
      for (int r = 1; 2 * r <= n; ++r) {
        CAPTURE(n);
        CAPTURE(r);
        CHECK(global_connectivity(complete_minus_matching(n, r), n - 2, Mode::InternalPendant).value == 1);
      }
    }
  }

  TEST_CASE("strategies agree where both apply") {
    for (int n = 5; n <= 7; ++n) {
      for (int l = std::max(1, n - 3 - 2); l <= n - 3; ++l) {
        const auto a = solve(n, 3, l, Strategy::SparseAsc);
        const auto b = solve(n, 3, l, Strategy::DenseDesc);
        CAPTURE(n);
        CAPTURE(l);
        CHECK(a.f_value == b.f_value);
      }
    }
  }

  TEST_CASE("records respect the degree lower bound and witnesses recheck") {
    for (int n = 5; n <= 7; ++n) {
      for (int l = 0; l <= n - 3; ++l) {
        const auto r = solve(n, 3, l, l >= n - 5 && l >= 1 ? Strategy::DenseDesc : Strategy::SparseAsc);
        REQUIRE(r.status == SearchStatus::Exact);
        CHECK(r.f_value >= n - 1);
        if (l >= 1) CHECK(r.f_value >= (static_cast<long>(3 + l - 1) * n + 1) / 2);
        SolveOptions generic;
        generic.fast_paths = false;
        generic.bound_caps = false;
        CHECK(global_connectivity(*r.witness, 3, Mode::InternalPendant, generic).value == l);
        CHECK(r.witness->edge_count() == r.f_value);
      }
    }
  }

  TEST_CASE("upper-bound constructions realize their edge counts") {
    // K_{k+l-1, n-k-l+1} and K_{k+l-1} v independent set
    for (int n = 6; n <= 9; ++n) {
      for (int l = 1; l <= n - 3; ++l) {
        const auto r = solve(n, 3, l, Strategy::ConstructionOnly);
        REQUIRE(r.witness);
        CHECK(global_connectivity(*r.witness, 3, Mode::InternalPendant).value == l);
        if (2 * l <= n - 4) CHECK(r.f_value <= static_cast<long>(l + 2) * (n - l - 2));
        CHECK(r.f_value <= static_cast<long>(l + 2) * (n - l - 2) + (l + 2) * (l + 1) / 2);
      }
    }
  }

  TEST_CASE("budget exhaustion yields a non-exhaustive record") {
    ExtremalOptions o;
    o.strategy = Strategy::SparseAsc;
    o.budget.max_graphs = 3;
    o.allow_long_run = true;
    const auto r = f_min_edges(9, 3, 2, o);
    CHECK(r.status == SearchStatus::BudgetExhausted);
    CHECK_FALSE(r.exhaustive);
    CHECK(r.f_value == -1);
    CHECK_THROWS_AS(f_min_edges(8, 3, 2, ExtremalOptions{}), InputError);
  }

  TEST_CASE("infeasible targets are reported") {
    // A connected graph has kappa >= 1, so tau_2 = 0 never happens.
    const auto r = solve(5, 2, 0, Strategy::SparseAsc);
    CHECK(r.status == SearchStatus::Infeasible);
    CHECK(r.exhaustive);
  }

  TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(f_min_edges(5, 6, 0), InputError);
    CHECK_THROWS_AS(f_min_edges(5, 3, 3), InputError);
    CHECK_THROWS_AS(f_min_edges(5, 1, 0), InputError);
  }

  TEST_CASE("search is deterministic across thread counts") {
    ExtremalOptions one;
    one.strategy = Strategy::SparseAsc;
    ExtremalOptions three = one;
    three.threads = 3;
    for (int l = 0; l <= 2; ++l) {
      const auto a = f_min_edges(7, 3, l, one);
      const auto b = f_min_edges(7, 3, l, three);
      CHECK(a.f_value == b.f_value);
      CHECK(encode_graph6(*a.witness) == encode_graph6(*b.witness));
    }
  }

  TEST_CASE("theorem checks carry verdicts and bands") {
    const auto checks = verify_theorems(7, 7, 3, 7, {"T1.1", "T1.3"});
    REQUIRE_FALSE(checks.empty());
    for (const TheoremCheck& c : checks) {
      CHECK_FALSE(c.in_hypothesis);
      CHECK(c.verdict != Verdict::Violated);
    }
    const auto t12 = verify_theorems(7, 7, 3, 7, {"T1.2"});
    bool saw_complete = false;
    for (const TheoremCheck& c : t12) {
      if (c.id == "T1.2-2" && c.l == 1) {
        saw_complete = true;
        CHECK(c.computed == 21);
        CHECK(c.verdict == Verdict::Confirmed);
      }
    }
    CHECK(saw_complete);
    CHECK_THROWS_AS(verify_theorems(7, 7, 3, 3, {"T9.9"}), InputError);
  }

  TEST_CASE("characterizations at small orders") {
    for (const auto& c : verify_characterization("L3.1", 5)) CHECK(c.verdict == Verdict::Confirmed);
    for (const auto& c : verify_characterization("L3.2", 6)) CHECK(c.verdict == Verdict::Confirmed);
    for (const auto& c : verify_characterization("L2.5", 7)) CHECK(c.verdict == Verdict::Confirmed);
    CHECK(verify_characterization("L3.6", 8).front().verdict == Verdict::SkippedOutOfRange);
    CHECK_THROWS_AS(verify_characterization("X1", 5), InputError);
  }
}
