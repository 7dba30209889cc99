#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "ptc/generators.hpp"
#include "ptc/tree_packing.hpp"

using namespace ptc;

namespace {

SolveOptions generic() {
  SolveOptions o;
  o.fast_paths = false;
  o.bound_caps = false;
  return o;
}

int value(const Graph& g, int k, Mode mode) { return global_connectivity(g, k, mode, generic()).value; }

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("inequality battery on random connected graphs") {
    std::mt19937_64 rng(20261018);
    std::uniform_int_distribution<int> order(4, 8);
    std::uniform_real_distribution<double> density(0.35, 0.95);
    for (int trial = 0; trial < 120; ++trial) {
      const int n = order(rng);
      const Graph g = oracle::random_connected_graph(rng, n, density(rng));
      const int delta = min_degree(g);
      const int kappa = vertex_connectivity(g);
      CAPTURE(trial);
      CHECK(value(g, 2, Mode::InternalPendant) == kappa);
      for (int k = 3; k <= std::min(4, n - 1); ++k) {
        const int tau = value(g, k, Mode::InternalPendant);
        const int mu = value(g, k, Mode::EdgePendant);
        const int plain = value(g, k, Mode::InternalPlain);
        CAPTURE(k);
        CHECK(tau <= mu);
        CHECK(mu <= delta);
        CHECK(tau <= plain);
        CHECK(tau <= std::max(delta - k + 1, 0));
        CHECK(tau <= std::max(kappa - k + 2, 0));
        for (int l = 1; l <= tau; ++l) {
          CHECK(delta >= k + l - 1);
          CHECK(kappa >= k + l - 2);
        }
        if (kappa == k) CHECK(tau >= 1);
        CHECK(tau == global_connectivity(g, k, Mode::InternalPendant).value);
      }
    }
  }

  TEST_CASE("spanning subgraphs never have larger packings") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 5 + trial % 3;
      const Graph g = oracle::random_connected_graph(rng, n, 0.8);
      const Graph h = oracle::random_spanning_subgraph(rng, g, 0.8);
      for (int k = 2; k <= 4; ++k) CHECK(value(h, k, Mode::InternalPendant) <= value(g, k, Mode::InternalPendant));
    }
  }

  TEST_CASE("witnesses validate in every mode") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 80; ++trial) {
      const int n = 4 + trial % 6;
      const Graph g = oracle::random_graph(rng, n, 0.6);
      for (Mode mode : {Mode::InternalPendant, Mode::EdgePendant, Mode::InternalPlain}) {
        if (mode == Mode::InternalPlain && n > 8) continue;
        const auto r = global_connectivity(g, 3, mode);
        CHECK(static_cast<bool>(verify_packing(g, r.witness)));
        CHECK(r.witness.size() == r.value);
      }
    }
  }

  TEST_CASE("relabeling preserves every parameter") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
      const Graph g = oracle::random_connected_graph(rng, 7, 0.7);
      std::vector<int> perm(7);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const Graph h = oracle::relabel(g, perm);
      CHECK(vertex_connectivity(g) == vertex_connectivity(h));
      for (Mode mode : {Mode::InternalPendant, Mode::EdgePendant, Mode::InternalPlain}) {
        CHECK(value(g, 3, mode) == value(h, 3, mode));
      }
    }
  }

  TEST_CASE("full terminal sets have no pendant trees") {
    std::mt19937_64 rng(11);
    for (int n = 3; n <= 6; ++n) {
      for (int trial = 0; trial < 10; ++trial) {
        const Graph g = oracle::random_graph(rng, n, 0.7);
        CHECK(value(g, n, Mode::InternalPendant) == 0);
      }
    }
  }
}
