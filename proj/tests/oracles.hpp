#pragma once

// Brute-force reference implementations. Deliberately naive: they share only
// the Graph type with the library.

#include <cstdint>
#include <random>
#include <vector>

#include "ptc/graph.hpp"
#include "ptc/tree_packing.hpp"

namespace oracle {

using ptc::Graph;
using ptc::Mask;

bool connected_after_removing(const Graph& g, Mask removed);

/// Smallest X with G - X disconnected or a single vertex.
int vertex_connectivity(const Graph& g);

/// Maximum family of pairwise compatible S-trees, found by enumerating every
/// edge subset of g that forms a valid tree for the mode. Feasible for e(g) <= 12.
int tree_packing(const Graph& g, Mask terminals, ptc::Mode mode);

/// min over k-subsets of tree_packing.
int global_tree_packing(const Graph& g, int k, ptc::Mode mode);

/// Number of connected labeled graphs on n vertices, by checking every edge subset.
std::uint64_t connected_labeled_count(int n);

/// Erdos-Renyi sample.
Graph random_graph(std::mt19937_64& rng, int n, double p);
Graph random_connected_graph(std::mt19937_64& rng, int n, double p);

/// Uniform spanning subgraph: each edge kept with probability keep.
Graph random_spanning_subgraph(std::mt19937_64& rng, const Graph& g, double keep);

/// Applies perm (old vertex -> new vertex).
Graph relabel(const Graph& g, const std::vector<int>& perm);

/// Isomorphism test by trying every permutation (n <= 8).
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace oracle
