#pragma once

// Test-side reference implementations and corpus generators. Everything
// here is deliberately independent of the solver's search path: the naive
// rank enumerates all component families of increasing order with no
// pruning and no component-universe restriction.

#include <cstdint>
#include <random>
#include <vector>

#include "sntrank/cover.hpp"
#include "sntrank/graph.hpp"

namespace sntrank::testing {

// Reference search over all nonempty vertex subsets: a family of order r
// covers G iff the union of its admissible set-joins equals E(G) exactly.
// Feasible for n <= 6.
int naive_rank(const Graph& g);

// All optimal covers (family enumeration, then all exact-covering join
// subsets). Feasible only for tiny graphs.
std::vector<Cover> naive_optimal_covers(const Graph& g);

// Every connected graph with loops on n vertices, one representative per
// isomorphism class.
std::vector<Graph> connected_graphs_up_to_iso(int n);

// Every labeled connected graph with loops on n vertices (all 2^(n(n+1)/2)
// slot masks, filtered to connected).
std::vector<Graph> connected_graphs_labeled(int n);

// Deterministic random connected graphs with loops, mixed densities.
std::vector<Graph> random_connected_graphs(int n, int count, unsigned seed,
                                           double loop_p = 0.25);

// Free trees on n vertices, one per isomorphism class.
std::vector<Graph> trees_up_to_iso(int n);

// BFS distance matrix (ignoring loops).
std::vector<std::vector<int>> distances(const Graph& g);

}  // namespace sntrank::testing
