#pragma once

// Brute-force ground truth for small instances. Nothing here goes through
// the matrix machinery of the other modules.

#include <cstdint>
#include <vector>

#include "edgerigid/graph.hpp"

namespace edgerigid::oracles {

struct OracleBudget {
  int max_edges_for_tree_enum = 20;
  int max_walk_length = 10;
};

/// Counts (n-1)-edge subsets that form spanning trees (union-find).
BigInt enumerate_spanning_trees(const Graph& g, const OracleBudget& budget = {});

/// Sum over spanning trees of the product of their edge weights.
double weighted_enum(const Graph& g, const WeightVector& w, const OracleBudget& budget = {});

/// Walks of length `length` from a to b, by dynamic programming over
/// adjacency lists.
BigInt count_walks(const Graph& g, int a, int b, int length, const OracleBudget& budget = {});

/// `count` i.i.d. exponential(1) draws per edge, each normalized to sum to
/// `edge_count`.
std::vector<WeightVector> random_simplex(int edge_count, std::uint64_t seed, int count);

}  // namespace edgerigid::oracles
