#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "edgerigid/graph.hpp"

namespace edgerigid::families {

Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
/// K_{1,leaves} with the center at vertex 0.
Graph star(int leaves);
/// K_{p,q}; vertices 0..p-1 form the first side.
Graph complete_bipartite(int p, int q);
Graph petersen();
/// Circulant C_n(jumps): a ~ b iff (b - a) mod n or (a - b) mod n is a jump.
Graph circulant(int n, const std::vector<int>& jumps);
/// Uniform labelled tree from a seeded Prufer sequence.
Graph random_tree(int n, std::uint64_t seed);
Graph remove_edge(const Graph& g, int a, int b);

struct Named {
  std::string name;
  Graph graph;
  bool edge_rigid;  // known answer
};

/// The reference corpus: eleven edge-rigid graphs followed by four that are
/// not.
std::vector<Named> reference_corpus();

}  // namespace edgerigid::families
