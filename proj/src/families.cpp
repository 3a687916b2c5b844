#include "edgerigid/families.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "edgerigid/errors.hpp"

namespace edgerigid::families {

Graph complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return Graph::from_edges(n, std::move(edges));
}

Graph cycle(int n) {
  if (n < 3) throw TooSmall("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a) edges.emplace_back(a, (a + 1) % n);
  return Graph::from_edges(n, std::move(edges));
}

Graph path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a + 1 < n; ++a) edges.emplace_back(a, a + 1);
  return Graph::from_edges(n, std::move(edges));
}

Graph star(int leaves) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, std::move(edges));
}

Graph complete_bipartite(int p, int q) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < q; ++b) edges.emplace_back(a, p + b);
  return Graph::from_edges(p + q, std::move(edges));
}

Graph petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(i, i + 5);                // spokes
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph::from_edges(10, std::move(edges));
}

Graph circulant(int n, const std::vector<int>& jumps) {
  std::set<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a) {
    for (int j : jumps) {
      const int b = ((a + j) % n + n) % n;
      if (a != b) edges.emplace(std::min(a, b), std::max(a, b));
    }
  }
  return Graph::from_edges(n, {edges.begin(), edges.end()});
}

Graph random_tree(int n, std::uint64_t seed) {
  if (n < 2) throw TooSmall("tree needs at least 2 vertices");
  if (n == 2) return path(2);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> prufer(static_cast<std::size_t>(n - 2));
  for (int& p : prufer) p = pick(rng);
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int p : prufer) ++degree[p];
  std::vector<std::pair<int, int>> edges;
  for (int p : prufer) {
    const int leaf = static_cast<int>(std::find(degree.begin(), degree.end(), 1) - degree.begin());
    edges.emplace_back(leaf, p);
    --degree[leaf];
    --degree[p];
  }
  int u = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[v] != 1) continue;
    if (u < 0) {
      u = v;
    } else {
      edges.emplace_back(u, v);
      break;
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph remove_edge(const Graph& g, int a, int b) {
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : g.edges())
    if (!(e.a == std::min(a, b) && e.b == std::max(a, b))) edges.emplace_back(e.a, e.b);
  return Graph::from_edges(g.order(), std::move(edges));
}

std::vector<Named> reference_corpus() {
  std::vector<Named> out;
  out.push_back({"K3", complete(3), true});
  out.push_back({"K4", complete(4), true});
  out.push_back({"K5", complete(5), true});
  out.push_back({"C4", cycle(4), true});
  out.push_back({"C5", cycle(5), true});
  out.push_back({"C6", cycle(6), true});
  out.push_back({"K1_2", star(2), true});
  out.push_back({"K1_4", star(4), true});
  out.push_back({"K2_3", complete_bipartite(2, 3), true});
  out.push_back({"K3_3", complete_bipartite(3, 3), true});
  out.push_back({"Petersen", petersen(), true});
  out.push_back({"P4", path(4), false});
  out.push_back({"P5", path(5), false});
  out.push_back({"Tree8", random_tree(8, 7), false});
  out.push_back({"K4_minus_e", remove_edge(complete(4), 0, 1), false});
  return out;
}

}  // namespace edgerigid::families
