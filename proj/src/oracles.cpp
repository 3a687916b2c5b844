#include "edgerigid/oracles.hpp"

#include <numeric>
#include <random>

#include "edgerigid/errors.hpp"

namespace edgerigid::oracles {

namespace {

struct UnionFind {
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<int> parent;
};

// Visits every (n-1)-subset of edges that is acyclic, hence a spanning tree.
template <class Visit>
void for_each_spanning_tree(const Graph& g, const OracleBudget& budget, Visit visit) {
  if (g.size() > budget.max_edges_for_tree_enum)
    throw BudgetExceeded("spanning-tree enumeration limited to " +
                         std::to_string(budget.max_edges_for_tree_enum) + " edges");
  const int m = g.size();
  const int k = g.order() - 1;
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    UnionFind uf(g.order());
    bool acyclic = true;
    for (int e : pick) {
      if (!uf.unite(g.edge(e).a, g.edge(e).b)) {
        acyclic = false;
        break;
      }
    }
    if (acyclic) visit(pick);
    int i = k - 1;
    while (i >= 0 && pick[i] == m - k + i) --i;
    if (i < 0) return;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

BigInt enumerate_spanning_trees(const Graph& g, const OracleBudget& budget) {
  BigInt count = 0;
  for_each_spanning_tree(g, budget, [&](const std::vector<int>&) { ++count; });
  return count;
}

double weighted_enum(const Graph& g, const WeightVector& w, const OracleBudget& budget) {
  if (w.size() != g.size()) throw DimensionMismatch("weight vector length mismatch");
  double total = 0.0;
  for_each_spanning_tree(g, budget, [&](const std::vector<int>& tree) {
    double product = 1.0;
    for (int e : tree) product *= w[e];
    total += product;
  });
  return total;
}

BigInt count_walks(const Graph& g, int a, int b, int length, const OracleBudget& budget) {
  if (length < 0) throw Error("walk length must be nonnegative");
  if (length > budget.max_walk_length)
    throw BudgetExceeded("walk enumeration limited to length " +
                         std::to_string(budget.max_walk_length));
  if (a < 0 || b < 0 || a >= g.order() || b >= g.order())
    throw IndexOutOfRange("vertex out of range");
  std::vector<BigInt> ways(static_cast<std::size_t>(g.order()), 0);
  ways[a] = 1;
  for (int step = 0; step < length; ++step) {
    std::vector<BigInt> next(ways.size(), 0);
    for (int v = 0; v < g.order(); ++v) {
      if (sgn(ways[v]) == 0) continue;
      for (int u : g.neighbors(v)) next[u] += ways[v];
    }
    ways = std::move(next);
  }
  return ways[b];
}

std::vector<WeightVector> random_simplex(int edge_count, std::uint64_t seed, int count) {
  if (count < 1) throw Error("random_simplex: count must be positive");
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> draw(1.0);
  std::vector<WeightVector> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int s = 0; s < count; ++s) {
    std::vector<double> values(static_cast<std::size_t>(edge_count));
    for (double& v : values) {
      do {
        v = draw(rng);
      } while (!(v > 0.0));
    }
    out.push_back(WeightVector::from_values(std::move(values), true));
  }
  return out;
}

}  // namespace edgerigid::oracles
