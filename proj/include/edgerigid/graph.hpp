#pragma once

#include <Eigen/Dense>

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "edgerigid/exact.hpp"

namespace edgerigid {

struct Edge {
  int a = 0;  // low endpoint
  int b = 0;  // high endpoint
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple connected undirected graph with canonical (lexicographic) edge
/// order. Every edge-indexed vector in the library uses this order.
class Graph {
 public:
  /// Validates and canonicalizes. Throws TooSmall, NotSimple, Disconnected,
  /// or ParseError for out-of-range vertex ids.
  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }

  bool adjacent(int a, int b) const {
    return adjacency_[static_cast<std::size_t>(a) * n_ + b] != 0;
  }
  std::span<const int> neighbors(int v) const { return neighbors_[v]; }
  int degree(int v) const { return static_cast<int>(neighbors_[v].size()); }

  /// Index of edge {a,b} in canonical order, if present.
  std::optional<int> edge_index(int a, int b) const;

  friend bool operator==(const Graph& x, const Graph& y) {
    return x.n_ == y.n_ && x.edges_ == y.edges_;
  }

 private:
  Graph() = default;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> adjacency_;
  std::vector<std::vector<int>> neighbors_;
};

/// Per-edge signs. +1 means column e_a - e_b of the incidence matrix for
/// edge (a,b), a < b; -1 means the reverse.
class Orientation {
 public:
  static Orientation canonical(int edge_count);
  static Orientation random(int edge_count, std::uint64_t seed);
  static Orientation from_signs(std::vector<int> signs);

  int size() const { return static_cast<int>(signs_.size()); }
  int sign(int e) const { return signs_[static_cast<std::size_t>(e)]; }
  std::span<const int> signs() const { return signs_; }

  Orientation flipped(int e) const;

 private:
  std::vector<int> signs_;
};

/// Nonnegative edge weights in canonical edge order.
class WeightVector {
 public:
  /// All ones; this is the barycenter of the simplex and is normalized.
  static WeightVector unit(int edge_count);

  /// Validates nonnegativity and finiteness. With `normalize`, rescales so
  /// the weights sum to the edge count; a zero total is then an error.
  static WeightVector from_values(std::vector<double> values, bool normalize);

  int size() const { return static_cast<int>(w_.size()); }
  bool normalized() const { return normalized_; }
  double operator[](int e) const { return w_[static_cast<std::size_t>(e)]; }
  std::span<const double> values() const { return w_; }
  Eigen::VectorXd to_eigen() const;

 private:
  std::vector<double> w_;
  bool normalized_ = false;
};

enum class GraphFormat { EdgeList, Graph6 };

Graph parse_graph(std::string_view bytes, GraphFormat format);
std::string serialize_edge_list(const Graph& g);
std::string serialize_graph6(const Graph& g);

/// Reads a weights file (one decimal per line, canonical edge order) and
/// normalizes it onto the simplex.
WeightVector parse_weights(std::string_view text, const Graph& g);

/// Weighted Laplacian sum_e w_e z_e z_e^T.
Eigen::MatrixXd laplacian(const Graph& g, const WeightVector& w);
Eigen::MatrixXd laplacian(const Graph& g);
ExactMatrix laplacian_exact(const Graph& g);
ExactMatrix adjacency_exact(const Graph& g);

/// L*(X)_ab = X_aa + X_bb - 2 X_ab for every edge, in canonical order.
Eigen::VectorXd adjoint_apply(const Graph& g, const Eigen::MatrixXd& x);
std::vector<BigInt> adjoint_apply(const Graph& g, const ExactMatrix& x);

/// Oriented incidence matrix, n x m.
Eigen::MatrixXi incidence(const Graph& g, const Orientation& o);

/// A_sigma = B^T B - 2I.
ExactMatrix signed_line_graph(const Graph& g, const Orientation& o);

/// Two-coloring by BFS from vertex 0; nullopt when g has an odd cycle.
std::optional<std::vector<int>> bipartition(const Graph& g);

struct DegreeClass {
  enum class Kind { Regular, BiregularBipartite, Irregular };
  Kind kind = Kind::Irregular;
  int degree = 0;             // Regular
  int degree_side0 = 0;       // BiregularBipartite: side of vertex 0
  int degree_side1 = 0;
  std::vector<int> side;      // BiregularBipartite: 0/1 per vertex
  std::vector<int> edge_degree_sums;
  bool edge_degree_sum_constant = false;
};

DegreeClass degree_classification(const Graph& g);

std::string to_string(DegreeClass::Kind kind);

}  // namespace edgerigid
