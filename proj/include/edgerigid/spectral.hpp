#pragma once

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

#include "edgerigid/graph.hpp"

namespace edgerigid {

inline constexpr double kDefaultGroupTol = 1e-6;

/// Grouped eigendecomposition of a symmetric matrix.
struct Spectrum {
  Eigen::VectorXd all_eigenvalues;  // ascending, with repeats
  Eigen::MatrixXd eigenvectors;     // columns match all_eigenvalues
  std::vector<double> eigenvalues;  // distinct (group means), ascending
  std::vector<int> multiplicities;
  std::vector<int> first_index;     // column of the first eigenvector in each group
  std::vector<Eigen::MatrixXd> projectors;
  double group_tol = kDefaultGroupTol;

  int distinct() const { return static_cast<int>(eigenvalues.size()); }
  /// Orthonormal basis (n x m_i) of group i, zero-based.
  Eigen::MatrixXd basis(int group) const;
};

/// Eigenvalues closer than group_tol * max(1, lambda_max) are merged.
/// The solver is Eigen's tridiagonal QR, which is deterministic for a given
/// build.
Spectrum spectrum(const Eigen::MatrixXd& lw, double group_tol = kDefaultGroupTol);

struct EigenspaceIsometry {
  int index = 0;  // 1-based eigenspace index i (i >= 2)
  double eigenvalue = 0.0;
  int multiplicity = 0;
  double gamma = 0.0;  // mean of L*(E_i)
  double spread = 0.0;  // max - min of L*(E_i)
  bool constant = false;
  bool anomalous = false;  // gamma below 1e-12
};

struct EdgeIsometryReport {
  std::vector<EigenspaceIsometry> eigenspaces;
  bool all_constant = false;
};

/// For every nontrivial eigenspace of L(g), decides whether the canonical
/// embedding is edge-isometric at relative tolerance `tol`.
EdgeIsometryReport edge_isometry_check(const Graph& g, const Spectrum& s, double tol);

struct Embedding {
  int index = 0;  // 1-based eigenspace index
  Eigen::MatrixXd coordinates;  // n x m_i
};

/// Canonical spectral embedding onto eigenspace `index` (1-based, 2..r).
Embedding embedding(const Graph& g, const Spectrum& s, int index);

/// CSV with header "vertex,c1,...,cm".
std::string embedding_csv(const Embedding& emb);

/// L(w)^dagger through the known kernel: (L + J/n)^{-1} - J/n.
Eigen::MatrixXd laplacian_pseudoinverse(const Graph& g, const WeightVector& w);

/// z_e^T L(w)^dagger z_e per edge. Throws DisconnectingWeights.
Eigen::VectorXd effective_resistances(const Graph& g, const WeightVector& w);

/// n * sum_{i>=2} 1/lambda_i(w); +infinity when w disconnects g.
double kirchhoff_index(const Graph& g, const WeightVector& w);

/// Sum of effective resistances over all vertex pairs; +infinity when w
/// disconnects g.
double kirchhoff_index_pairwise(const Graph& g, const WeightVector& w);

/// (1/n) * prod_{i>=2} lambda_i(w).
double weighted_tree_count(const Graph& g, const WeightVector& w);

/// Spanning-tree count from a cofactor of the integer Laplacian.
BigInt tree_count_exact(const Graph& g);

/// Descending-convention majorization: x is majorized by y. Inputs are
/// sorted internally.
bool majorization_check(std::vector<double> x, std::vector<double> y, double tol);

}  // namespace edgerigid
