#include "edgerigid/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

#include "edgerigid/errors.hpp"

namespace edgerigid {

namespace {

// lambda_2 below this, relative to max(1, lambda_max), counts as zero.
constexpr double kRankTol = 1e-9;

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solve(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) throw ConvergenceFailure("symmetric eigensolver failed");
  return solver;
}

bool disconnects(const Eigen::VectorXd& ascending) {
  if (ascending.size() < 2) return true;
  const double scale = std::max(1.0, ascending(ascending.size() - 1));
  return ascending(1) <= kRankTol * scale;
}

}  // namespace

Eigen::MatrixXd Spectrum::basis(int group) const {
  if (group < 0 || group >= distinct()) throw IndexOutOfRange("eigenspace index out of range");
  return eigenvectors.middleCols(first_index[group], multiplicities[group]);
}

Spectrum spectrum(const Eigen::MatrixXd& lw, double group_tol) {
  if (lw.rows() != lw.cols()) throw DimensionMismatch("spectrum: matrix must be square");
  if (!(group_tol > 0.0)) throw Error("spectrum: group_tol must be positive");
  const auto solver = solve(lw);
  Spectrum s;
  s.group_tol = group_tol;
  s.all_eigenvalues = solver.eigenvalues();
  s.eigenvectors = solver.eigenvectors();
  const Eigen::Index n = s.all_eigenvalues.size();
  const double threshold = group_tol * std::max(1.0, std::abs(s.all_eigenvalues(n - 1)));
  Eigen::Index start = 0;
  for (Eigen::Index i = 1; i <= n; ++i) {
    if (i < n && s.all_eigenvalues(i) - s.all_eigenvalues(i - 1) <= threshold) continue;
    const Eigen::Index count = i - start;
    s.eigenvalues.push_back(s.all_eigenvalues.segment(start, count).mean());
    s.multiplicities.push_back(static_cast<int>(count));
    s.first_index.push_back(static_cast<int>(start));
    const Eigen::MatrixXd u = s.eigenvectors.middleCols(start, count);
    s.projectors.push_back(u * u.transpose());
    start = i;
  }
  return s;
}

EdgeIsometryReport edge_isometry_check(const Graph& g, const Spectrum& s, double tol) {
  EdgeIsometryReport out;
  out.all_constant = true;
  for (int i = 1; i < s.distinct(); ++i) {
    const Eigen::VectorXd values = adjoint_apply(g, s.projectors[i]);
    EigenspaceIsometry iso;
    iso.index = i + 1;
    iso.eigenvalue = s.eigenvalues[i];
    iso.multiplicity = s.multiplicities[i];
    iso.gamma = values.mean();
    iso.spread = values.maxCoeff() - values.minCoeff();
    iso.constant = iso.spread <= tol * std::max(1.0, std::abs(iso.gamma));
    iso.anomalous = iso.gamma < 1e-12;
    out.all_constant = out.all_constant && iso.constant;
    out.eigenspaces.push_back(iso);
  }
  return out;
}

Embedding embedding(const Graph& g, const Spectrum& s, int index) {
  if (index < 2 || index > s.distinct())
    throw IndexOutOfRange("embedding index must lie in 2.." + std::to_string(s.distinct()));
  Embedding emb;
  emb.index = index;
  emb.coordinates = s.basis(index - 1);
  const Eigen::VectorXd expected = adjoint_apply(g, s.projectors[index - 1]);
  for (int e = 0; e < g.size(); ++e) {
    const auto [a, b] = g.edge(e);
    const double d2 = (emb.coordinates.row(a) - emb.coordinates.row(b)).squaredNorm();
    if (std::abs(d2 - expected(e)) > 1e-9 * std::max(1.0, expected(e)))
      throw InternalInconsistency("embedding edge length disagrees with L*(E_i)");
  }
  return emb;
}

std::string embedding_csv(const Embedding& emb) {
  std::ostringstream out;
  out << "vertex";
  for (Eigen::Index c = 0; c < emb.coordinates.cols(); ++c) out << ",c" << (c + 1);
  out << '\n';
  out.precision(17);
  for (Eigen::Index v = 0; v < emb.coordinates.rows(); ++v) {
    out << v;
    for (Eigen::Index c = 0; c < emb.coordinates.cols(); ++c) out << ',' << emb.coordinates(v, c);
    out << '\n';
  }
  return out.str();
}

Eigen::MatrixXd laplacian_pseudoinverse(const Graph& g, const WeightVector& w) {
  const int n = g.order();
  const Eigen::MatrixXd j = Eigen::MatrixXd::Constant(n, n, 1.0 / n);
  const auto solver = solve(laplacian(g, w) + j);
  const Eigen::VectorXd& mu = solver.eigenvalues();
  if (mu(0) <= kRankTol * std::max(1.0, mu(n - 1)))
    throw DisconnectingWeights("weights disconnect the graph");
  const Eigen::MatrixXd& v = solver.eigenvectors();
  return v * mu.cwiseInverse().asDiagonal() * v.transpose() - j;
}

Eigen::VectorXd effective_resistances(const Graph& g, const WeightVector& w) {
  return adjoint_apply(g, laplacian_pseudoinverse(g, w));
}

double kirchhoff_index(const Graph& g, const WeightVector& w) {
  const Eigen::VectorXd lambda = solve(laplacian(g, w)).eigenvalues();
  if (disconnects(lambda)) return std::numeric_limits<double>::infinity();
  double sum = 0.0;
  for (Eigen::Index i = 1; i < lambda.size(); ++i) sum += 1.0 / lambda(i);
  return g.order() * sum;
}

double kirchhoff_index_pairwise(const Graph& g, const WeightVector& w) {
  Eigen::MatrixXd pinv;
  try {
    pinv = laplacian_pseudoinverse(g, w);
  } catch (const DisconnectingWeights&) {
    return std::numeric_limits<double>::infinity();
  }
  double sum = 0.0;
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b) sum += pinv(a, a) + pinv(b, b) - 2.0 * pinv(a, b);
  return sum;
}

double weighted_tree_count(const Graph& g, const WeightVector& w) {
  const Eigen::VectorXd lambda = solve(laplacian(g, w)).eigenvalues();
  if (disconnects(lambda)) return 0.0;
  double product = 1.0 / g.order();
  for (Eigen::Index i = 1; i < lambda.size(); ++i) product *= lambda(i);
  return product;
}

BigInt tree_count_exact(const Graph& g) {
  return determinant(delete_row_col(laplacian_exact(g), 0));
}

bool majorization_check(std::vector<double> x, std::vector<double> y, double tol) {
  if (x.size() != y.size()) throw LengthMismatch("majorization_check: lengths differ");
  std::sort(x.begin(), x.end(), std::greater<>());
  std::sort(y.begin(), y.end(), std::greater<>());
  double sx = 0.0;
  double sy = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sx += x[k];
    sy += y[k];
    if (sx > sy + tol) return false;
  }
  return std::abs(sx - sy) <= tol;
}

}  // namespace edgerigid
