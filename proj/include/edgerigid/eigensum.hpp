#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

#include "edgerigid/graph.hpp"

namespace edgerigid {

/// Ky Fan sums of L(w): S_k (k largest) and s_k (k smallest nontrivial),
/// with projectors achieving them.
struct KyFanValue {
  int k = 0;
  double top_sum = 0.0;     // S_k
  double bottom_sum = 0.0;  // s_k
  Eigen::MatrixXd top_projector;     // X: span of the k top eigenvectors
  Eigen::MatrixXd bottom_projector;  // Z: eigenvectors 2..k+1
};

KyFanValue kyfan(const Graph& g, const WeightVector& w, int k);

enum class Objective { Upper, Lower };
enum class OptimizeVerdict { RigidWithinTol, Refuted, Inconclusive };

std::string to_string(Objective o);
std::string to_string(OptimizeVerdict v);
Objective parse_objective(const std::string& text);

struct OptimizeOptions {
  int iters = 5000;
  double tol = 1e-5;         // relative verdict tolerance
  std::uint64_t seed = 0;
  double step_scale = 1.0;   // eta_t = step_scale / (|g_1|_inf sqrt(t))
  int restarts = 0;          // extra runs from seeded random simplex points
};

/// Upper: minimize S_k over the simplex. Lower: maximize s_k, reduced to the
/// upper problem at n-1-k through s_k(w) = 2m - S_{n-1-k}(w).
struct OptimizeResult {
  int k = 0;
  Objective objective = Objective::Upper;
  WeightVector best_w = WeightVector::unit(0);
  double value_at_unit = 0.0;  // S_k(1) or s_k(1)
  double best_primal = 0.0;    // best S_k(w) found (upper) / best s_k(w) (lower)
  double dual_bound = 0.0;     // certified lower bound (upper) / upper bound (lower)
  double gap = 0.0;
  int iterations = 0;
  std::uint64_t seed = 0;
  OptimizeVerdict verdict = OptimizeVerdict::Inconclusive;
};

OptimizeResult optimize(const Graph& g, int k, Objective objective,
                        const OptimizeOptions& options = {});

/// Primal/dual optimal pair for level j built from the spectral
/// decomposition of L, with its optimality residuals.
struct KCertificate {
  int level = 0;  // j
  int k = 0;      // k_j = total multiplicity of the top j eigenvalues
  Eigen::MatrixXd x_matrix;  // X_j
  double x = 0.0;            // sum of gamma_i over the top j eigenspaces
  Eigen::MatrixXd y_matrix;  // Y_j
  double y = 0.0;            // lambda_{r-j}
  double slack_residual = 0.0;       // |X(Y + yI - L)|_F
  double range_residual = 0.0;       // |XY - Y|_F
  double weight_residual = 0.0;      // |<L*(X) - x1, 1>|
  double dual_infeasibility = 0.0;   // max_e (x - L*(X)_e)_+
  double primal_infeasibility = 0.0; // negative part of eigenvalues of Y + yI - L and Y
  double bound = 0.0;                // |E| x
  double top_sum_at_unit = 0.0;      // S_{k_j}(1)
  bool certified = false;
};

/// 1 <= level <= r - 1; throws IndexOutOfRange otherwise.
KCertificate certificate(const Graph& g, int level, double tol = 1e-8);

struct GaugeProduct {
  int k = 0;
  double top_sum_at_unit = 0.0;  // S_k(1)
  double dual_gauge = 0.0;       // S_k°(1) estimate |E| / best primal
  double product = 0.0;
  double product_lo = 0.0;
  double product_hi = 0.0;
  OptimizeResult run;
};

GaugeProduct gauge_product(const Graph& g, int k, const OptimizeOptions& options = {});

struct ProfileEntry {
  OptimizeResult upper;
  OptimizeResult lower;
};

struct Profile {
  std::vector<ProfileEntry> entries;  // k = 1..n-1
  double trace_identity_residual = 0.0;  // max |s_{n-1-k}(w) + S_k(w) - 2m|
  int trace_samples = 0;
};

Profile k_rigidity_profile(const Graph& g, const OptimizeOptions& options = {},
                           int trace_samples = 10);

}  // namespace edgerigid
