#include "edgerigid/eigensum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "edgerigid/errors.hpp"
#include "edgerigid/oracles.hpp"
#include "edgerigid/spectral.hpp"

namespace edgerigid {

namespace {

// Eigenvalues this close (relative to max(1, lambda_max)) count as tied when
// the top-k subgradient is symmetrized over the boundary eigenspace.
constexpr double kTieTol = 1e-9;

void require_k(const Graph& g, int k) {
  if (k < 1 || k > g.order() - 1)
    throw IndexOutOfRange("k must lie in 1.." + std::to_string(g.order() - 1));
}

struct Eig {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;
};

Eig eig(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) throw ConvergenceFailure("symmetric eigensolver failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double top_sum(const Eigen::VectorXd& ascending, int k) {
  return ascending.tail(k).sum();
}

// L*(sum_i c_i v_i v_i^T) with c_i = coeffs(i), evaluated edge by edge.
Eigen::VectorXd adjoint_of_weighted_projector(const Graph& g, const Eigen::MatrixXd& vectors,
                                              const Eigen::VectorXd& coeffs) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(g.size());
  for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
    if (coeffs(i) == 0.0) continue;
    for (int e = 0; e < g.size(); ++e) {
      const auto [a, b] = g.edge(e);
      const double d = vectors(a, i) - vectors(b, i);
      out(e) += coeffs(i) * d * d;
    }
  }
  return out;
}

// Coefficients of the top-k projector: 1 on the k largest eigenvectors in
// solver order.
Eigen::VectorXd extreme_coeffs(Eigen::Index n, int k) {
  Eigen::VectorXd c = Eigen::VectorXd::Zero(n);
  c.tail(k).setOnes();
  return c;
}

// Same trace and spectrum bounds, but the eigenvalue group straddling the
// k-th largest position gets a uniform fractional coefficient. This is the
// barycenter of the subdifferential face at w.
Eigen::VectorXd symmetric_coeffs(const Eigen::VectorXd& ascending, int k) {
  const Eigen::Index n = ascending.size();
  const Eigen::Index boundary = n - k;
  const double tie = kTieTol * std::max(1.0, std::abs(ascending(n - 1)));
  Eigen::Index lo = boundary;
  Eigen::Index hi = boundary;
  while (lo > 0 && ascending(boundary) - ascending(lo - 1) <= tie) --lo;
  while (hi + 1 < n && ascending(hi + 1) - ascending(boundary) <= tie) ++hi;
  Eigen::VectorXd c = Eigen::VectorXd::Zero(n);
  const double inside = static_cast<double>(hi - boundary + 1);
  const double group = static_cast<double>(hi - lo + 1);
  for (Eigen::Index i = lo; i <= hi; ++i) c(i) = inside / group;
  for (Eigen::Index i = hi + 1; i < n; ++i) c(i) = 1.0;
  return c;
}

struct TopSumRun {
  double value_at_unit = 0.0;
  double best = 0.0;
  WeightVector best_w = WeightVector::unit(0);
  double dual = -std::numeric_limits<double>::infinity();
  int iterations = 0;
};

// Entropic mirror descent on the scaled simplex for min S_k(w). Every
// iterate contributes dual-feasible points (X, min_e L*(X)_e) with X in X_k:
// the extreme top-k projector, its tie-symmetrized version, and the running
// average of the symmetrized ones.
void descend(const Graph& g, int k, const OptimizeOptions& options, WeightVector start,
             double stop_gap, TopSumRun& run) {
  const int m = g.size();
  Eigen::VectorXd w = start.to_eigen();
  Eigen::VectorXd averaged = Eigen::VectorXd::Zero(m);
  double averaged_weight = 0.0;
  double step_norm = 0.0;
  for (int t = 1; t <= options.iters; ++t) {
    ++run.iterations;
    const Eig e = eig(laplacian(g, WeightVector::from_values({w.data(), w.data() + m}, false)));
    const double value = top_sum(e.values, k);
    if (value < run.best) {
      run.best = value;
      run.best_w = WeightVector::from_values({w.data(), w.data() + m}, true);
    }
    const Eigen::VectorXd g_ext =
        adjoint_of_weighted_projector(g, e.vectors, extreme_coeffs(e.values.size(), k));
    const Eigen::VectorXd g_sym =
        adjoint_of_weighted_projector(g, e.vectors, symmetric_coeffs(e.values, k));
    run.dual = std::max({run.dual, m * g_ext.minCoeff(), m * g_sym.minCoeff()});

    if (t == 1) step_norm = g_sym.lpNorm<Eigen::Infinity>();
    const double eta = options.step_scale / (std::max(step_norm, 1e-300) * std::sqrt(t));
    averaged += eta * g_sym;
    averaged_weight += eta;
    run.dual = std::max(run.dual, m * averaged.minCoeff() / averaged_weight);

    if (run.best - run.dual <= stop_gap) break;

    const Eigen::VectorXd shifted = g_sym.array() - g_sym.minCoeff();
    w = (w.array() * (-eta * shifted.array()).exp()).matrix();
    w *= m / w.sum();
  }
}

TopSumRun minimize_top_sum(const Graph& g, int k, const OptimizeOptions& options) {
  TopSumRun run;
  run.value_at_unit = top_sum(eig(laplacian(g)).values, k);
  run.best = run.value_at_unit;
  run.best_w = WeightVector::unit(g.size());
  const double stop_gap = 1e-3 * options.tol * std::max(1.0, run.value_at_unit);
  descend(g, k, options, WeightVector::unit(g.size()), stop_gap, run);
  for (int r = 1; r <= options.restarts && run.best - run.dual > stop_gap; ++r) {
    auto start = oracles::random_simplex(g.size(), options.seed + static_cast<std::uint64_t>(r), 1);
    descend(g, k, options, start.front(), stop_gap, run);
  }
  run.dual = std::min(run.dual, run.best);
  return run;
}

OptimizeVerdict classify(double unit_value, double best, double bound, bool maximize, double tol) {
  const double slack = tol * std::max(1.0, std::abs(unit_value));
  if (!maximize) {
    if (unit_value - bound <= slack) return OptimizeVerdict::RigidWithinTol;
    if (best < unit_value - slack) return OptimizeVerdict::Refuted;
  } else {
    if (bound - unit_value <= slack) return OptimizeVerdict::RigidWithinTol;
    if (best > unit_value + slack) return OptimizeVerdict::Refuted;
  }
  return OptimizeVerdict::Inconclusive;
}

OptimizeResult upper_result(int k, const TopSumRun& run, const OptimizeOptions& options) {
  OptimizeResult r;
  r.k = k;
  r.objective = Objective::Upper;
  r.best_w = run.best_w;
  r.value_at_unit = run.value_at_unit;
  r.best_primal = run.best;
  r.dual_bound = run.dual;
  r.gap = std::max(0.0, run.best - run.dual);
  r.iterations = run.iterations;
  r.seed = options.seed;
  r.verdict = classify(r.value_at_unit, r.best_primal, r.dual_bound, false, options.tol);
  return r;
}

// s_k(w) = 2m - S_{n-1-k}(w) on the simplex.
OptimizeResult lower_from_upper(const Graph& g, int k, const OptimizeResult& up,
                                const OptimizeOptions& options) {
  const double trace = 2.0 * g.size();
  OptimizeResult r = up;
  r.k = k;
  r.objective = Objective::Lower;
  r.value_at_unit = trace - up.value_at_unit;
  r.best_primal = trace - up.best_primal;
  r.dual_bound = trace - up.dual_bound;
  r.gap = std::max(0.0, r.dual_bound - r.best_primal);
  r.verdict = classify(r.value_at_unit, r.best_primal, r.dual_bound, true, options.tol);
  return r;
}

OptimizeResult constant_lower(const Graph& g, int k, const OptimizeOptions& options) {
  // k = n-1: s_{n-1}(w) = tr L(w) = 2m everywhere on the simplex.
  OptimizeResult r;
  r.k = k;
  r.objective = Objective::Lower;
  r.best_w = WeightVector::unit(g.size());
  r.value_at_unit = 2.0 * g.size();
  r.best_primal = r.value_at_unit;
  r.dual_bound = r.value_at_unit;
  r.gap = 0.0;
  r.seed = options.seed;
  r.verdict = classify(r.value_at_unit, r.best_primal, r.dual_bound, true, options.tol);
  return r;
}

}  // namespace

KyFanValue kyfan(const Graph& g, const WeightVector& w, int k) {
  require_k(g, k);
  const Eig e = eig(laplacian(g, w));
  KyFanValue out;
  out.k = k;
  out.top_sum = top_sum(e.values, k);
  out.bottom_sum = e.values.segment(1, k).sum();
  const Eigen::MatrixXd top = e.vectors.rightCols(k);
  const Eigen::MatrixXd bottom = e.vectors.middleCols(1, k);
  out.top_projector = top * top.transpose();
  out.bottom_projector = bottom * bottom.transpose();
  return out;
}

std::string to_string(Objective o) { return o == Objective::Upper ? "upper" : "lower"; }

std::string to_string(OptimizeVerdict v) {
  switch (v) {
    case OptimizeVerdict::RigidWithinTol:
      return "rigid-within-tol";
    case OptimizeVerdict::Refuted:
      return "refuted";
    case OptimizeVerdict::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

Objective parse_objective(const std::string& text) {
  if (text == "upper") return Objective::Upper;
  if (text == "lower") return Objective::Lower;
  throw Error("objective must be 'upper' or 'lower'");
}

OptimizeResult optimize(const Graph& g, int k, Objective objective,
                        const OptimizeOptions& options) {
  require_k(g, k);
  if (options.iters < 1) throw Error("iters must be positive");
  if (objective == Objective::Upper)
    return upper_result(k, minimize_top_sum(g, k, options), options);
  const int dual_k = g.order() - 1 - k;
  if (dual_k == 0) return constant_lower(g, k, options);
  const OptimizeResult up = upper_result(dual_k, minimize_top_sum(g, dual_k, options), options);
  return lower_from_upper(g, k, up, options);
}

KCertificate certificate(const Graph& g, int level, double tol) {
  const Eigen::MatrixXd l = laplacian(g);
  const Spectrum s = spectrum(l);
  const int r = s.distinct();
  if (level < 1 || level > r - 1)
    throw IndexOutOfRange("level must lie in 1.." + std::to_string(r - 1));
  const int n = g.order();
  KCertificate c;
  c.level = level;
  c.x_matrix = Eigen::MatrixXd::Zero(n, n);
  c.y_matrix = Eigen::MatrixXd::Zero(n, n);
  c.y = s.eigenvalues[r - level - 1];
  for (int i = r - level; i < r; ++i) {
    c.x_matrix += s.projectors[i];
    c.y_matrix += (s.eigenvalues[i] - c.y) * s.projectors[i];
    c.k += s.multiplicities[i];
    c.x += adjoint_apply(g, s.projectors[i]).mean();
  }
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  const Eigen::MatrixXd slack = c.y_matrix + c.y * id - l;
  c.slack_residual = (c.x_matrix * slack).norm();
  c.range_residual = (c.x_matrix * c.y_matrix - c.y_matrix).norm();
  const Eigen::VectorXd lx = adjoint_apply(g, c.x_matrix);
  c.weight_residual = std::abs((lx.array() - c.x).sum());
  c.dual_infeasibility = std::max(0.0, c.x - lx.minCoeff());
  c.primal_infeasibility =
      std::max({0.0, -eig(slack).values.minCoeff(), -eig(c.y_matrix).values.minCoeff()});
  c.bound = g.size() * c.x;
  c.top_sum_at_unit = top_sum(s.all_eigenvalues, c.k);
  c.certified = c.slack_residual <= tol && c.range_residual <= tol && c.weight_residual <= tol &&
                c.dual_infeasibility <= tol && c.primal_infeasibility <= tol &&
                std::abs(c.bound - c.top_sum_at_unit) <= tol * std::max(1.0, c.top_sum_at_unit);
  return c;
}

GaugeProduct gauge_product(const Graph& g, int k, const OptimizeOptions& options) {
  GaugeProduct out;
  out.k = k;
  out.run = optimize(g, k, Objective::Upper, options);
  const double m = g.size();
  out.top_sum_at_unit = out.run.value_at_unit;
  // min_w S_k(w) = |E| / S_k°(1), bracketed by [dual bound, best primal].
  out.dual_gauge = m / out.run.best_primal;
  out.product = out.top_sum_at_unit * out.dual_gauge;
  out.product_lo = out.product;
  out.product_hi = out.run.dual_bound > 0.0 ? out.top_sum_at_unit * m / out.run.dual_bound
                                            : std::numeric_limits<double>::infinity();
  return out;
}

Profile k_rigidity_profile(const Graph& g, const OptimizeOptions& options, int trace_samples) {
  const int n = g.order();
  Profile p;
  std::vector<OptimizeResult> upper;
  upper.reserve(static_cast<std::size_t>(n - 1));
  for (int k = 1; k <= n - 1; ++k) upper.push_back(optimize(g, k, Objective::Upper, options));
  for (int k = 1; k <= n - 1; ++k) {
    ProfileEntry entry;
    entry.upper = upper[k - 1];
    entry.lower = (k == n - 1) ? constant_lower(g, k, options)
                               : lower_from_upper(g, k, upper[n - 1 - k - 1], options);
    p.entries.push_back(std::move(entry));
  }
  if (trace_samples > 0) {
    p.trace_samples = trace_samples;
    const double trace = 2.0 * g.size();
    for (const WeightVector& w : oracles::random_simplex(g.size(), options.seed, trace_samples)) {
      const Eigen::VectorXd lam = eig(laplacian(g, w)).values;
      for (int k = 1; k <= n - 2; ++k) {
        const double small = lam.segment(1, n - 1 - k).sum();
        p.trace_identity_residual =
            std::max(p.trace_identity_residual, std::abs(small + top_sum(lam, k) - trace));
      }
    }
  }
  return p;
}

}  // namespace edgerigid
