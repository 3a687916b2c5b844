#include <gtest/gtest.h>

#include <random>

#include "edgerigid/eigensum.hpp"
#include "edgerigid/errors.hpp"
#include "edgerigid/families.hpp"
#include "edgerigid/oracles.hpp"
#include "edgerigid/spectral.hpp"

using namespace edgerigid;
namespace fam = edgerigid::families;

namespace {

// Orthogonal projector of rank k onto a random subspace of 1-perp.
Eigen::MatrixXd random_projector(int n, int k, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Eigen::MatrixXd a(n, k);
  for (int i = 0; i < a.size(); ++i) a.data()[i] = normal(rng);
  a.rowwise() -= a.colwise().mean();
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, k);
  return q * q.transpose();
}

}  // namespace

TEST(KyFan, Examples) {
  const KyFanValue k4 = kyfan(fam::complete(4), WeightVector::unit(6), 2);
  EXPECT_NEAR(k4.top_sum, 8.0, 1e-12);
  EXPECT_NEAR(k4.bottom_sum, 8.0, 1e-12);
  const KyFanValue c4 = kyfan(fam::cycle(4), WeightVector::unit(4), 1);
  EXPECT_NEAR(c4.top_sum, 4.0, 1e-12);
  EXPECT_NEAR(c4.bottom_sum, 2.0, 1e-12);
  for (const auto& entry : fam::reference_corpus()) {
    const Graph& g = entry.graph;
    const KyFanValue full = kyfan(g, WeightVector::unit(g.size()), g.order() - 1);
    EXPECT_NEAR(full.top_sum, 2.0 * g.size(), 1e-9);
    EXPECT_NEAR(full.bottom_sum, 2.0 * g.size(), 1e-9);
  }
}

TEST(KyFan, ProjectorsAndMonotonicity) {
  for (const auto& entry : fam::reference_corpus()) {
    const Graph& g = entry.graph;
    const int n = g.order();
    for (const WeightVector& w : oracles::random_simplex(g.size(), 8, 3)) {
      const Eigen::MatrixXd l = laplacian(g, w);
      double previous = 0.0;
      for (int k = 1; k < n; ++k) {
        const KyFanValue v = kyfan(g, w, k);
        EXPECT_GE(v.top_sum, previous - 1e-12);
        previous = v.top_sum;
        for (const Eigen::MatrixXd* x : {&v.top_projector, &v.bottom_projector}) {
          EXPECT_NEAR(x->trace(), k, 1e-10);
          EXPECT_LT((*x * *x - *x).norm(), 1e-10);
        }
        EXPECT_NEAR((l.array() * v.top_projector.array()).sum(), v.top_sum, 1e-9);
        EXPECT_NEAR((l.array() * v.bottom_projector.array()).sum(), v.bottom_sum, 1e-9);
      }
    }
  }
}

TEST(KyFan, TraceIdentityOnSimplex) {
  for (const auto& entry : fam::reference_corpus()) {
    const Graph& g = entry.graph;
    const int n = g.order();
    const double twice_m = 2.0 * g.size();
    for (const WeightVector& w : oracles::random_simplex(g.size(), 17, 5))
      for (int k = 1; k <= n - 2; ++k) {
        const double sum = kyfan(g, w, k).bottom_sum + kyfan(g, w, n - 1 - k).top_sum;
        EXPECT_NEAR(sum, twice_m, 1e-9 * twice_m) << entry.name << " k=" << k;
      }
  }
}

TEST(KyFan, DominatesRandomFeasibleProjectors) {
  std::mt19937_64 rng(23);
  for (const auto& entry : fam::reference_corpus()) {
    const Graph& g = entry.graph;
    const WeightVector w = oracles::random_simplex(g.size(), 4, 1)[0];
    const Eigen::MatrixXd l = laplacian(g, w);
    for (int k = 1; k < g.order(); ++k) {
      const double s = kyfan(g, w, k).top_sum;
      for (int trial = 0; trial < 50; ++trial) {
        const Eigen::MatrixXd x = random_projector(g.order(), k, rng);
        EXPECT_LE((l.array() * x.array()).sum(), s + 1e-8);
      }
    }
  }
}

TEST(Optimize, CompleteFourIsRigid) {
  const OptimizeResult r = optimize(fam::complete(4), 1, Objective::Upper);
  EXPECT_NEAR(r.best_primal, 4.0, 1e-8);
  EXPECT_NEAR(r.dual_bound, 4.0, 1e-6);
  EXPECT_EQ(r.verdict, OptimizeVerdict::RigidWithinTol);
}

TEST(Optimize, CycleFourUpperOne) {
  const OptimizeResult r = optimize(fam::cycle(4), 1, Objective::Upper);
  EXPECT_NEAR(r.best_primal, 4.0, 1e-8);
  EXPECT_EQ(r.verdict, OptimizeVerdict::RigidWithinTol);
}

TEST(Optimize, TopLevelIsConstant) {
  for (const auto& entry : fam::reference_corpus()) {
    const Graph& g = entry.graph;
    for (Objective obj : {Objective::Upper, Objective::Lower}) {
      const OptimizeResult r = optimize(g, g.order() - 1, obj);
      EXPECT_NEAR(r.best_primal, 2.0 * g.size(), 1e-9);
      EXPECT_NEAR(r.gap, 0.0, 1e-9);
      EXPECT_EQ(r.verdict, OptimizeVerdict::RigidWithinTol);
    }
  }
}

TEST(Optimize, DualBoundIsSoundAndGapNonnegative) {
  for (const auto& entry : fam::reference_corpus()) {
    const Graph& g = entry.graph;
    const auto samples = oracles::random_simplex(g.size(), 31, 100);
    OptimizeOptions opts;
    opts.iters = 500;
    for (int k = 1; k < g.order(); ++k) {
      const OptimizeResult up = optimize(g, k, Objective::Upper, opts);
      EXPECT_GE(up.gap, 0.0);
      EXPECT_LE(up.dual_bound, up.best_primal);
      const OptimizeResult lo = optimize(g, k, Objective::Lower, opts);
      EXPECT_GE(lo.gap, 0.0);
      EXPECT_GE(lo.dual_bound, lo.best_primal);
      for (const WeightVector& w : samples) {
        const KyFanValue v = kyfan(g, w, k);
        EXPECT_LE(up.dual_bound, v.top_sum + 1e-9) << entry.name << " k=" << k;
        EXPECT_GE(lo.dual_bound, v.bottom_sum - 1e-9) << entry.name << " k=" << k;
      }
    }
  }
}

TEST(Optimize, BestPrimalIsNonincreasingInBudget) {
  const Graph g = fam::remove_edge(fam::complete(5), 0, 1);
  for (int k = 1; k < g.order(); ++k) {
    double previous = std::numeric_limits<double>::infinity();
    for (int iters : {1, 10, 100, 1000}) {
      OptimizeOptions opts;
      opts.iters = iters;
      const OptimizeResult r = optimize(g, k, Objective::Upper, opts);
      EXPECT_LE(r.best_primal, previous + 1e-15) << "k=" << k << " iters=" << iters;
      EXPECT_LE(r.iterations, iters);
      previous = r.best_primal;
    }
  }
}

TEST(Optimize, RefutationIsRevalidated) {
  const Graph p4 = fam::path(4);
  int refuted = 0;
  for (int k = 1; k < p4.order(); ++k)
    for (Objective obj : {Objective::Upper, Objective::Lower}) {
      const OptimizeResult r = optimize(p4, k, obj);
      if (r.verdict != OptimizeVerdict::Refuted) continue;
      ++refuted;
      const KyFanValue v = kyfan(p4, r.best_w, k);
      const double direct = obj == Objective::Upper ? v.top_sum : v.bottom_sum;
      EXPECT_NEAR(direct, r.best_primal, 1e-9);
      if (obj == Objective::Upper) EXPECT_LT(direct, r.value_at_unit);
      else EXPECT_GT(direct, r.value_at_unit);
      EXPECT_NEAR(std::accumulate(r.best_w.values().begin(), r.best_w.values().end(), 0.0),
                  3.0, 1e-9);
    }
  EXPECT_GE(refuted, 1);
}

TEST(Optimize, SeededRestartsAreReproducible) {
  OptimizeOptions opts;
  opts.iters = 200;
  opts.restarts = 2;
  opts.seed = 5;
  const Graph g = fam::random_tree(8, 7);
  const OptimizeResult a = optimize(g, 2, Objective::Upper, opts);
  const OptimizeResult b = optimize(g, 2, Objective::Upper, opts);
  EXPECT_EQ(a.best_primal, b.best_primal);
  EXPECT_TRUE(std::ranges::equal(a.best_w.values(), b.best_w.values()));
  EXPECT_EQ(a.seed, 5u);
}

TEST(Certificate, CompleteFour) {
  const KCertificate c = certificate(fam::complete(4), 1);
  EXPECT_EQ(c.k, 3);
  EXPECT_NEAR(c.x, 2.0, 1e-12);
  EXPECT_NEAR(c.y, 0.0, 1e-12);
  EXPECT_NEAR(c.bound, 12.0, 1e-9);
  EXPECT_NEAR(c.top_sum_at_unit, 12.0, 1e-9);
  EXPECT_LT((c.x_matrix - (Eigen::MatrixXd::Identity(4, 4) -
                           Eigen::MatrixXd::Constant(4, 4, 0.25))).norm(), 1e-10);
  // Y_1 = (lambda_2 - lambda_1) E_2 = 4 (I - J/4).
  EXPECT_LT((c.y_matrix - 4.0 * c.x_matrix).norm(), 1e-10);
  EXPECT_TRUE(c.certified);
}

TEST(Certificate, CycleFour) {
  const KCertificate c = certificate(fam::cycle(4), 1);
  EXPECT_EQ(c.k, 1);
  EXPECT_NEAR(c.bound, 4.0, 1e-9);
  EXPECT_NEAR(c.top_sum_at_unit, 4.0, 1e-9);
  EXPECT_TRUE(c.certified);
}

TEST(Certificate, PathFourFails) {
  const KCertificate c = certificate(fam::path(4), 1);
  EXPECT_FALSE(c.certified);
  EXPECT_GT(std::max({c.slack_residual, c.range_residual, c.weight_residual,
                      c.dual_infeasibility, c.primal_infeasibility}),
            1e-8);
  EXPECT_THROW(certificate(fam::path(4), 0), IndexOutOfRange);
  EXPECT_THROW(certificate(fam::path(4), 4), IndexOutOfRange);
}

TEST(Certificate, EveryLevelOnRigidCorpus) {
  for (const auto& entry : fam::reference_corpus()) {
    const Graph& g = entry.graph;
    const int r = spectrum(laplacian(g)).distinct();
    bool all_certified = true;
    for (int j = 1; j < r; ++j) {
      const KCertificate c = certificate(g, j);
      all_certified = all_certified && c.certified;
      if (!entry.edge_rigid) continue;
      EXPECT_TRUE(c.certified) << entry.name << " j=" << j;
      EXPECT_NEAR(c.bound, c.top_sum_at_unit, 1e-8 * c.top_sum_at_unit);
    }
    EXPECT_EQ(all_certified, entry.edge_rigid) << entry.name;
  }
}

TEST(Gauge, CompleteFour) {
  const GaugeProduct p = gauge_product(fam::complete(4), 1);
  EXPECT_NEAR(p.top_sum_at_unit, 4.0, 1e-12);
  EXPECT_NEAR(p.dual_gauge, 1.5, 1e-8);
  EXPECT_NEAR(p.product, 6.0, 1e-8);
  EXPECT_LE(p.product_lo, p.product_hi);
}

TEST(Gauge, PathFourExceedsEdgeCount) {
  const Graph p4 = fam::path(4);
  bool exceeded = false;
  for (int k = 1; k < 4; ++k) {
    const GaugeProduct p = gauge_product(p4, k);
    EXPECT_GE(p.product, 3.0 - 1e-9);
    if (p.product > 3.0 + 1e-5) exceeded = true;
  }
  EXPECT_TRUE(exceeded);
}

TEST(Profile, CompleteFourAllRigid) {
  const Profile prof = k_rigidity_profile(fam::complete(4));
  ASSERT_EQ(prof.entries.size(), 3u);
  for (const auto& e : prof.entries) {
    EXPECT_EQ(e.upper.verdict, OptimizeVerdict::RigidWithinTol);
    EXPECT_EQ(e.lower.verdict, OptimizeVerdict::RigidWithinTol);
  }
  EXPECT_LT(prof.trace_identity_residual, 1e-9);
  EXPECT_EQ(prof.trace_samples, 10);
}

TEST(Profile, PathFourHasRefutation) {
  const Profile prof = k_rigidity_profile(fam::path(4));
  int refuted = 0;
  for (const auto& e : prof.entries)
    refuted += (e.upper.verdict == OptimizeVerdict::Refuted) +
               (e.lower.verdict == OptimizeVerdict::Refuted);
  EXPECT_GE(refuted, 1);
}

TEST(Profile, UpperVerdictsInterpolateBetweenLevels) {
  // Upper rigidity at k_j and k_{j+1} must carry over to every k between.
  for (const auto& entry : fam::reference_corpus()) {
    const Graph& g = entry.graph;
    if (!entry.edge_rigid) continue;
    const Spectrum s = spectrum(laplacian(g));
    const Profile prof = k_rigidity_profile(g);
    std::vector<int> levels{0};
    for (int j = 1; j < s.distinct(); ++j) levels.push_back(certificate(g, j).k);
    for (std::size_t j = 0; j + 1 < levels.size(); ++j) {
      const auto rigid_at = [&](int k) {
        return k == 0 || prof.entries[k - 1].upper.verdict == OptimizeVerdict::RigidWithinTol;
      };
      if (!rigid_at(levels[j]) || !rigid_at(levels[j + 1])) continue;
      for (int k = levels[j] + 1; k < levels[j + 1]; ++k)
        EXPECT_TRUE(rigid_at(k)) << entry.name << " k=" << k;
    }
  }
}
