#include <gtest/gtest.h>

#include <cmath>

#include "edgerigid/errors.hpp"
#include "edgerigid/families.hpp"
#include "edgerigid/oracles.hpp"
#include "edgerigid/rigidity.hpp"
#include "edgerigid/spectral.hpp"

using namespace edgerigid;
namespace fam = edgerigid::families;

namespace {

void expect_spectrum(const Graph& g, std::vector<double> values, std::vector<int> mult) {
  const Spectrum s = spectrum(laplacian(g));
  ASSERT_EQ(s.distinct(), static_cast<int>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) {
    EXPECT_NEAR(s.eigenvalues[i], values[i], 1e-10);
    EXPECT_EQ(s.multiplicities[i], mult[i]);
  }
}

}  // namespace

TEST(Spectrum, Examples) {
  expect_spectrum(fam::complete(4), {0, 4}, {1, 3});
  expect_spectrum(fam::cycle(4), {0, 2, 4}, {1, 2, 1});
  expect_spectrum(fam::path(3), {0, 1, 3}, {1, 1, 1});
}

TEST(Spectrum, ProjectorInvariants) {
  for (const auto& entry : fam::reference_corpus()) {
    const Graph& g = entry.graph;
    const int n = g.order();
    const Eigen::MatrixXd l = laplacian(g);
    const Spectrum s = spectrum(l);
    int total = 0;
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n), recon = sum;
    for (int i = 0; i < s.distinct(); ++i) {
      total += s.multiplicities[i];
      sum += s.projectors[i];
      recon += s.eigenvalues[i] * s.projectors[i];
      for (int j = i + 1; j < s.distinct(); ++j)
        EXPECT_LT((s.projectors[i] * s.projectors[j]).norm(), 1e-8) << entry.name;
    }
    EXPECT_EQ(total, n);
    EXPECT_LT((sum - Eigen::MatrixXd::Identity(n, n)).norm(), 1e-8 * std::sqrt(n));
    EXPECT_LT((recon - l).norm(), 1e-8 * std::max(1.0, l.norm()));
    EXPECT_NEAR(s.eigenvalues[0], 0.0, 1e-10);
    EXPECT_LT((s.projectors[0] - Eigen::MatrixXd::Constant(n, n, 1.0 / n)).norm(), 1e-8);
  }
}

TEST(Spectrum, TraceIdentityUnderWeights) {
  for (const auto& entry : fam::reference_corpus()) {
    const Graph& g = entry.graph;
    for (const WeightVector& w : oracles::random_simplex(g.size(), 2, 5)) {
      const Spectrum s = spectrum(laplacian(g, w));
      double tr = 0.0;
      for (int i = 0; i < s.distinct(); ++i) tr += s.multiplicities[i] * s.eigenvalues[i];
      EXPECT_NEAR(tr, 2.0 * g.size(), 1e-9 * 2.0 * g.size()) << entry.name;
    }
  }
}

TEST(EdgeIsometry, CompleteFour) {
  const Graph g = fam::complete(4);
  const EdgeIsometryReport r = edge_isometry_check(g, spectrum(laplacian(g)), 1e-8);
  ASSERT_EQ(r.eigenspaces.size(), 1u);
  EXPECT_NEAR(r.eigenspaces[0].gamma, 2.0, 1e-12);
  EXPECT_TRUE(r.all_constant);
}

TEST(EdgeIsometry, GammaSumAndVerdictsMatchExact) {
  for (const auto& entry : fam::reference_corpus()) {
    const Graph& g = entry.graph;
    const EdgeIsometryReport r = edge_isometry_check(g, spectrum(laplacian(g)), 1e-8);
    EXPECT_EQ(r.all_constant, decide_edge_rigid_exact(g).rigid) << entry.name;
    EXPECT_EQ(r.all_constant, entry.edge_rigid) << entry.name;
    if (!entry.edge_rigid) continue;
    double total = 0.0;
    for (const auto& e : r.eigenspaces) {
      total += e.gamma;
      EXPECT_GT(e.gamma, 0.0);
      EXPECT_FALSE(e.anomalous);
    }
    EXPECT_NEAR(total, 2.0, 1e-9) << entry.name;
  }
}

TEST(Embedding, CycleMiddleEigenspace) {
  const Graph g = fam::cycle(4);
  const Embedding emb = embedding(g, spectrum(laplacian(g)), 2);
  ASSERT_EQ(emb.coordinates.rows(), 4);
  ASSERT_EQ(emb.coordinates.cols(), 2);
  for (const Edge& e : g.edges())
    EXPECT_NEAR((emb.coordinates.row(e.a) - emb.coordinates.row(e.b)).squaredNorm(), 1.0, 1e-12);
}

TEST(Embedding, CenteredOrthonormalAndIsometric) {
  for (const auto& entry : fam::reference_corpus()) {
    const Graph& g = entry.graph;
    const Spectrum s = spectrum(laplacian(g));
    for (int i = 2; i <= s.distinct(); ++i) {
      const Embedding emb = embedding(g, s, i);
      const Eigen::MatrixXd& u = emb.coordinates;
      EXPECT_LT(u.colwise().sum().norm(), 1e-10);
      EXPECT_LT((u.transpose() * u - Eigen::MatrixXd::Identity(u.cols(), u.cols())).norm(), 1e-10);
      if (!entry.edge_rigid) continue;
      const double first = (u.row(g.edge(0).a) - u.row(g.edge(0).b)).squaredNorm();
      for (const Edge& e : g.edges())
        EXPECT_NEAR((u.row(e.a) - u.row(e.b)).squaredNorm(), first, 1e-9) << entry.name;
    }
    EXPECT_THROW(embedding(g, s, 1), IndexOutOfRange);
    EXPECT_THROW(embedding(g, s, s.distinct() + 1), IndexOutOfRange);
  }
}

TEST(Embedding, CsvHeader) {
  const Graph g = fam::cycle(4);
  const std::string csv = embedding_csv(embedding(g, spectrum(laplacian(g)), 2));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "vertex,c1,c2");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
}

TEST(Resistance, ExamplesAndFoster) {
  const Eigen::VectorXd pet = effective_resistances(fam::petersen(), WeightVector::unit(15));
  const Eigen::VectorXd c4 = effective_resistances(fam::cycle(4), WeightVector::unit(4));
  for (int e = 0; e < 15; ++e) EXPECT_NEAR(pet[e], 0.6, 1e-12);
  for (int e = 0; e < 4; ++e) EXPECT_NEAR(c4[e], 0.75, 1e-12);
  for (const auto& entry : fam::reference_corpus()) {
    const Graph& g = entry.graph;
    EXPECT_NEAR(effective_resistances(g, WeightVector::unit(g.size())).sum(), g.order() - 1, 1e-9);
  }
}

TEST(Resistance, TreeEdgesHaveUnitResistance) {
  const Graph t = fam::random_tree(9, 1);
  const Eigen::VectorXd r = effective_resistances(t, WeightVector::unit(t.size()));
  for (int e = 0; e < t.size(); ++e) EXPECT_NEAR(r[e], 1.0, 1e-12);
}

TEST(Resistance, DisconnectingWeights) {
  const WeightVector w = WeightVector::from_values({1, 0, 1, 0}, true);
  // C_4 edges (0,1),(0,3),(1,2),(2,3): zeros on (0,3) and (1,2) split it.
  EXPECT_THROW(effective_resistances(fam::cycle(4), w), DisconnectingWeights);
  EXPECT_TRUE(std::isinf(kirchhoff_index(fam::cycle(4), w)));
  EXPECT_EQ(weighted_tree_count(fam::cycle(4), w), 0.0);
  const WeightVector one_gone = WeightVector::from_values({1, 1, 1, 0}, true);
  EXPECT_TRUE(std::isfinite(kirchhoff_index(fam::cycle(4), one_gone)));
}

TEST(Kirchhoff, ExamplesAndPairwiseAgreement) {
  EXPECT_NEAR(kirchhoff_index(fam::complete(4), WeightVector::unit(6)), 3.0, 1e-12);
  EXPECT_NEAR(kirchhoff_index(fam::cycle(4), WeightVector::unit(4)), 5.0, 1e-12);
  for (const auto& entry : fam::reference_corpus()) {
    const Graph& g = entry.graph;
    const WeightVector w = WeightVector::unit(g.size());
    const double kf = kirchhoff_index(g, w);
    EXPECT_NEAR(kirchhoff_index_pairwise(g, w), kf, 1e-8 * kf) << entry.name;
  }
}

TEST(TreeCount, ExactMatchesEnumeration) {
  EXPECT_EQ(tree_count_exact(fam::complete(4)), 16);
  EXPECT_EQ(tree_count_exact(fam::cycle(4)), 4);
  EXPECT_EQ(tree_count_exact(fam::path(4)), 1);
  for (const auto& entry : fam::reference_corpus()) {
    const Graph& g = entry.graph;
    if (g.size() > 20) continue;
    EXPECT_EQ(tree_count_exact(g), oracles::enumerate_spanning_trees(g)) << entry.name;
    EXPECT_NEAR(weighted_tree_count(g, WeightVector::unit(g.size())),
                tree_count_exact(g).get_d(), 1e-8 * tree_count_exact(g).get_d());
  }
  EXPECT_EQ(tree_count_exact(fam::petersen()), 2000);
}

TEST(TreeCount, WeightedMatchesEnumeration) {
  for (const auto& entry : fam::reference_corpus()) {
    const Graph& g = entry.graph;
    if (g.size() > 15) continue;
    for (const WeightVector& w : oracles::random_simplex(g.size(), 13, 3)) {
      const double brute = oracles::weighted_enum(g, w);
      EXPECT_NEAR(weighted_tree_count(g, w), brute, 1e-8 * brute) << entry.name;
    }
  }
}

TEST(Majorization, Examples) {
  EXPECT_TRUE(majorization_check({0, 2, 2, 4}, {0, 2, 2, 4}, 1e-12));
  EXPECT_FALSE(majorization_check({0, 4}, {1, 3}, 1e-12));
  EXPECT_TRUE(majorization_check({1, 3}, {0, 4}, 1e-12));
  EXPECT_FALSE(majorization_check({1, 3}, {0, 5}, 1e-12));
  EXPECT_THROW(majorization_check({1, 2}, {3}, 1e-12), LengthMismatch);
}

TEST(Majorization, UnitSpectrumMajorizedOnRigidGraphs) {
  const Graph g = fam::cycle(4);
  const std::vector<double> base{0, 2, 2, 4};
  for (const WeightVector& w : oracles::random_simplex(g.size(), 21, 100)) {
    const Spectrum s = spectrum(laplacian(g, w));
    std::vector<double> other(s.all_eigenvalues.data(), s.all_eigenvalues.data() + 4);
    EXPECT_TRUE(majorization_check(base, other, 1e-9));
  }
}

TEST(Consequences, UnitWeightsAreExtremalOnRigidGraphs) {
  for (const auto& entry : fam::reference_corpus()) {
    if (!entry.edge_rigid) continue;
    const Graph& g = entry.graph;
    const WeightVector unit = WeightVector::unit(g.size());
    const double tau1 = weighted_tree_count(g, unit), kf1 = kirchhoff_index(g, unit);
    for (const WeightVector& w : oracles::random_simplex(g.size(), 99, 200)) {
      EXPECT_LE(weighted_tree_count(g, w), tau1 * (1 + 1e-9)) << entry.name;
      EXPECT_GE(kirchhoff_index(g, w), kf1 * (1 - 1e-9)) << entry.name;
    }
  }
}
