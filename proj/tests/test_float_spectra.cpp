#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>

#include "spectra/eigen_decomposition.hpp"
#include "spectra/error.hpp"
#include "spectra/graph_matrices.hpp"

namespace spectra {
namespace {

using cd = std::complex<double>;

SymMatrix adjacency(const Graph& g) { return to_float(build_matrix(g, MatrixKind::adjacency)); }

HermMatrix random_hermitian(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> d;
  DenseMatrix<cd> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = cd(d(rng), d(rng));
  return HermMatrix::symmetrized(m);
}

TEST(HermitianMatrix, Validation) {
  Eigen::MatrixXd b(3, 3);
  b << 1, 1, 2, 0, -1, 0, 2, 0, -1;
  EXPECT_THROW(SymMatrix::from_dense(b), PreconditionError);
  EXPECT_THROW(SymMatrix::from_dense(Eigen::MatrixXd(2, 3)), PreconditionError);
  DenseMatrix<cd> c(2, 2);
  c << cd(1, 1), cd(0, 1), cd(0, -1), 1;
  EXPECT_THROW(HermMatrix::from_dense(c), PreconditionError);
  c(0, 0) = 1;
  EXPECT_NO_THROW(HermMatrix::from_dense(c));
}

TEST(Eigh, TriangleSpectrum) {
  const auto report = eigh(adjacency(families::complete(3)));
  EXPECT_NEAR(report.eigenvalues(0), 2.0, 1e-10);
  EXPECT_NEAR(report.eigenvalues(1), -1.0, 1e-10);
  EXPECT_NEAR(report.eigenvalues(2), -1.0, 1e-10);
  EXPECT_EQ(report.distinct_count, 2);
  EXPECT_EQ(report.clusters, (std::vector<Cluster>{{0, 1}, {1, 3}}));
}

TEST(Eigh, ZeroMatrix) {
  const auto report = eigh(SymMatrix::from_dense(Eigen::MatrixXd::Zero(4, 4)));
  EXPECT_EQ(report.eigenvalues.cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ(report.distinct_count, 1);
  EXPECT_LE(report.orthogonality_residual, 1e-14);
  EXPECT_EQ(report.reconstruction_residual, 0.0);
}

TEST(Eigh, RejectsNonFinite) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2, 2);
  m(0, 0) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(eigh(SymMatrix::from_dense(m)), PreconditionError);
}

TEST(Eigh, ResidualsOnRandomHermitian) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 20;
    const auto h = random_hermitian(n, rng);
    const auto report = eigh(h);
    const double scale = std::max(1.0, h.max_abs());
    EXPECT_LE(report.reconstruction_residual, 1e-10 * n * scale);
    EXPECT_LE(report.orthogonality_residual, 1e-10 * n);
    for (int i = 1; i < n; ++i) EXPECT_GE(report.eigenvalues(i - 1), report.eigenvalues(i));
  }
}

TEST(Eigh, TraceEqualsEigenvalueSum) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const auto h = random_hermitian(2 + trial, rng);
    EXPECT_NEAR(eigh(h).eigenvalues.sum(), h.dense().trace().real(), 1e-9 * (2 + trial));
  }
}

TEST(Eigh, EigenvectorPhaseIsNormalized) {
  std::mt19937_64 rng(37);
  const auto report = eigh(random_hermitian(6, rng));
  for (int c = 0; c < 6; ++c) {
    const auto v = report.eigenvectors.col(c);
    int first = 0;
    while (std::abs(v(first)) <= 1e-12 * v.cwiseAbs().maxCoeff()) ++first;
    EXPECT_GT(v(first).real(), 0.0);
    EXPECT_NEAR(v(first).imag(), 0.0, 1e-14);
  }
}

TEST(Clustering, Examples) {
  const std::vector<double> k3{2, -1, -1};
  EXPECT_EQ(cluster_eigenvalues(k3, 1e-6).size(), 2u);
  EXPECT_EQ(cluster_eigenvalues(std::vector<double>{5, 3, 1}, 1e-6).size(), 3u);
  const auto p7 = eigh(adjacency(families::path(7)));
  EXPECT_EQ(p7.distinct_count, 7);
  for (int k = 1; k <= 7; ++k) EXPECT_NEAR(p7.eigenvalues(k - 1), 2 * std::cos(k * std::numbers::pi / 8), 1e-10);
  EXPECT_THROW(cluster_eigenvalues(std::vector<double>{1, 2}, 1e-6), PreconditionError);
  EXPECT_THROW(cluster_eigenvalues(k3, 0.0), PreconditionError);
}

TEST(Clustering, PartitionCutsLargestGaps) {
  const std::vector<double> v{3.0, 2.9999999, 1.0, 0.5, 0.5};
  EXPECT_EQ(partition_into(v, 2), (std::vector<Cluster>{{0, 2}, {2, 5}}));
  EXPECT_EQ(partition_into(v, 3), (std::vector<Cluster>{{0, 2}, {2, 3}, {3, 5}}));
  const auto means = cluster_means(v, partition_into(v, 3));
  EXPECT_NEAR(means[0], 2.99999995, 1e-12);
  EXPECT_NEAR(min_cluster_gap(v, partition_into(v, 3)), 0.5, 1e-12);
  EXPECT_THROW(partition_into(v, 6), PreconditionError);
}

TEST(MinSingularValue, Examples) {
  const SymMatrix a = adjacency(families::complete(3));
  EXPECT_LE(min_singular_value(a, 2.0), 1e-9);
  EXPECT_NEAR(min_singular_value(a, 0.0), 1.0, 1e-9);
  EXPECT_NEAR(min_singular_value(SymMatrix::identity(4)), 1.0, 1e-12);
}

TEST(RankOne, AllOnes) {
  const auto j = SymMatrix::from_dense(Eigen::MatrixXd::Ones(3, 3));
  const auto f = rank_one_factor(j, 1e-9);
  ASSERT_TRUE(f.has_value());
  EXPECT_NEAR(f->b, 3.0, 1e-12);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(f->y(i), 1 / std::sqrt(3.0), 1e-12);
  EXPECT_FALSE(rank_one_factor(SymMatrix::from_dense(Eigen::MatrixXd::Zero(3, 3)), 1e-9).has_value());
  EXPECT_FALSE(rank_one_factor(SymMatrix::identity(3), 1e-9).has_value());
}

TEST(RankOne, ComplexOuterProduct) {
  DenseVector<cd> y(3);
  y << cd(1, 0), cd(0, 2), cd(-1, 1);
  const auto p = HermMatrix::symmetrized(-2.0 * y * y.adjoint());
  const auto f = rank_one_factor(p, 1e-9);
  ASSERT_TRUE(f.has_value());
  EXPECT_NEAR(f->b, -2.0 * y.squaredNorm(), 1e-10);
  EXPECT_LE(f->residual, 1e-12);
}

TEST(EvalPolyFloat, Examples) {
  const SymMatrix a = adjacency(families::complete(3));
  const std::vector<double> minus_one{-1.0};
  EXPECT_LE((eval_poly_matrix_float(minus_one, a) - Eigen::MatrixXd::Ones(3, 3)).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_EQ(eval_poly_matrix_float(std::span<const double>{}, a), Eigen::MatrixXd::Identity(3, 3));

  const SymMatrix p3 = adjacency(families::path(3));
  const std::vector<double> rest{0.0, -std::sqrt(2.0)};
  const auto prod = SymMatrix::symmetrized(eval_poly_matrix_float(rest, p3));
  const auto f = rank_one_factor(prod, 1e-9);
  ASSERT_TRUE(f.has_value());
  EXPECT_NEAR(f->b, std::sqrt(2.0) * 2 * std::sqrt(2.0), 1e-12);
}

}  // namespace
}  // namespace spectra
