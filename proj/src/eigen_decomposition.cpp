#include "spectra/eigen_decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "spectra/error.hpp"

namespace spectra {

std::vector<Cluster> cluster_eigenvalues(std::span<const double> values, double gap_tol) {
  if (!(gap_tol > 0.0)) throw PreconditionError("cluster_eigenvalues: gap_tol must be positive");
  std::vector<Cluster> clusters;
  if (values.empty()) return clusters;
  Cluster current{0, 1};
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[i - 1]) throw PreconditionError("cluster_eigenvalues: values must be sorted descending");
    if (values[i - 1] - values[i] > gap_tol) {
      clusters.push_back(current);
      current = {static_cast<int>(i), static_cast<int>(i)};
    }
    current.end = static_cast<int>(i) + 1;
  }
  clusters.push_back(current);
  return clusters;
}

std::vector<Cluster> partition_into(std::span<const double> values, int count) {
  const int n = static_cast<int>(values.size());
  if (count < 1 || count > n) throw PreconditionError("partition_into: count out of range");
  std::vector<int> gap_index(n - 1);
  std::iota(gap_index.begin(), gap_index.end(), 1);
  // Stable ordering by gap size keeps the cut choice deterministic on ties.
  std::stable_sort(gap_index.begin(), gap_index.end(),
                   [&](int a, int b) { return values[a - 1] - values[a] > values[b - 1] - values[b]; });
  std::vector<int> cuts(gap_index.begin(), gap_index.begin() + (count - 1));
  std::sort(cuts.begin(), cuts.end());
  std::vector<Cluster> clusters;
  int begin = 0;
  for (int cut : cuts) {
    clusters.push_back({begin, cut});
    begin = cut;
  }
  clusters.push_back({begin, n});
  return clusters;
}

std::vector<double> cluster_means(std::span<const double> values, std::span<const Cluster> clusters) {
  std::vector<double> means;
  means.reserve(clusters.size());
  for (const Cluster& c : clusters) {
    double sum = 0.0;
    for (int i = c.begin; i < c.end; ++i) sum += values[i];
    means.push_back(sum / c.size());
  }
  return means;
}

double min_cluster_gap(std::span<const double> values, std::span<const Cluster> clusters) {
  const auto means = cluster_means(values, clusters);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < means.size(); ++i) best = std::min(best, means[i - 1] - means[i]);
  return best;
}

template <typename Scalar>
std::vector<double> SpectrumReport<Scalar>::distinct_values() const {
  return cluster_means(std::span<const double>(eigenvalues.data(), eigenvalues.size()), clusters);
}

template <typename Scalar>
void normalize_phase(DenseVector<Scalar>& v) {
  if (v.size() == 0) return;
  const double cutoff = 1e-12 * v.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v(i));
    if (mag > cutoff) {
      v *= Scalar(mag) / v(i);
      v(i) = Scalar(mag);
      return;
    }
  }
}

template <typename Scalar>
SpectrumReport<Scalar> eigh(const HermitianMatrix<Scalar>& h, double gap_tol) {
  const auto& m = h.dense();
  if (!m.allFinite()) throw PreconditionError("eigh: matrix has non-finite entries");
  const Eigen::Index n = m.rows();
  SpectrumReport<Scalar> report;
  if (n == 0) return report;

  Eigen::SelfAdjointEigenSolver<DenseMatrix<Scalar>> solver(m, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw NumericalError("eigh: eigensolver did not converge");

  report.eigenvalues = solver.eigenvalues().reverse();
  report.eigenvectors = solver.eigenvectors().rowwise().reverse();
  for (Eigen::Index c = 0; c < n; ++c) {
    DenseVector<Scalar> col = report.eigenvectors.col(c);
    normalize_phase(col);
    report.eigenvectors.col(c) = col;
  }

  const auto& v = report.eigenvectors;
  report.reconstruction_residual =
      (m - v * report.eigenvalues.template cast<Scalar>().asDiagonal() * v.adjoint()).cwiseAbs().maxCoeff();
  report.orthogonality_residual =
      (v.adjoint() * v - DenseMatrix<Scalar>::Identity(n, n)).cwiseAbs().maxCoeff();

  std::span<const double> values(report.eigenvalues.data(), static_cast<std::size_t>(n));
  report.clusters = cluster_eigenvalues(values, gap_tol);
  report.distinct_count = static_cast<int>(report.clusters.size());
  return report;
}

template <typename Scalar>
double min_singular_value(const HermitianMatrix<Scalar>& h, double shift) {
  const auto shifted = h.shifted(shift);
  if (!shifted.dense().allFinite()) throw PreconditionError("min_singular_value: non-finite entries");
  if (shifted.dim() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<DenseMatrix<Scalar>> solver(shifted.dense(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("min_singular_value: eigensolver did not converge");
  return solver.eigenvalues().cwiseAbs().minCoeff();
}

template <typename Scalar>
RankOneAnalysis<Scalar> analyze_rank_one(const HermitianMatrix<Scalar>& p, double tol) {
  const int n = p.dim();
  RankOneAnalysis<Scalar> out;
  if (n == 0) return out;
  const auto report = eigh(p);
  out.threshold = tol * p.max_abs() * n;
  Eigen::Index dominant = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double mag = std::abs(report.eigenvalues(i));
    if (mag > out.threshold) ++out.significant_count;
    if (mag > std::abs(report.eigenvalues(dominant))) dominant = i;
  }
  out.b = report.eigenvalues(dominant);
  out.y = report.eigenvectors.col(dominant);
  out.residual = (p.dense() - Scalar(out.b) * out.y * out.y.adjoint()).cwiseAbs().maxCoeff();
  return out;
}

template <typename Scalar>
std::optional<RankOneFactor<Scalar>> rank_one_factor(const HermitianMatrix<Scalar>& p, double tol) {
  auto analysis = analyze_rank_one(p, tol);
  if (analysis.significant_count != 1) return std::nullopt;
  return RankOneFactor<Scalar>{analysis.b, std::move(analysis.y), analysis.residual};
}

template <typename Scalar>
DenseMatrix<Scalar> eval_poly_matrix_float(std::span<const double> roots, const HermitianMatrix<Scalar>& h) {
  std::vector<double> ordered(roots.begin(), roots.end());
  std::sort(ordered.begin(), ordered.end(), std::greater<>());
  const int n = h.dim();
  DenseMatrix<Scalar> acc = DenseMatrix<Scalar>::Identity(n, n);
  for (double r : ordered) acc = acc * h.shifted(r).dense();
  return acc;
}

#define SPECTRA_INSTANTIATE(Scalar)                                                                   \
  template struct SpectrumReport<Scalar>;                                                             \
  template void normalize_phase<Scalar>(DenseVector<Scalar>&);                                        \
  template SpectrumReport<Scalar> eigh<Scalar>(const HermitianMatrix<Scalar>&, double);               \
  template double min_singular_value<Scalar>(const HermitianMatrix<Scalar>&, double);                 \
  template RankOneAnalysis<Scalar> analyze_rank_one<Scalar>(const HermitianMatrix<Scalar>&, double);  \
  template std::optional<RankOneFactor<Scalar>> rank_one_factor<Scalar>(const HermitianMatrix<Scalar>&, \
                                                                        double);                      \
  template DenseMatrix<Scalar> eval_poly_matrix_float<Scalar>(std::span<const double>,               \
                                                              const HermitianMatrix<Scalar>&);

SPECTRA_INSTANTIATE(double)
SPECTRA_INSTANTIATE(std::complex<double>)

#undef SPECTRA_INSTANTIATE

}  // namespace spectra
