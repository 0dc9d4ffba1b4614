#pragma once

#include <optional>
#include <span>
#include <vector>

#include "spectra/hermitian_matrix.hpp"

namespace spectra {

inline constexpr double kDefaultGapTol = 1e-6;

// Half-open index range [begin, end) into a descending eigenvalue list.
struct Cluster {
  int begin = 0;
  int end = 0;
  int size() const { return end - begin; }
  friend bool operator==(const Cluster&, const Cluster&) = default;
};

template <typename Scalar>
struct SpectrumReport {
  Eigen::VectorXd eigenvalues;      // descending
  DenseMatrix<Scalar> eigenvectors;  // orthonormal columns, matching order
  std::vector<Cluster> clusters;
  int distinct_count = 0;
  double reconstruction_residual = 0.0;  // ||H - V diag(lambda) V*||_max
  double orthogonality_residual = 0.0;   // ||V* V - I||_max

  // Mean eigenvalue of each cluster, descending.
  std::vector<double> distinct_values() const;
};

// Greedy partition of descending values: a new cluster starts whenever the
// gap to the previous value exceeds gap_tol. Throws PreconditionError on
// unsorted input or nonpositive gap_tol.
std::vector<Cluster> cluster_eigenvalues(std::span<const double> values, double gap_tol);

// Partition of descending values into exactly `count` clusters, cutting at
// the count-1 largest consecutive gaps. Used to reconcile float clustering
// with an exact distinct-eigenvalue count.
std::vector<Cluster> partition_into(std::span<const double> values, int count);

std::vector<double> cluster_means(std::span<const double> values, std::span<const Cluster> clusters);

// Smallest gap between consecutive cluster means; +inf for fewer than 2.
double min_cluster_gap(std::span<const double> values, std::span<const Cluster> clusters);

/// Full Hermitian eigendecomposition with eigenvalues sorted descending.
///
/// Each eigenvector is scaled so its first component of magnitude above
/// 1e-12 is real and positive. Clusters use gap_tol. Throws
/// PreconditionError on non-finite entries.
template <typename Scalar>
SpectrumReport<Scalar> eigh(const HermitianMatrix<Scalar>& h, double gap_tol = kDefaultGapTol);

// Smallest singular value of H - shift*I, i.e. min |lambda_i - shift|.
template <typename Scalar>
double min_singular_value(const HermitianMatrix<Scalar>& h, double shift = 0.0);

template <typename Scalar>
struct RankOneAnalysis {
  int significant_count = 0;  // eigenvalues with |lambda| > threshold
  double threshold = 0.0;     // tol * ||P||_max * n
  double b = 0.0;             // eigenvalue of largest magnitude
  DenseVector<Scalar> y;      // its unit eigenvector, sign-normalized
  double residual = 0.0;      // ||P - b y y*||_max
};

template <typename Scalar>
struct RankOneFactor {
  double b = 0.0;
  DenseVector<Scalar> y;
  double residual = 0.0;
};

// Dominant eigenpair of P plus a count of eigenvalues above the rank
// threshold; the input for both rank_one_factor and residual reporting.
template <typename Scalar>
RankOneAnalysis<Scalar> analyze_rank_one(const HermitianMatrix<Scalar>& p, double tol);

// P = b y y* with unit y when exactly one eigenvalue exceeds
// tol * ||P||_max * n in magnitude; nullopt otherwise (rank != 1).
template <typename Scalar>
std::optional<RankOneFactor<Scalar>> rank_one_factor(const HermitianMatrix<Scalar>& p, double tol);

// (H - r_1 I)(H - r_2 I)... with the roots applied in descending order.
// Empty roots give the identity.
template <typename Scalar>
DenseMatrix<Scalar> eval_poly_matrix_float(std::span<const double> roots, const HermitianMatrix<Scalar>& h);

// Scale v in place so its first entry with |v_i| > 1e-12 * max|v| is real positive.
template <typename Scalar>
void normalize_phase(DenseVector<Scalar>& v);

}  // namespace spectra
