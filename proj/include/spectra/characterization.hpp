#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spectra/eigen_decomposition.hpp"
#include "spectra/graph.hpp"
#include "spectra/hermitian_matrix.hpp"

namespace spectra {

inline constexpr double kDefaultTol = 1e-7;

struct CheckOptions {
  double tol = kDefaultTol;
  double gap_tol = kDefaultGapTol;
  // Strict mode also requires every eigenvalue to be simple (k == n).
  bool strict = false;
};

// Which rank-one identity a result certifies.
enum class Identity {
  hermitian,       // Hermitian H, simple spectral radius
  real_symmetric,  // real symmetric H, simple spectral radius, b > 0
  adjacency,       // A of a connected graph, alpha the Perron direction
  signless,        // Q = D + A of a connected graph
  psd,             // Hermitian PSD H, simple least eigenvalue
  real_psd,        // real symmetric PSD H, simple least eigenvalue
  laplacian,       // L = D - A, alpha = all-ones
  normalized,      // D^-1/2 L D^-1/2, alpha = (sqrt d_i)
};

std::string_view to_string(Identity id);

/// Outcome of checking one rank-one characterization on one matrix.
///
/// For the spectral-radius family the identity is
///   prod_{i>=2} (H - lambda_i I) = b y y*,  H y = lambda_1 y,
/// with b = prod_{i>=2} (lambda_1 - lambda_i) for unit y. For the
/// least-eigenvalue family it is
///   prod_{i<k} (H - mu_i I) = c alpha alpha*,  H alpha = mu_k alpha,
/// with c = prod_{i<k} (mu_k - mu_i) / ||alpha||^2.
struct CharacterizationResult {
  Identity identity = Identity::hermitian;
  int n = 0;
  int k = 0;
  std::optional<int> k_float;  // float clustering count before exact arbitration
  std::optional<int> k_exact;  // squarefree-test count (integer-backed inputs)

  std::vector<double> distinct_eigenvalues;  // descending, as used in the product
  double extreme_eigenvalue = 0.0;            // lambda_1, or mu_k for the least family

  std::vector<double> condition_i_residuals;  // min singular value of H - lambda I, per non-extreme lambda
  double condition_i_threshold = 0.0;

  double condition_ii_residual = 0.0;  // ||product - closed form||_max
  double condition_ii_threshold = 0.0;
  double product_scale = 1.0;          // max(1, ||product||_max)
  double eigen_residual = 0.0;         // ||H v - extreme v||_max for the certifying unit vector
  bool rank_one = false;

  double coefficient_b = 0.0;  // recovered from the product (b, or c for the least family)
  double expected_b = 0.0;     // closed form
  std::vector<double> alpha;       // certifying vector (real part)
  std::vector<double> alpha_imag;  // empty for real input

  bool condition_i_ok = false;
  bool condition_ii_ok = false;
  bool strict = false;
  bool passed = false;
  std::string failure;  // names the failing condition; empty when passed

  double max_condition_i_residual() const;
  bool pipelines_agree() const { return !k_float || !k_exact || *k_float == *k_exact; }
};

// Verifies both conditions for a candidate list: spectral radius lambda1
// and the remaining distinct values `others`. When `direction` is given the
// closed form uses it (normalized) instead of the product's own factor.
// Candidates must be pairwise distinct and `others` nonempty.
template <typename Scalar>
CharacterizationResult verify_spectral_radius_identity(const HermitianMatrix<Scalar>& h, double lambda1,
                                                       std::span<const double> others, double tol,
                                                       const std::optional<DenseVector<Scalar>>& direction = {});

// Verifies both conditions for a candidate least eigenvalue `least` with
// eigenvector `alpha` (any scaling) and the larger distinct values `others`.
template <typename Scalar>
CharacterizationResult verify_least_eigenvalue_identity(const HermitianMatrix<Scalar>& h,
                                                        std::span<const double> others, double least,
                                                        const DenseVector<Scalar>& alpha, double tol);

// Hermitian (or real symmetric) matrix with simple spectral radius. Throws
// PreconditionError when n < 2 or lambda_1 - lambda_2 <= tol.
template <typename Scalar>
CharacterizationResult check_hermitian_distinct(const HermitianMatrix<Scalar>& h, const CheckOptions& options = {});

// PSD matrix with simple least eigenvalue. Throws PreconditionError when the
// matrix is not PSD within tolerance or the least eigenvalue is repeated.
template <typename Scalar>
CharacterizationResult check_psd_least_distinct(const HermitianMatrix<Scalar>& h, const CheckOptions& options = {});

// Graph checkers. All require a connected graph with n >= 2 and throw
// PreconditionError otherwise. The distinct count is arbitrated by the
// exact squarefree test.
CharacterizationResult check_adjacency_distinct(const Graph& g, const CheckOptions& options = {});
CharacterizationResult check_signless_laplacian_distinct(const Graph& g, const CheckOptions& options = {});
CharacterizationResult check_laplacian_distinct(const Graph& g, const CheckOptions& options = {});
CharacterizationResult check_normalized_laplacian_distinct(const Graph& g, const CheckOptions& options = {});

struct DiameterBound {
  int diameter = 0;
  int k = 0;  // distinct adjacency eigenvalues, exact
  bool holds = false;
};

// diam(G) <= k - 1, with k the number of distinct adjacency eigenvalues.
// A false result means a bug.
DiameterBound check_diameter_bound(const Graph& g);

// Builds f(H) = prod over the non-top distinct eigenvalues of (H - lambda I),
// takes the eigenvector of its top eigenvalue f(lambda_1) and tests that it
// is an eigenvector of H for lambda_1. Throws PreconditionError when
// lambda_1 is not simple.
bool check_eigenvector_converse(const SymMatrix& h, double tol = kDefaultTol);

}  // namespace spectra
