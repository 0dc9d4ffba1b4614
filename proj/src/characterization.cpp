#include "spectra/characterization.hpp"

#include <algorithm>
#include <cmath>

#include "spectra/error.hpp"
#include "spectra/exact_spectrum.hpp"
#include "spectra/graph_matrices.hpp"
#include "spectra/perron.hpp"

namespace spectra {
namespace {

template <typename Scalar>
void set_alpha(CharacterizationResult& r, const DenseVector<Scalar>& v) {
  r.alpha.resize(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r.alpha[i] = std::real(v(i));
  r.alpha_imag.clear();
  if constexpr (kIsComplex<Scalar>) {
    r.alpha_imag.resize(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) r.alpha_imag[i] = std::imag(v(i));
  }
}

void require_distinct(double extreme, std::span<const double> others) {
  if (others.empty()) throw PreconditionError("identity needs at least two distinct eigenvalues (k >= 2)");
  std::vector<double> all(others.begin(), others.end());
  all.push_back(extreme);
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw PreconditionError("candidate eigenvalues must be pairwise distinct");
  }
}

// Condition (i) and the common scaffolding of condition (ii).
template <typename Scalar>
HermitianMatrix<Scalar> begin_result(CharacterizationResult& r, const HermitianMatrix<Scalar>& h, double extreme,
                                     std::span<const double> others, double tol) {
  require_distinct(extreme, others);
  r.identity = kIsComplex<Scalar> ? Identity::hermitian : Identity::real_symmetric;
  r.n = h.dim();
  r.k = static_cast<int>(others.size()) + 1;
  r.extreme_eigenvalue = extreme;
  r.condition_i_threshold = tol * r.n * std::max(1.0, h.max_abs());
  r.condition_i_residuals.clear();
  for (double lambda : others) r.condition_i_residuals.push_back(min_singular_value(h, lambda));
  r.condition_i_ok = std::all_of(r.condition_i_residuals.begin(), r.condition_i_residuals.end(),
                                 [&](double s) { return s <= r.condition_i_threshold; });

  auto product = HermitianMatrix<Scalar>::symmetrized(eval_poly_matrix_float(others, h));
  r.product_scale = std::max(1.0, product.max_abs());
  r.condition_ii_threshold = tol * r.n * r.product_scale;
  return product;
}

void finish(CharacterizationResult& r, const char* detail) {
  if (detail != nullptr) r.failure = std::string("condition (ii): ") + detail;
  r.condition_ii_ok = detail == nullptr;
  if (!r.condition_i_ok) r.failure = "condition (i): H - lambda I is not singular for some lambda";
  r.passed = r.condition_i_ok && r.condition_ii_ok;
}

void apply_strict(CharacterizationResult& r, bool strict) {
  r.strict = strict;
  if (strict && r.passed && r.k != r.n) {
    r.passed = false;
    r.failure = "strict: k=" + std::to_string(r.k) + " < n=" + std::to_string(r.n) + " (repeated eigenvalues)";
  }
}

}  // namespace

std::string_view to_string(Identity id) {
  switch (id) {
    case Identity::hermitian: return "hermitian";
    case Identity::real_symmetric: return "real_symmetric";
    case Identity::adjacency: return "adjacency";
    case Identity::signless: return "signless";
    case Identity::psd: return "psd";
    case Identity::real_psd: return "real_psd";
    case Identity::laplacian: return "laplacian";
    case Identity::normalized: return "normalized";
  }
  return "unknown";
}

double CharacterizationResult::max_condition_i_residual() const {
  double best = 0.0;
  for (double s : condition_i_residuals) best = std::max(best, s);
  return best;
}

template <typename Scalar>
CharacterizationResult verify_spectral_radius_identity(const HermitianMatrix<Scalar>& h, double lambda1,
                                                       std::span<const double> others, double tol,
                                                       const std::optional<DenseVector<Scalar>>& direction) {
  CharacterizationResult r;
  const auto product = begin_result(r, h, lambda1, others, tol);
  r.distinct_eigenvalues.assign(1, lambda1);
  r.distinct_eigenvalues.insert(r.distinct_eigenvalues.end(), others.begin(), others.end());
  std::sort(r.distinct_eigenvalues.begin(), r.distinct_eigenvalues.end(), std::greater<>());

  r.expected_b = 1.0;
  for (double lambda : others) r.expected_b *= lambda1 - lambda;

  const auto analysis = analyze_rank_one(product, tol);
  r.rank_one = analysis.significant_count == 1;
  r.coefficient_b = analysis.b;
  r.eigen_residual = (h.dense() * analysis.y - Scalar(lambda1) * analysis.y).cwiseAbs().maxCoeff();
  set_alpha<Scalar>(r, std::sqrt(std::abs(analysis.b)) * analysis.y);

  const char* detail = nullptr;
  if constexpr (kIsComplex<Scalar>) {
    // Complex input: b is only known to be nonzero, so the comparison is
    // against the product's own factor.
    r.condition_ii_residual = analysis.residual;
  } else {
    DenseVector<Scalar> u = direction ? DenseVector<Scalar>(direction->normalized()) : analysis.y;
    r.condition_ii_residual = (product.dense() - Scalar(r.expected_b) * u * u.adjoint()).cwiseAbs().maxCoeff();
    if (std::abs(analysis.b - r.expected_b) > r.condition_ii_threshold) detail = "recovered b differs from prod(lambda_1 - lambda_i)";
    if (!(analysis.b > 0.0)) detail = "coefficient b is not positive";
  }
  if (r.condition_ii_residual > r.condition_ii_threshold) detail = "product differs from the rank-one closed form";
  if (r.eigen_residual > r.condition_i_threshold) detail = "factor y is not an eigenvector for lambda_1";
  if (!r.rank_one) detail = "product does not have rank one";
  finish(r, detail);
  return r;
}

template <typename Scalar>
CharacterizationResult verify_least_eigenvalue_identity(const HermitianMatrix<Scalar>& h,
                                                        std::span<const double> others, double least,
                                                        const DenseVector<Scalar>& alpha, double tol) {
  if (alpha.size() != h.dim() || alpha.norm() == 0.0) throw PreconditionError("alpha must be a nonzero n-vector");
  CharacterizationResult r;
  const auto product = begin_result(r, h, least, others, tol);
  r.identity = kIsComplex<Scalar> ? Identity::psd : Identity::real_psd;
  r.distinct_eigenvalues.assign(others.begin(), others.end());
  r.distinct_eigenvalues.push_back(least);
  std::sort(r.distinct_eigenvalues.begin(), r.distinct_eigenvalues.end(), std::greater<>());

  const double norm2 = alpha.squaredNorm();
  double numerator = 1.0;
  for (double mu : others) numerator *= least - mu;
  r.expected_b = numerator / norm2;

  const auto analysis = analyze_rank_one(product, tol);
  r.rank_one = analysis.significant_count == 1;
  r.coefficient_b = analysis.b / norm2;
  const DenseVector<Scalar> unit = alpha / std::sqrt(norm2);
  r.eigen_residual = (h.dense() * unit - Scalar(least) * unit).cwiseAbs().maxCoeff();
  r.condition_ii_residual =
      (product.dense() - Scalar(r.expected_b) * alpha * alpha.adjoint()).cwiseAbs().maxCoeff();
  set_alpha<Scalar>(r, alpha);

  const double sign = (r.k - 1) % 2 == 0 ? 1.0 : -1.0;
  const char* detail = nullptr;
  if (std::abs(analysis.b - numerator) > r.condition_ii_threshold) detail = "recovered coefficient differs from the closed form";
  if (!(analysis.b * sign > 0.0)) detail = "coefficient sign is not (-1)^(k-1)";
  if (r.condition_ii_residual > r.condition_ii_threshold) detail = "product differs from the rank-one closed form";
  if (r.eigen_residual > r.condition_i_threshold) detail = "alpha is not an eigenvector for the least eigenvalue";
  if (!r.rank_one) detail = "product does not have rank one";
  finish(r, detail);
  return r;
}

template <typename Scalar>
CharacterizationResult check_hermitian_distinct(const HermitianMatrix<Scalar>& h, const CheckOptions& options) {
  if (h.dim() < 2) throw PreconditionError("need n >= 2");
  const auto report = eigh(h, options.gap_tol);
  const auto& values = report.eigenvalues;
  if (report.clusters.front().size() > 1 || values(0) - values(1) <= options.tol) {
    throw PreconditionError("spectral radius is not simple");
  }
  const auto distinct = report.distinct_values();
  auto r = verify_spectral_radius_identity(h, distinct.front(), std::span(distinct).subspan(1), options.tol);
  r.k_float = report.distinct_count;
  apply_strict(r, options.strict);
  return r;
}

template <typename Scalar>
CharacterizationResult check_psd_least_distinct(const HermitianMatrix<Scalar>& h, const CheckOptions& options) {
  const int n = h.dim();
  if (n < 2) throw PreconditionError("need n >= 2");
  const auto report = eigh(h, options.gap_tol);
  const auto& values = report.eigenvalues;
  if (values(n - 1) < -options.tol * n * std::max(1.0, h.max_abs())) {
    throw PreconditionError("matrix is not positive semidefinite");
  }
  if (report.clusters.back().size() > 1 || values(n - 2) - values(n - 1) <= options.tol) {
    throw PreconditionError("least eigenvalue is not simple");
  }
  const auto distinct = report.distinct_values();
  const DenseVector<Scalar> alpha = report.eigenvectors.col(n - 1);
  auto r = verify_least_eigenvalue_identity(h, std::span(distinct).first(distinct.size() - 1), distinct.back(),
                                            alpha, options.tol);
  r.k_float = report.distinct_count;
  apply_strict(r, options.strict);
  return r;
}

namespace {

void require_connected(const Graph& g) {
  if (g.order() < 2) throw PreconditionError("need a connected graph of order n >= 2");
  if (!is_connected(g)) throw PreconditionError("graph is disconnected");
}

// Float distinct eigenvalues, re-partitioned to the exact count when the
// clustering disagrees.
std::vector<double> arbitrated_distinct(const SpectrumReport<double>& report, int k_exact) {
  std::span<const double> values(report.eigenvalues.data(), report.eigenvalues.size());
  if (report.distinct_count == k_exact) return cluster_means(values, report.clusters);
  const auto clusters = partition_into(values, k_exact);
  return cluster_means(values, clusters);
}

CharacterizationResult check_graph_top(const Graph& g, MatrixKind kind, const CheckOptions& options) {
  require_connected(g);
  const IntSymMatrix exact = build_matrix(g, kind);
  const int k_exact = classify_spectrum_exact(exact).distinct_count;
  const SymMatrix h = to_float(exact);
  const auto report = eigh(h, options.gap_tol);
  const auto distinct = arbitrated_distinct(report, k_exact);
  if (k_exact < 2) throw NumericalError("connected graph with n >= 2 reported a single eigenvalue");

  // Perron-Frobenius: the top eigenvalue of a connected graph's A or Q is simple.
  const double top_gap = report.eigenvalues(0) - report.eigenvalues(1);
  if (top_gap <= options.tol) throw NumericalError("spectral radius of a connected graph is not simple (internal error)");

  const auto perron = perron_vector(h);
  auto r = verify_spectral_radius_identity(h, distinct.front(), std::span(distinct).subspan(1), options.tol,
                                           std::optional<Eigen::VectorXd>(perron.vector));
  r.identity = kind == MatrixKind::adjacency ? Identity::adjacency : Identity::signless;
  r.k_float = report.distinct_count;
  r.k_exact = k_exact;
  if (r.condition_ii_ok && std::any_of(r.alpha.begin(), r.alpha.end(), [](double a) { return a <= 0.0; })) {
    r.condition_ii_ok = r.passed = false;
    r.failure = "condition (ii): alpha is not entrywise positive";
  }
  apply_strict(r, options.strict);
  return r;
}

CharacterizationResult check_graph_least(const Graph& g, MatrixKind kind, const CheckOptions& options) {
  require_connected(g);
  const int n = g.order();
  const IntSymMatrix laplacian = build_matrix(g, MatrixKind::laplacian);
  int k_exact = 0;
  SymMatrix h;
  Eigen::VectorXd alpha(n);
  if (kind == MatrixKind::laplacian) {
    k_exact = classify_spectrum_exact(laplacian).distinct_count;
    h = to_float(laplacian);
    alpha.setOnes();
  } else {
    k_exact = classify_roots(pencil_charpoly(build_matrix(g, MatrixKind::degree), laplacian).poly).distinct_count;
    h = normalized_laplacian_float(g);
    for (int i = 0; i < n; ++i) alpha(i) = std::sqrt(static_cast<double>(g.degree(i)));
  }
  const auto report = eigh(h, options.gap_tol);
  auto distinct = arbitrated_distinct(report, k_exact);
  if (k_exact < 2) throw NumericalError("connected graph with n >= 2 reported a single eigenvalue");

  // 0 is the simple least eigenvalue of a connected graph; substitute it exactly.
  distinct.pop_back();
  auto r = verify_least_eigenvalue_identity(h, std::span<const double>(distinct), 0.0, alpha, options.tol);
  r.identity = kind == MatrixKind::laplacian ? Identity::laplacian : Identity::normalized;
  r.k_float = report.distinct_count;
  r.k_exact = k_exact;
  apply_strict(r, options.strict);
  return r;
}

}  // namespace

CharacterizationResult check_adjacency_distinct(const Graph& g, const CheckOptions& options) {
  return check_graph_top(g, MatrixKind::adjacency, options);
}

CharacterizationResult check_signless_laplacian_distinct(const Graph& g, const CheckOptions& options) {
  return check_graph_top(g, MatrixKind::signless, options);
}

CharacterizationResult check_laplacian_distinct(const Graph& g, const CheckOptions& options) {
  return check_graph_least(g, MatrixKind::laplacian, options);
}

CharacterizationResult check_normalized_laplacian_distinct(const Graph& g, const CheckOptions& options) {
  return check_graph_least(g, MatrixKind::normalized, options);
}

DiameterBound check_diameter_bound(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("graph is disconnected");
  DiameterBound out;
  out.diameter = diameter(g);
  out.k = classify_spectrum_exact(build_matrix(g, MatrixKind::adjacency)).distinct_count;
  out.holds = out.diameter <= out.k - 1;
  return out;
}

bool check_eigenvector_converse(const SymMatrix& h, double tol) {
  const int n = h.dim();
  if (n < 2) throw PreconditionError("need n >= 2");
  const auto report = eigh(h);
  if (report.clusters.front().size() > 1 || report.eigenvalues(0) - report.eigenvalues(1) <= tol) {
    throw PreconditionError("spectral radius is not simple");
  }
  const auto distinct = report.distinct_values();
  const double lambda1 = distinct.front();
  const auto f_of_h = SymMatrix::symmetrized(eval_poly_matrix_float(std::span(distinct).subspan(1), h));
  // f(lambda_1) = prod (lambda_1 - lambda_i) > 0 is the top eigenvalue of f(H).
  const Eigen::VectorXd alpha = eigh(f_of_h).eigenvectors.col(0);
  const double residual = (h.dense() * alpha - lambda1 * alpha).cwiseAbs().maxCoeff();
  return residual <= tol * n * std::max(1.0, h.max_abs());
}

#define SPECTRA_INSTANTIATE(Scalar)                                                                      \
  template CharacterizationResult verify_spectral_radius_identity<Scalar>(                               \
      const HermitianMatrix<Scalar>&, double, std::span<const double>, double,                            \
      const std::optional<DenseVector<Scalar>>&);                                                         \
  template CharacterizationResult verify_least_eigenvalue_identity<Scalar>(                              \
      const HermitianMatrix<Scalar>&, std::span<const double>, double, const DenseVector<Scalar>&, double); \
  template CharacterizationResult check_hermitian_distinct<Scalar>(const HermitianMatrix<Scalar>&,       \
                                                                   const CheckOptions&);                 \
  template CharacterizationResult check_psd_least_distinct<Scalar>(const HermitianMatrix<Scalar>&,       \
                                                                   const CheckOptions&);

SPECTRA_INSTANTIATE(double)
SPECTRA_INSTANTIATE(std::complex<double>)

#undef SPECTRA_INSTANTIATE

}  // namespace spectra
