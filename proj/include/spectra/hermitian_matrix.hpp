#pragma once

#include <Eigen/Dense>

#include <complex>
#include <type_traits>

#include "spectra/int_matrix.hpp"

namespace spectra {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
inline constexpr bool kIsComplex = !std::is_same_v<Scalar, double>;

/// Dense Hermitian matrix (real symmetric when Scalar is double).
///
/// The invariant entries(j,i) == conj(entries(i,j)) holds exactly; use
/// from_dense() to reject inputs that violate it, or symmetrized() to
/// project onto the Hermitian part.
template <typename Scalar>
class HermitianMatrix {
 public:
  using Dense = DenseMatrix<Scalar>;

  HermitianMatrix() = default;

  // Throws PreconditionError unless m is square and exactly Hermitian.
  // Non-finite entries are accepted here and rejected by eigh().
  static HermitianMatrix from_dense(Dense m);
  // (m + m*) / 2.
  static HermitianMatrix symmetrized(const Dense& m);
  static HermitianMatrix identity(int n) { return HermitianMatrix(Dense::Identity(n, n)); }

  int dim() const { return static_cast<int>(m_.rows()); }
  const Dense& dense() const { return m_; }
  Scalar operator()(int i, int j) const { return m_(i, j); }
  double max_abs() const { return m_.size() == 0 ? 0.0 : m_.cwiseAbs().maxCoeff(); }

  // H - shift * I, still Hermitian because the shift is real.
  HermitianMatrix shifted(double shift) const;

 private:
  explicit HermitianMatrix(Dense m) : m_(std::move(m)) {}
  Dense m_;
};

using SymMatrix = HermitianMatrix<double>;
using HermMatrix = HermitianMatrix<std::complex<double>>;

SymMatrix to_float(const IntSymMatrix& m);

}  // namespace spectra
