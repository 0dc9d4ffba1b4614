#include "spectra/hermitian_matrix.hpp"

#include <cmath>

#include "spectra/error.hpp"

namespace spectra {
namespace {

double imag_part(double) { return 0.0; }
double imag_part(std::complex<double> z) { return z.imag(); }
double conj_of(double x) { return x; }
std::complex<double> conj_of(std::complex<double> z) { return std::conj(z); }

bool finite(double x) { return std::isfinite(x); }
bool finite(std::complex<double> z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

template <typename Scalar>
HermitianMatrix<Scalar> HermitianMatrix<Scalar>::from_dense(Dense m) {
  if (m.rows() != m.cols()) throw PreconditionError("Hermitian matrix must be square");
  const Eigen::Index n = m.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (finite(m(i, i)) && imag_part(m(i, i)) != 0.0) {
      throw PreconditionError("Hermitian matrix must have a real diagonal");
    }
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (!finite(m(i, j)) || !finite(m(j, i))) continue;
      if (m(j, i) != conj_of(m(i, j))) {
        throw PreconditionError(kIsComplex<Scalar> ? "matrix is not Hermitian" : "matrix is not symmetric");
      }
    }
  }
  return HermitianMatrix(std::move(m));
}

template <typename Scalar>
HermitianMatrix<Scalar> HermitianMatrix<Scalar>::symmetrized(const Dense& m) {
  if (m.rows() != m.cols()) throw PreconditionError("Hermitian matrix must be square");
  Dense h = (m + m.adjoint()) * 0.5;
  for (Eigen::Index i = 0; i < h.rows(); ++i) h(i, i) = Scalar(std::real(h(i, i)));
  // Force exact conjugate symmetry after rounding.
  for (Eigen::Index i = 0; i < h.rows(); ++i)
    for (Eigen::Index j = i + 1; j < h.cols(); ++j) h(j, i) = conj_of(h(i, j));
  return HermitianMatrix(std::move(h));
}

template <typename Scalar>
HermitianMatrix<Scalar> HermitianMatrix<Scalar>::shifted(double shift) const {
  Dense h = m_;
  h.diagonal().array() -= Scalar(shift);
  return HermitianMatrix(std::move(h));
}

template class HermitianMatrix<double>;
template class HermitianMatrix<std::complex<double>>;

SymMatrix to_float(const IntSymMatrix& m) {
  const int n = m.dim();
  Eigen::MatrixXd d(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d(i, j) = m(i, j).get_d();
  return SymMatrix::from_dense(std::move(d));
}

}  // namespace spectra
