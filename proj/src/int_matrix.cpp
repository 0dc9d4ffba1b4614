#include "spectra/int_matrix.hpp"

#include <sstream>

#include "spectra/error.hpp"

namespace spectra {

IntMatrix::IntMatrix(int n) : n_(n) {
  if (n < 0) throw PreconditionError("matrix dimension must be nonnegative");
  entries_.assign(static_cast<std::size_t>(n) * n, 0);
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntMatrix(static_cast<int>(rows.size())) {
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n_) throw PreconditionError("IntMatrix rows must form a square");
    int j = 0;
    for (long v : row) (*this)(i, j++) = v;
    ++i;
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (sgn(e) != 0) return false;
  return true;
}

bool IntMatrix::is_symmetric() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool IntMatrix::is_diagonal() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j && sgn((*this)(i, j)) != 0) return false;
  return true;
}

mpz_class IntMatrix::max_abs() const {
  mpz_class best = 0;
  for (const auto& e : entries_)
    if (abs(e) > best) best = abs(e);
  return best;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& rhs) {
  if (rhs.n_ != n_) throw PreconditionError("IntMatrix dimension mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
  return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& rhs) {
  if (rhs.n_ != n_) throw PreconditionError("IntMatrix dimension mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
  return *this;
}

IntMatrix& IntMatrix::operator*=(const mpz_class& scalar) {
  for (auto& e : entries_) e *= scalar;
  return *this;
}

IntMatrix& IntMatrix::add_identity(const mpz_class& scalar) {
  for (int i = 0; i < n_; ++i) (*this)(i, i) += scalar;
  return *this;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw PreconditionError("IntMatrix dimension mismatch");
  const int n = a.n_;
  IntMatrix c(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const mpz_class& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < n_; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < n_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

IntSymMatrix::IntSymMatrix(IntMatrix m) : m_(std::move(m)) {
  if (!m_.is_symmetric()) throw PreconditionError("IntSymMatrix: matrix is not symmetric");
}

}  // namespace spectra
