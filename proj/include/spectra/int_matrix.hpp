#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace spectra {

/// Dense square matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(int n);

  int dim() const { return n_; }
  mpz_class& operator()(int i, int j) { return entries_[index(i, j)]; }
  const mpz_class& operator()(int i, int j) const { return entries_[index(i, j)]; }

  bool is_zero() const;
  bool is_symmetric() const;
  bool is_diagonal() const;
  // Largest absolute entry.
  mpz_class max_abs() const;

  IntMatrix& operator+=(const IntMatrix& rhs);
  IntMatrix& operator-=(const IntMatrix& rhs);
  IntMatrix& operator*=(const mpz_class& scalar);
  // Adds `scalar` to every diagonal entry.
  IntMatrix& add_identity(const mpz_class& scalar);

  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

  int n_ = 0;
  std::vector<mpz_class> entries_;
};

/// An IntMatrix known to be symmetric. Construction checks the invariant.
class IntSymMatrix {
 public:
  IntSymMatrix() = default;
  explicit IntSymMatrix(IntMatrix m);

  int dim() const { return m_.dim(); }
  const mpz_class& operator()(int i, int j) const { return m_(i, j); }
  const IntMatrix& matrix() const { return m_; }
  operator const IntMatrix&() const { return m_; }

  friend bool operator==(const IntSymMatrix&, const IntSymMatrix&) = default;

 private:
  IntMatrix m_;
};

}  // namespace spectra
