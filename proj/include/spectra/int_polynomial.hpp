#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace spectra {

/// Polynomial with arbitrary-precision integer coefficients.
///
/// coeffs()[d] is the coefficient of x^d. The representation is kept
/// normalized: no trailing zero coefficient, and the zero polynomial is
/// the empty sequence (degree -1).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);
  // Coefficients listed from x^0 upward: {-2, -3, 0, 1} is x^3 - 3x - 2.
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial monomial(int degree, const mpz_class& coeff = 1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  mpz_class coeff(int d) const;
  const mpz_class& leading() const;

  mpz_class evaluate(const mpz_class& x) const;
  double evaluate(double x) const;

  // gcd of the coefficients, nonnegative; 0 for the zero polynomial.
  mpz_class content() const;
  // Divides out the content and makes the leading coefficient positive.
  IntPolynomial primitive_part() const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const mpz_class& scalar);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const mpz_class& s) { return a *= s; }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  // Human-readable form such as "x^3 - 3x - 2".
  std::string to_string(char var = 'x') const;

 private:
  void normalize();
  std::vector<mpz_class> coeffs_;
};

IntPolynomial poly_derivative(const IntPolynomial& p);

// lc(b)^(deg a - deg b + 1) * a mod b. Requires b nonzero.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

// a / b when the division is exact over the integers; throws otherwise.
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b);

// Primitive gcd over Z[x] with positive leading coefficient, via the
// primitive pseudo-remainder sequence. gcd(p, 0) = primitive_part(p).
// Throws PreconditionError when both inputs are zero.
IntPolynomial poly_gcd(const IntPolynomial& p, const IntPolynomial& q);

}  // namespace spectra
