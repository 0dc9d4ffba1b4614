#pragma once

#include "spectra/int_matrix.hpp"
#include "spectra/int_polynomial.hpp"

namespace spectra {

// A non-symmetric 3x3 integer matrix B and f(x) = x^3 + x^2 + 6 for which
// f(0) = 6 is an eigenvalue of f(B) although 0 is not an eigenvalue of B:
// an eigenvalue of g(B) need not come from an eigenvalue of B.
struct ConverseCounterexample {
  IntMatrix b;
  IntPolynomial f;
  IntMatrix f_of_b;           // computed exactly
  IntMatrix expected_f_of_b;  // the published matrix
  IntPolynomial charpoly_b;
  IntPolynomial charpoly_f_of_b;
  mpz_class charpoly_b_at_zero;      // nonzero => 0 is not an eigenvalue of B
  mpz_class charpoly_f_of_b_at_six;  // zero   => 6 is an eigenvalue of f(B)

  bool f_of_b_matches() const { return f_of_b == expected_f_of_b; }
  bool reproduces() const;
};

ConverseCounterexample counterexample_demo();

}  // namespace spectra
