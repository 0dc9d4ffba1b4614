#include "spectra/counterexample.hpp"

#include "spectra/exact_spectrum.hpp"

namespace spectra {

bool ConverseCounterexample::reproduces() const {
  return f_of_b_matches() && charpoly_b == IntPolynomial{-5, -5, 1, 1} && sgn(charpoly_b_at_zero) != 0 &&
         sgn(charpoly_f_of_b_at_six) == 0;
}

ConverseCounterexample counterexample_demo() {
  ConverseCounterexample out;
  out.b = IntMatrix{{1, 1, 2}, {0, -1, 0}, {2, 0, -1}};
  out.f = IntPolynomial{6, 0, 1, 1};
  out.f_of_b = eval_poly_matrix_exact(out.f, out.b);
  out.expected_f_of_b = IntMatrix{{16, 5, 10}, {0, 6, 0}, {10, 0, 6}};
  out.charpoly_b = charpoly(out.b);
  out.charpoly_f_of_b = charpoly(out.f_of_b);
  out.charpoly_b_at_zero = out.charpoly_b.evaluate(mpz_class(0));
  out.charpoly_f_of_b_at_six = out.charpoly_f_of_b.evaluate(mpz_class(6));
  return out;
}

}  // namespace spectra
