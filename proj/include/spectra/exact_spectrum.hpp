#pragma once

#include <vector>

#include "spectra/int_matrix.hpp"
#include "spectra/int_polynomial.hpp"

namespace spectra {

// det(xI - M) for any square integer matrix, computed division-free
// (Berkowitz). Monic of degree dim(M).
IntPolynomial charpoly(const IntMatrix& m);

struct PencilCharpoly {
  IntPolynomial poly;  // det(xD - L)
  mpz_class scale;     // det(D), the leading coefficient of poly
};

// det(xD - L) for a positive diagonal D. Its roots are the eigenvalues of
// D^-1 L, which is similar to D^-1/2 L D^-1/2.
PencilCharpoly pencil_charpoly(const IntSymMatrix& degree, const IntSymMatrix& laplacian);

/// Root multiplicity structure of a polynomial over C.
struct SpectrumClassification {
  int total_degree = 0;
  int distinct_count = 0;                // degree of the squarefree part
  std::vector<int> multiplicity_profile;  // one entry per distinct root, descending
  bool is_distinct = false;               // every root is simple
};

// Multiplicities from the degrees of the iterated gcd chain
// g0 = p, g_{i+1} = gcd(g_i, g_i'): deg g_{i-1} - deg g_i counts the roots
// of multiplicity at least i.
SpectrumClassification classify_roots(const IntPolynomial& p);

// classify_roots(charpoly(M)). Multiplicities equal eigenvalue
// multiplicities because symmetric M is diagonalizable.
SpectrumClassification classify_spectrum_exact(const IntSymMatrix& m);

// Squarefree part of charpoly(M), monic. For diagonalizable M this is the
// minimal polynomial, the product of (x - lambda) over distinct eigenvalues.
IntPolynomial minimal_polynomial(const IntSymMatrix& m);

// p(M) by Horner's rule in exact integers.
IntMatrix eval_poly_matrix_exact(const IntPolynomial& p, const IntMatrix& m);

}  // namespace spectra
