#include "spectra/exact_spectrum.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>

#include "spectra/error.hpp"

namespace spectra {
namespace {

// Berkowitz's algorithm. Column r of the matrix is folded in by multiplying
// the running coefficient vector with the lower-triangular Toeplitz matrix
// whose first column is (1, -a_rr, -R C, -R S C, ..., -R S^(r-1) C), where S
// is the leading r x r block, R row r and C column r restricted to it.
//
// Coefficients come out highest degree first. Ring is either mpz_class or
// CheckedInt.
template <typename Ring, typename Entry>
std::vector<Ring> berkowitz(int n, Entry entry) {
  std::vector<Ring> v{Ring(1)};
  std::vector<Ring> w, sw, t;
  for (int r = 0; r < n; ++r) {
    t.assign(r + 2, Ring(0));
    t[0] = Ring(1);
    t[1] = -entry(r, r);
    w.resize(r);
    for (int i = 0; i < r; ++i) w[i] = entry(i, r);
    for (int s = 0; s < r; ++s) {
      Ring dot(0);
      for (int i = 0; i < r; ++i) dot += entry(r, i) * w[i];
      t[s + 2] = -dot;
      if (s + 1 == r) break;
      sw.assign(r, Ring(0));
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) sw[i] += entry(i, j) * w[j];
      w.swap(sw);
    }
    std::vector<Ring> next(r + 2, Ring(0));
    for (int i = 0; i < r + 2; ++i)
      for (int j = 0; j <= std::min(i, r); ++j) next[i] += t[i - j] * v[j];
    v.swap(next);
  }
  return v;
}

struct Overflow {};

// int64 that throws Overflow instead of wrapping.
struct CheckedInt {
  std::int64_t v = 0;
  CheckedInt() = default;
  explicit CheckedInt(std::int64_t x) : v(x) {}

  friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
    CheckedInt r;
    if (__builtin_mul_overflow(a.v, b.v, &r.v)) throw Overflow{};
    return r;
  }
  CheckedInt& operator+=(CheckedInt b) {
    if (__builtin_add_overflow(v, b.v, &v)) throw Overflow{};
    return *this;
  }
  CheckedInt operator-() const {
    if (v == INT64_MIN) throw Overflow{};
    return CheckedInt(-v);
  }
};

std::optional<std::vector<CheckedInt>> berkowitz_int64(const IntMatrix& m) {
  const int n = m.dim();
  std::vector<CheckedInt> small(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!m(i, j).fits_slong_p()) return std::nullopt;
      small[static_cast<std::size_t>(i) * n + j] = CheckedInt(m(i, j).get_si());
    }
  }
  try {
    return berkowitz<CheckedInt>(n, [&](int i, int j) { return small[static_cast<std::size_t>(i) * n + j]; });
  } catch (const Overflow&) {
    return std::nullopt;
  }
}

mpz_class to_mpz(std::int64_t x) {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(x));
  return z;
}

}  // namespace

IntPolynomial charpoly(const IntMatrix& m) {
  const int n = m.dim();
  std::vector<mpz_class> coeffs(n + 1);
  if (auto fast = berkowitz_int64(m)) {
    for (int i = 0; i <= n; ++i) coeffs[n - i] = to_mpz((*fast)[i].v);
  } else {
    auto high_first = berkowitz<mpz_class>(n, [&](int i, int j) -> const mpz_class& { return m(i, j); });
    for (int i = 0; i <= n; ++i) coeffs[n - i] = std::move(high_first[i]);
  }
  return IntPolynomial(std::move(coeffs));
}

PencilCharpoly pencil_charpoly(const IntSymMatrix& degree, const IntSymMatrix& laplacian) {
  const int n = degree.dim();
  if (laplacian.dim() != n) throw PreconditionError("pencil_charpoly: dimension mismatch");
  if (!degree.matrix().is_diagonal()) throw PreconditionError("pencil_charpoly: D must be diagonal");
  mpz_class det_d = 1, lcm_d = 1;
  for (int i = 0; i < n; ++i) {
    if (sgn(degree(i, i)) <= 0) throw PreconditionError("pencil_charpoly: D must have positive diagonal");
    det_d *= degree(i, i);
    lcm_d = lcm(lcm_d, degree(i, i));
  }
  // N = lcm * D^-1 L is integral and det(yI - N) = lcm^n det(xI - D^-1 L)
  // at y = lcm * x, so det(xD - L) = det(D) * q(lcm x) / lcm^n.
  IntMatrix scaled(n);
  for (int i = 0; i < n; ++i) {
    mpz_class row_factor = lcm_d / degree(i, i);
    for (int j = 0; j < n; ++j) scaled(i, j) = row_factor * laplacian(i, j);
  }
  const IntPolynomial q = charpoly(scaled);
  std::vector<mpz_class> coeffs(n + 1);
  mpz_class divisor = 1;  // lcm^(n-j), built from j = n downward
  for (int j = n; j >= 0; --j) {
    mpz_class numer = det_d * q.coeff(j);
    if (!mpz_divisible_p(numer.get_mpz_t(), divisor.get_mpz_t())) {
      throw NumericalError("pencil_charpoly: non-integral coefficient (internal error)");
    }
    mpz_divexact(coeffs[j].get_mpz_t(), numer.get_mpz_t(), divisor.get_mpz_t());
    divisor *= lcm_d;
  }
  return {IntPolynomial(std::move(coeffs)), det_d};
}

SpectrumClassification classify_roots(const IntPolynomial& p) {
  if (p.degree() < 0) throw PreconditionError("classify_roots: zero polynomial");
  SpectrumClassification out;
  out.total_degree = p.degree();

  // at_least[i] = number of distinct roots with multiplicity >= i + 1.
  std::vector<int> at_least;
  IntPolynomial g = p;
  while (g.degree() > 0) {
    IntPolynomial next = poly_gcd(g, poly_derivative(g));
    at_least.push_back(g.degree() - next.degree());
    g = std::move(next);
  }
  out.distinct_count = at_least.empty() ? 0 : at_least.front();
  for (std::size_t i = 0; i < at_least.size(); ++i) {
    const int exact = at_least[i] - (i + 1 < at_least.size() ? at_least[i + 1] : 0);
    out.multiplicity_profile.insert(out.multiplicity_profile.end(), exact, static_cast<int>(i + 1));
  }
  std::sort(out.multiplicity_profile.rbegin(), out.multiplicity_profile.rend());
  out.is_distinct = out.distinct_count == out.total_degree;
  return out;
}

SpectrumClassification classify_spectrum_exact(const IntSymMatrix& m) {
  return classify_roots(charpoly(m));
}

IntPolynomial minimal_polynomial(const IntSymMatrix& m) {
  const IntPolynomial p = charpoly(m);
  if (p.degree() == 0) return p;
  IntPolynomial squarefree = divide_exact(p, poly_gcd(p, poly_derivative(p)));
  if (sgn(squarefree.leading()) < 0) squarefree *= -1;
  return squarefree;
}

IntMatrix eval_poly_matrix_exact(const IntPolynomial& p, const IntMatrix& m) {
  const int n = m.dim();
  IntMatrix acc(n);
  for (int d = p.degree(); d >= 0; --d) {
    acc = acc * m;
    acc.add_identity(p.coeffs()[d]);
  }
  return acc;
}

}  // namespace spectra
