#include "spectra/int_polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "spectra/error.hpp"

namespace spectra {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::monomial(int degree, const mpz_class& coeff) {
  std::vector<mpz_class> c(degree + 1, 0);
  c[degree] = coeff;
  return IntPolynomial(std::move(c));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

mpz_class IntPolynomial::coeff(int d) const {
  if (d < 0 || d > degree()) return 0;
  return coeffs_[d];
}

const mpz_class& IntPolynomial::leading() const {
  if (is_zero()) throw PreconditionError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

mpz_class IntPolynomial::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double IntPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

mpz_class IntPolynomial::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  mpz_class g = content();
  if (sgn(leading()) < 0) g = -g;
  IntPolynomial out = *this;
  for (auto& c : out.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return out;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const mpz_class& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  normalize();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const mpz_class& c = coeffs_[d];
    if (sgn(c) == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    if (mag != 1 || d == 0) os << mag.get_str();
    if (d >= 1) os << var;
    if (d >= 2) os << '^' << d;
    first = false;
  }
  return os.str();
}

IntPolynomial poly_derivative(const IntPolynomial& p) {
  if (p.degree() < 1) return {};
  std::vector<mpz_class> c(p.degree());
  for (int d = 1; d <= p.degree(); ++d) c[d - 1] = p.coeffs()[d] * d;
  return IntPolynomial(std::move(c));
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw PreconditionError("pseudo_remainder: division by the zero polynomial");
  std::vector<mpz_class> r = a.coeffs();
  const int db = b.degree();
  const mpz_class& lb = b.leading();
  int dr = a.degree();
  int steps = std::max(a.degree() - db + 1, 0);
  while (dr >= db && dr >= 0) {
    const mpz_class lr = r[dr];
    // r <- lb * r - lr * x^(dr-db) * b, which cancels the leading term.
    for (auto& c : r) c *= lb;
    for (int i = 0; i <= db; ++i) r[dr - db + i] -= lr * b.coeffs()[i];
    --steps;
    r.resize(dr);
    while (!r.empty() && sgn(r.back()) == 0) r.pop_back();
    dr = static_cast<int>(r.size()) - 1;
  }
  IntPolynomial rem(std::move(r));
  // Leading-term cancellations that skipped degrees still owe powers of lb.
  for (; steps > 0; --steps) rem *= lb;
  return rem;
}

IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw PreconditionError("divide_exact: division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw Error("divide_exact: divisor has larger degree");
  std::vector<mpz_class> r = a.coeffs();
  std::vector<mpz_class> q(a.degree() - b.degree() + 1, 0);
  const int db = b.degree();
  const mpz_class& lb = b.leading();
  for (int d = a.degree(); d >= db; --d) {
    if (sgn(r[d]) == 0) continue;
    if (!mpz_divisible_p(r[d].get_mpz_t(), lb.get_mpz_t())) throw Error("divide_exact: division is not exact");
    mpz_class t;
    mpz_divexact(t.get_mpz_t(), r[d].get_mpz_t(), lb.get_mpz_t());
    q[d - db] = t;
    for (int i = 0; i <= db; ++i) r[d - db + i] -= t * b.coeffs()[i];
  }
  for (int d = 0; d < db; ++d)
    if (sgn(r[d]) != 0) throw Error("divide_exact: nonzero remainder");
  return IntPolynomial(std::move(q));
}

IntPolynomial poly_gcd(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero() && q.is_zero()) throw PreconditionError("poly_gcd: both inputs are zero");
  IntPolynomial a = p.primitive_part();
  IntPolynomial b = q.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = pseudo_remainder(a, b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  if (a.degree() == 0) return IntPolynomial{1};
  return a.primitive_part();
}

}  // namespace spectra
