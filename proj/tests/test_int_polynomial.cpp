#include <gtest/gtest.h>

#include <random>

#include "spectra/error.hpp"
#include "spectra/int_polynomial.hpp"

namespace spectra {
namespace {

const IntPolynomial kK3{-2, -3, 0, 1};  // x^3 - 3x - 2 = (x+1)^2 (x-2)

TEST(IntPolynomial, BasicsAndFormatting) {
  EXPECT_EQ(kK3.degree(), 3);
  EXPECT_EQ(kK3.to_string(), "x^3 - 3x - 2");
  EXPECT_EQ(IntPolynomial{}.degree(), -1);
  EXPECT_EQ(IntPolynomial({0, 0}).degree(), -1);
  EXPECT_EQ(kK3.evaluate(mpz_class(2)), 0);
  EXPECT_EQ(kK3.evaluate(mpz_class(-1)), 0);
  EXPECT_DOUBLE_EQ(kK3.evaluate(3.0), 16.0);
  EXPECT_EQ(IntPolynomial({6, -4, 2}).content(), 2);
  EXPECT_EQ(IntPolynomial({6, -4, -2}).primitive_part(), IntPolynomial({-3, 2, 1}));
}

TEST(IntPolynomial, Arithmetic) {
  const IntPolynomial a{1, 1};   // x + 1
  const IntPolynomial b{-2, 1};  // x - 2
  EXPECT_EQ(a * a * b, kK3);
  EXPECT_EQ(a + b, IntPolynomial({-1, 2}));
  EXPECT_EQ(a - a, IntPolynomial{});
  EXPECT_EQ(a * mpz_class(3), IntPolynomial({3, 3}));
}

TEST(IntPolynomial, Derivative) {
  EXPECT_EQ(poly_derivative(kK3), IntPolynomial({-3, 0, 3}));
  EXPECT_TRUE(poly_derivative(IntPolynomial{7}).is_zero());
  EXPECT_EQ(poly_derivative(IntPolynomial::monomial(2)), IntPolynomial({0, 2}));
}

TEST(IntPolynomial, Gcd) {
  EXPECT_EQ(poly_gcd(kK3, IntPolynomial({-3, 0, 3})), IntPolynomial({1, 1}));
  EXPECT_EQ(poly_gcd(IntPolynomial({4, 0, -2}), IntPolynomial{}), IntPolynomial({-2, 0, 1}));
  EXPECT_EQ(poly_gcd(IntPolynomial({-5, 0, 1}), IntPolynomial({1, 1})), IntPolynomial{1});
  EXPECT_THROW(poly_gcd(IntPolynomial{}, IntPolynomial{}), PreconditionError);
}

TEST(IntPolynomial, GcdOfProductsRecoversCommonFactor) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> c(-4, 4);
  auto random_poly = [&](int degree) {
    std::vector<mpz_class> coeffs;
    for (int i = 0; i < degree; ++i) coeffs.push_back(c(rng));
    coeffs.push_back(1);
    return IntPolynomial(coeffs);
  };
  for (int trial = 0; trial < 100; ++trial) {
    const IntPolynomial common = random_poly(1 + trial % 3);
    const IntPolynomial p = common * random_poly(2), q = common * random_poly(3);
    const IntPolynomial g = poly_gcd(p, q);
    // The common factor divides the gcd, and the gcd divides both inputs.
    EXPECT_NO_THROW(divide_exact(g, common.primitive_part()));
    EXPECT_NO_THROW(divide_exact(p, g));
    EXPECT_NO_THROW(divide_exact(q, g));
  }
}

TEST(IntPolynomial, DivisionAndRemainder) {
  EXPECT_EQ(divide_exact(kK3, IntPolynomial({1, 1})), IntPolynomial({-2, -1, 1}));
  EXPECT_THROW(divide_exact(kK3, IntPolynomial({1, 2})), Error);
  EXPECT_TRUE(pseudo_remainder(kK3, IntPolynomial({-2, 1})).is_zero());
}

}  // namespace
}  // namespace spectra
