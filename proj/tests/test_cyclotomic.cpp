#include <gtest/gtest.h>

#include "support.hpp"

using namespace galcover;

namespace {

Cyclotomic random_value(std::mt19937_64& gen, int e) {
  std::uniform_int_distribution<int> coef(-3, 3);
  Cyclotomic z = Cyclotomic::integer(e, 0);
  for (int t = 0; t < e; ++t)
    z += Cyclotomic::zeta(e, t) * rational(coef(gen), 1 + (t % 2));
  return z;
}

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9; }

} // namespace

TEST(Cyclotomic, PolynomialDegreesAreEulerPhi) {
  for (int n = 1; n <= 60; ++n)
    EXPECT_EQ(static_cast<int>(detail::cyclotomic_polynomial(n).size()) - 1, detail::euler_phi(n)) << n;
  EXPECT_EQ(detail::cyclotomic_polynomial(12), (detail::int_poly{1, 0, -1, 0, 1}));
  EXPECT_EQ(detail::cyclotomic_polynomial(6), (detail::int_poly{1, -1, 1}));
}

TEST(Cyclotomic, RootsOfUnity) {
  for (int e = 1; e <= 30; ++e) {
    Cyclotomic p = Cyclotomic::integer(e, 1), sum = Cyclotomic::integer(e, 0);
    for (int t = 0; t < e; ++t) {
      sum += Cyclotomic::zeta(e, t);
      p *= Cyclotomic::zeta(e, 1);
    }
    EXPECT_EQ(p, Cyclotomic::integer(e, 1)) << e;
    if (e > 1) {
      EXPECT_TRUE(sum.is_zero()) << e;
    }
  }
  EXPECT_EQ(Cyclotomic::zeta(4, 2).to_integer(), -1);
  EXPECT_EQ((Cyclotomic::zeta(3, 1) + Cyclotomic::zeta(3, 2)).to_integer(), -1);
  const Cyclotomic sqrt2 = Cyclotomic::zeta(8, 1) + Cyclotomic::zeta(8, 7);
  EXPECT_FALSE(sqrt2.is_rational());
  EXPECT_EQ((sqrt2 * sqrt2).to_integer(), 2);
}

TEST(Cyclotomic, ArithmeticMatchesFloatingPoint) {
  auto gen = support::rng(10);
  for (int trial = 0; trial < 300; ++trial) {
    const int e = 1 + trial % 24;
    const Cyclotomic a = random_value(gen, e), b = random_value(gen, e);
    const int e2 = 1 + (trial * 7) % 12;
    const Cyclotomic c = random_value(gen, e2); // mixed conductors lift to the lcm
    EXPECT_TRUE(close((a + b).approx(), a.approx() + b.approx()));
    EXPECT_TRUE(close((a - c).approx(), a.approx() - c.approx()));
    EXPECT_TRUE(close((a * c).approx(), a.approx() * c.approx()));
    EXPECT_TRUE(close((a * b * c).approx(), a.approx() * b.approx() * c.approx()));
    EXPECT_TRUE(close(a.conj().approx(), std::conj(a.approx())));
    EXPECT_TRUE(close((a / rational(3, 2)).approx(), a.approx() / 1.5));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a.lifted(2 * e), a);
    EXPECT_TRUE(close(a.lifted(3 * e).approx(), a.approx()));
    EXPECT_EQ(-(-a), a);
  }
}

TEST(Cyclotomic, GaloisIsAFieldAutomorphism) {
  auto gen = support::rng(11);
  for (int e : {5, 8, 9, 12}) {
    for (long long k = 1; k < e; ++k) {
      if (std::gcd(k, static_cast<long long>(e)) != 1)
        continue;
      const Cyclotomic a = random_value(gen, e), b = random_value(gen, e);
      EXPECT_EQ((a * b).galois(k), a.galois(k) * b.galois(k));
      EXPECT_EQ((a + b).galois(k), a.galois(k) + b.galois(k));
      EXPECT_EQ(Cyclotomic::zeta(e, 1).galois(k), Cyclotomic::zeta(e, k));
    }
  }
  try {
    Cyclotomic::zeta(6, 1).galois(2);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.kind(), error_kind::invalid_parameter);
  }
}

TEST(Cyclotomic, WordForm) {
  EXPECT_EQ(Cyclotomic::zeta(8, 3).to_string(), "z8^3");
  EXPECT_EQ(Cyclotomic::zeta(8, 1).to_string(), "z8");
  EXPECT_EQ(Cyclotomic::integer(5, 0).to_string(), "0");
  EXPECT_EQ(Cyclotomic::from_rational(3, rational(-1, 2)).to_string(), "-1/2");
  EXPECT_EQ((Cyclotomic::integer(8, -1) + Cyclotomic::zeta(8, 3)).to_string(), "-1 + z8^3");
  EXPECT_EQ((Cyclotomic::zeta(5, 2) * rational(1, 2)).to_string(), "1/2*z5^2");
}

TEST(Cyclotomic, Errors) {
  EXPECT_THROW(Cyclotomic::integer(4, 1) / rational(0), error);
  EXPECT_THROW(Cyclotomic::zeta(0, 1), error);
  EXPECT_THROW(Cyclotomic::zeta(6, 1).lifted(9), error);
}

TEST(Cyclotomic, CanonicalFormMakesEqualityStructural) {
  // z3^2 = -1 - z3, so both spellings reduce to the same coefficients
  const Cyclotomic a = Cyclotomic::zeta(3, 2);
  const Cyclotomic b = Cyclotomic::integer(3, -1) - Cyclotomic::zeta(3, 1);
  EXPECT_EQ(a.coefficients(), b.coefficients());
  EXPECT_EQ(a.coefficients().size(), 2u);
}
