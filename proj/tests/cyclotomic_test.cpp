#include "cliffq/cyclotomic.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <random>

#include "cliffq/errors.hpp"

using namespace cliffq;

namespace {

// Oracle: expand Π (x − ζ^k) over primitive k numerically and round.
std::vector<long> cyclotomic_by_roots(int m) {
  std::vector<std::complex<double>> poly{1.0};
  for (int k = 0; k < m; ++k) {
    if (std::gcd(k, m) != 1) continue;
    const auto root = std::polar(1.0, 2.0 * std::numbers::pi * k / m);
    std::vector<std::complex<double>> next(poly.size() + 1, 0.0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= root * poly[i];
    }
    poly = std::move(next);
  }
  std::vector<long> out;
  for (const auto& c : poly) out.push_back(std::lround(c.real()));
  return out;
}

CyclotomicNumber random_element(int m, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rational> c(static_cast<std::size_t>(euler_phi(m)));
  for (auto& v : c) {
    v = Rational(num(rng), den(rng));
    v.canonicalize();
  }
  return CyclotomicNumber(m, c);
}

}  // namespace

TEST(CyclotomicPolynomial, SmallCases) {
  EXPECT_EQ(cyclotomic_polynomial(1).to_string(), "x - 1");
  EXPECT_EQ(cyclotomic_polynomial(2).to_string(), "x + 1");
  EXPECT_EQ(cyclotomic_polynomial(6).to_string(), "x^2 - x + 1");
}

TEST(CyclotomicPolynomial, MatchesRootProductOracle) {
  for (int m = 1; m <= 30; ++m) {
    const auto expected = cyclotomic_by_roots(m);
    const auto& got = cyclotomic_polynomial(m).coefficients();
    ASSERT_EQ(got.size(), expected.size()) << "m=" << m;
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(got[i], expected[i]) << "m=" << m << " i=" << i;
    EXPECT_EQ(cyclotomic_polynomial(m).degree(), euler_phi(m));
  }
}

TEST(RootOfUnity, Examples) {
  const auto i4 = root_of_unity(4, 1);
  ASSERT_EQ(i4.coefficients().size(), 2u);
  EXPECT_EQ(i4.coefficients()[0], 0);
  EXPECT_EQ(i4.coefficients()[1], 1);

  EXPECT_EQ(root_of_unity(3, 3), CyclotomicNumber(3, 1));
  EXPECT_EQ(root_of_unity(3, 2), CyclotomicNumber(3, {Rational(-1), Rational(-1)}));
  EXPECT_EQ(root_of_unity(7, 0), CyclotomicNumber(7, 1));
  EXPECT_EQ(root_of_unity(5, -1), root_of_unity(5, 4));
}

TEST(FieldOps, Examples) {
  EXPECT_TRUE((CyclotomicNumber(3, 1) + root_of_unity(3, 1) + root_of_unity(3, 2)).is_zero());
  for (int m = 1; m <= 16; ++m) EXPECT_EQ(invert(root_of_unity(m, 1)), root_of_unity(m, m - 1)) << m;
  EXPECT_EQ(multiply(root_of_unity(4, 1), root_of_unity(4, 1)), CyclotomicNumber(4, -1));
}

TEST(FieldOps, ErrorPaths) {
  EXPECT_THROW(CyclotomicNumber(5).inverse(), DivisionByZero);
  EXPECT_THROW(root_of_unity(4, 1) + root_of_unity(8, 1), ConductorMismatch);
  EXPECT_THROW(cyclotomic_polynomial(0), std::invalid_argument);
}

TEST(FieldOps, PhiAndCanonicalEquality) {
  for (int m = 1; m <= 24; ++m) {
    EXPECT_EQ(root_of_unity(m, m), CyclotomicNumber(m, 1));
    // Φ_m(ζ) = 0 evaluated through field arithmetic.
    CyclotomicNumber acc(m);
    const auto& phi = cyclotomic_polynomial(m).coefficients();
    for (std::size_t k = 0; k < phi.size(); ++k) acc += root_of_unity(m, static_cast<long>(k)) * Rational(phi[k]);
    EXPECT_TRUE(acc.is_zero()) << m;
  }
}

TEST(ToComplex, Examples) {
  EXPECT_NEAR(std::abs(root_of_unity(2, 1).to_complex() - std::complex<double>(-1.0, 0.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(root_of_unity(4, 1).to_complex() - std::complex<double>(0.0, 1.0)), 0.0, 1e-15);
  const auto z3 = root_of_unity(3, 1).to_complex();
  EXPECT_NEAR(z3.real(), -0.5, 1e-15);
  EXPECT_NEAR(z3.imag(), std::sqrt(3.0) / 2.0, 1e-15);
}

TEST(FieldProperties, InverseConjugateAndFloatAgreement) {
  std::mt19937 rng(20261016);
  for (int m = 1; m <= 16; ++m) {
    for (int trial = 0; trial < 12; ++trial) {
      const auto a = random_element(m, rng);
      const auto b = random_element(m, rng);
      if (!b.is_zero()) EXPECT_EQ((a * b) * b.inverse(), a) << "m=" << m;
      EXPECT_EQ(a.conjugate().conjugate(), a);
      EXPECT_EQ((a * b).conjugate(), a.conjugate() * b.conjugate());
      EXPECT_NEAR(std::abs((a * b).to_complex() - a.to_complex() * b.to_complex()), 0.0, 1e-12);
      EXPECT_NEAR(std::abs((a + b).to_complex() - (a.to_complex() + b.to_complex())), 0.0, 1e-12);
      EXPECT_NEAR(std::abs(a.conjugate().to_complex() - std::conj(a.to_complex())), 0.0, 1e-12);
    }
    for (int k = 0; k < m; ++k) EXPECT_EQ(root_of_unity(m, k) * root_of_unity(m, m - k), CyclotomicNumber(m, 1));
  }
}

TEST(FieldProperties, LargeCoefficientsFloatBridge) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-1000, 1000);
  for (int m = 2; m <= 16; ++m) {
    std::vector<Rational> c(static_cast<std::size_t>(euler_phi(m)));
    for (auto& v : c) v = num(rng);
    const CyclotomicNumber a(m, c);
    std::complex<double> direct{0.0, 0.0};
    for (std::size_t i = 0; i < c.size(); ++i) direct += c[i].get_d() * std::polar(1.0, 2.0 * std::numbers::pi * i / m);
    EXPECT_NEAR(std::abs(a.to_complex() - direct), 0.0, 1e-12);
    EXPECT_NEAR(std::abs((a * a).to_complex() - direct * direct), 0.0, 1e-12 * std::max(1.0, std::norm(direct)));
  }
}

TEST(CyclotomicMatrix, AdjointAndProduct) {
  CyclotomicMatrix m(2, 2, 4);
  m(0, 1) = root_of_unity(4, 1);
  m(1, 0) = CyclotomicNumber(4, 2);
  const auto p = m * m.adjoint();
  EXPECT_EQ(p(0, 0), CyclotomicNumber(4, 1));
  EXPECT_EQ(p(1, 1), CyclotomicNumber(4, 4));
  EXPECT_TRUE(p(0, 1).is_zero());
}
