#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "unicyclo/cyclotomic.hpp"
#include "unicyclo/error.hpp"
#include "unicyclo/polynomial.hpp"

using unicyclo::Integer;
using unicyclo::poly::IntPolynomial;
using unicyclo::poly::TruncatedSeries;
namespace up = unicyclo::poly;
namespace uo = unicyclo::oracle;

namespace {

IntPolynomial random_poly(std::mt19937_64& rng, std::size_t max_deg, long range) {
  std::uniform_int_distribution<std::size_t> deg(0, max_deg);
  std::uniform_int_distribution<long> val(-range, range);
  std::vector<Integer> c(deg(rng) + 1);
  for (auto& v : c) v = val(rng);
  return IntPolynomial(std::move(c));
}

IntPolynomial from_oracle(const uo::Coeffs& c) { return IntPolynomial(c); }

}  // namespace

TEST(IntPolynomial, Normalization) {
  const IntPolynomial zero{0, 0, 0};
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(zero.degree(), -1);
  const IntPolynomial f{1, 2, 0, 0};
  EXPECT_EQ(f.degree(), 1);
  EXPECT_EQ(f.coefficient(5), 0);
  EXPECT_EQ(IntPolynomial::binomial(3), (IntPolynomial{-1, 0, 0, 1}));
  EXPECT_EQ(IntPolynomial({1, 1}).substitute_power(3), (IntPolynomial{1, 0, 0, 1}));
  EXPECT_TRUE(up::coeff_set(zero).empty());
  EXPECT_EQ(up::height(zero), 0);
}

TEST(IntPolynomial, MultiplicationExamples) {
  EXPECT_EQ(IntPolynomial({-1, 1}) * IntPolynomial({1, 1}), (IntPolynomial{-1, 0, 1}));
  const IntPolynomial f{3, -1, 4, 1, -5};
  EXPECT_EQ(f * IntPolynomial{1}, f);
  EXPECT_TRUE((f * IntPolynomial{}).is_zero());
  const auto phi12 = IntPolynomial({1, -1, 1}) * IntPolynomial({1, 0, -1, 0, 1});
  EXPECT_EQ(phi12, unicyclo::cyclo::unitary_cyclotomic_binomial(12));
}

TEST(IntPolynomial, RingLawsOnRandomInputs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = random_poly(rng, 64, 50), b = random_poly(rng, 64, 50), c = random_poly(rng, 64, 50);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(uo::as_coeffs(a * b), uo::schoolbook(uo::as_coeffs(a), uo::as_coeffs(b)));
    ASSERT_TRUE((a - a).is_zero());
  }
}

TEST(IntPolynomial, BigCoefficientPath) {
  // Magnitudes past 64 bits force the arbitrary-precision branch.
  const Integer big = Integer(1) << 70;
  const IntPolynomial f(std::vector<Integer>{big, -big, 3});
  const IntPolynomial g(std::vector<Integer>{big, 1});
  EXPECT_EQ(uo::as_coeffs(f * g), uo::schoolbook(uo::as_coeffs(f), uo::as_coeffs(g)));
  EXPECT_EQ((f * g).coefficient(0), big * big);
}

TEST(Binomial, MultiplyAndDivide) {
  EXPECT_EQ(up::mul_binomial(IntPolynomial{1}, 5), IntPolynomial::binomial(5));
  EXPECT_EQ(up::div_binomial_exact(IntPolynomial::binomial(6), 2), (IntPolynomial{1, 0, 1, 0, 1}));
  EXPECT_THROW(up::div_binomial_exact(IntPolynomial({-2, 0, 0, 1}), 1), unicyclo::NonExactDivision);
  try {
    up::div_binomial_exact(IntPolynomial({-2, 0, 0, 1}), 1);
  } catch (const unicyclo::NonExactDivision& e) {
    EXPECT_EQ(e.divisor(), 1u);
  }
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_poly(rng, 80, 1000);
    const std::uint64_t d = 1 + rng() % 40;
    const auto g = up::mul_binomial(f, d);
    ASSERT_EQ(g, f * IntPolynomial::binomial(d));
    ASSERT_EQ(up::div_binomial_exact(g, d), f);
    ASSERT_EQ(uo::as_coeffs(up::div_binomial_exact(g, d)), uo::long_divide(uo::as_coeffs(g),
                                                                            uo::x_pow_minus_one(d)));
  }
}

TEST(Height, Examples) {
  const auto phi105 = unicyclo::cyclo::cyclotomic(105);
  EXPECT_EQ(up::height(phi105), 2);
  EXPECT_EQ(unicyclo::cyclo::unitary_cyclotomic(60).coefficient(5), -2);
  EXPECT_FALSE(up::is_flat(phi105));
  EXPECT_TRUE(up::is_flat(unicyclo::cyclo::cyclotomic(15)));
  EXPECT_EQ(up::coeff_set(IntPolynomial{1, 0, -1}), (std::set<Integer>{-1, 0, 1}));
}

TEST(Series, InverseExamples) {
  const auto inv = up::series_inverse(up::series_from(IntPolynomial{1, 1}, 4));
  EXPECT_EQ(inv.to_polynomial(), (IntPolynomial{1, -1, 1, -1}));
  const auto phi12 = unicyclo::cyclo::unitary_cyclotomic(12);
  EXPECT_EQ(up::series_inverse(up::series_from(phi12, 6)).to_polynomial(), (IntPolynomial{1, 1, 1, 0, -1, -1}));
  EXPECT_THROW(up::series_inverse(up::series_from(IntPolynomial{2, 1}, 4)), unicyclo::NonUnitConstantTerm);
  EXPECT_THROW(up::series_mul(TruncatedSeries(3), TruncatedSeries(4)), unicyclo::InvalidArgument);
}

TEST(Series, InverseIsTwoSided) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    auto f = random_poly(rng, 70, 9);
    std::vector<Integer> c(f.coefficients().begin(), f.coefficients().end());
    c[0] = (trial % 2) ? 1 : -1;
    const auto a = up::series_from(IntPolynomial(c), 64);
    const auto b = up::series_inverse(a);
    ASSERT_EQ(up::series_mul(a, b), TruncatedSeries::one(64));
    ASSERT_EQ(up::series_mul(b, a), TruncatedSeries::one(64));
  }
}

TEST(Series, AgreesWithPolynomialArithmetic) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto f = random_poly(rng, 50, 20), g = random_poly(rng, 50, 20);
    const std::size_t n = 1 + rng() % 80;
    ASSERT_EQ(up::series_mul(up::series_from(f, n), up::series_from(g, n)), up::series_from(f * g, n));
    const std::uint64_t d = 1 + rng() % 20;
    auto s = up::series_from(f, n);
    s.mul_one_minus_power(d);
    ASSERT_EQ(s, up::series_from(-up::mul_binomial(f, d), n));
    s.div_one_minus_power(d);
    ASSERT_EQ(s, up::series_from(f, n));
  }
}

TEST(Series, OracleForSmallCyclotomics) {
  uo::CyclotomicByDivision phi;
  for (std::uint64_t n = 1; n <= 60; ++n) {
    ASSERT_EQ(unicyclo::cyclo::cyclotomic(n), from_oracle(phi(n))) << n;
  }
}
