#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "unicyclo/cyclotomic.hpp"
#include "unicyclo/error.hpp"
#include "unicyclo/semigroup.hpp"

using unicyclo::poly::IntPolynomial;
namespace us = unicyclo::semigroup;
namespace uc = unicyclo::cyclo;
namespace uo = unicyclo::oracle;

namespace {

// Gaps by brute-force enumeration of sums, up to a generous limit.
std::vector<std::uint64_t> brute_gaps(const std::vector<std::uint64_t>& gens, std::uint64_t limit) {
  std::vector<bool> rep(limit + 1, false);
  rep[0] = true;
  for (std::uint64_t k = 1; k <= limit; ++k)
    for (auto g : gens)
      if (g <= k && rep[k - g]) rep[k] = true;
  std::vector<std::uint64_t> gaps;
  for (std::uint64_t k = 0; k <= limit; ++k)
    if (!rep[k]) gaps.push_back(k);
  return gaps;
}

bool is_prime_power(std::uint64_t n) { return n >= 2 && uo::trial_factor(n).size() == 1; }

}  // namespace

TEST(Semigroup, Examples) {
  const us::NumericalSemigroup s35({3, 5});
  EXPECT_EQ(s35.gaps(), (std::vector<std::uint64_t>{1, 2, 4, 7}));
  EXPECT_EQ(s35.frobenius(), 7u);
  EXPECT_EQ(s35.polynomial(), (IntPolynomial{1, -1, 0, 1, -1, 1, 0, -1, 1}));
  const us::NumericalSemigroup s23({3, 2});
  EXPECT_EQ(s23.gaps(), (std::vector<std::uint64_t>{1}));
  EXPECT_EQ(s23.polynomial(), (IntPolynomial{1, -1, 1}));
  EXPECT_EQ(s23.polynomial(), uc::cyclotomic(6));
  EXPECT_EQ(us::semigroup_new({4, 5, 6, 7}).frobenius(), 3u);
  EXPECT_TRUE(s35.contains(0));
  EXPECT_FALSE(s35.contains(7));
  EXPECT_TRUE(s35.contains(8));
  EXPECT_THROW(us::NumericalSemigroup({2, 4}), unicyclo::NotNumerical);
  EXPECT_THROW(us::NumericalSemigroup({1, 3}), unicyclo::InvalidArgument);
  // Redundant generators are kept; duplicates merge.
  EXPECT_EQ(us::NumericalSemigroup({3, 5, 8, 5}).generators(), (std::vector<std::uint64_t>{3, 5, 8}));
}

TEST(Semigroup, GapsMatchBruteForce) {
  std::mt19937_64 rng(17);
  int built = 0;
  while (built < 150) {
    const std::size_t k = 2 + rng() % 4;
    std::vector<std::uint64_t> gens;
    for (std::size_t i = 0; i < k; ++i) gens.push_back(2 + rng() % 30);
    std::uint64_t g = 0;
    for (auto v : gens) g = uo::naive_gcd(g, v);
    if (g != 1) {
      EXPECT_THROW(us::NumericalSemigroup{gens}, unicyclo::NotNumerical);
      continue;
    }
    ++built;
    const us::NumericalSemigroup s(gens);
    const auto expected = brute_gaps(gens, 32 * 32);
    ASSERT_EQ(s.gaps(), expected);
    ASSERT_EQ(s.frobenius(), expected.back());
    for (std::uint64_t j = 0; j < 1100; ++j)
      ASSERT_EQ(s.contains(j), !std::binary_search(expected.begin(), expected.end(), j));

    const auto p = s.polynomial();
    ASSERT_EQ(p.coefficient(0), 1);
    int last = 0;
    for (const auto& c : p.coefficients()) {
      if (c == 0) continue;
      ASSERT_TRUE(c == 1 || c == -1);
      ASSERT_NE(c.convert_to<int>(), last);
      last = c.convert_to<int>();
    }
    const std::size_t order = s.frobenius() + 2;
    auto h = s.hilbert_series(order);
    h.mul_one_minus_power(1);
    ASSERT_EQ(h, unicyclo::poly::series_from(p, order));
  }
}

TEST(Semigroup, TwoGeneratorDegree) {
  std::mt19937_64 rng(23);
  int seen = 0;
  while (seen < 20) {
    const std::uint64_t a = 2 + rng() % 40, b = 2 + rng() % 40;
    if (uo::naive_gcd(a, b) != 1) continue;
    ++seen;
    const us::NumericalSemigroup s({a, b});
    EXPECT_EQ(s.frobenius(), a * b - a - b);
    EXPECT_EQ(s.polynomial().degree(), static_cast<long>(a * b - a - b + 1));
  }
}

TEST(BinaryIdentities, Examples) {
  const auto r49 = us::verify_binary_identities(4, 9);
  EXPECT_TRUE(r49.ok);
  EXPECT_TRUE(r49.prime_powers);
  EXPECT_EQ(r49.equals_unitary_cyclotomic, true);
  EXPECT_EQ(r49.coefficient_rule, true);
  EXPECT_EQ(r49.inverse_closed_form, true);
  EXPECT_FALSE(r49.equals_cyclotomic.has_value());
  const auto r23 = us::verify_binary_identities(2, 3);
  EXPECT_EQ(r23.equals_cyclotomic, true);
  EXPECT_EQ(r23.semigroup_poly, uc::cyclotomic(6));
  EXPECT_THROW(us::verify_binary_identities(4, 6), unicyclo::PreconditionUnmet);
  EXPECT_THROW(us::verify_binary_identities(1, 6), unicyclo::PreconditionUnmet);
  const auto r621 = us::check_binary_identities(10, 21);
  EXPECT_TRUE(r621.ok);
  EXPECT_FALSE(r621.prime_powers);
  EXPECT_FALSE(r621.equals_unitary_cyclotomic.has_value());
}

TEST(BinaryIdentities, PrimePowerPairsAreFlat) {
  for (std::uint64_t p = 2; p <= 64; ++p)
    for (std::uint64_t q = p + 1; q <= 64; ++q) {
      if (!is_prime_power(p) || !is_prime_power(q) || uo::naive_gcd(p, q) != 1) continue;
      const auto r = us::verify_binary_identities(p, q);
      ASSERT_TRUE(r.ok) << p << " " << q;
      ASSERT_EQ(unicyclo::poly::height(uc::unitary_cyclotomic(p * q)), 1);
    }
}
