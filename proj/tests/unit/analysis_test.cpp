#include <gtest/gtest.h>

#include <random>

#include "golden_tables.hpp"
#include "oracles.hpp"
#include "unicyclo/analysis.hpp"
#include "unicyclo/arith.hpp"
#include "unicyclo/error.hpp"

using unicyclo::Integer;
namespace ua = unicyclo::analysis;
namespace uc = unicyclo::cyclo;
namespace uo = unicyclo::oracle;
using uc::PolyFamily;

namespace {

// Straight scan: first n with a coefficient of absolute value m, then first such k.
std::vector<ua::CoeffRecord> naive_table(PolyFamily family, std::uint64_t m_max, std::uint64_t n_max) {
  std::vector<ua::CoeffRecord> rows;
  for (std::uint64_t m = 2; m <= m_max; ++m) {
    bool found = false;
    for (std::uint64_t n = 1; n <= n_max && !found; ++n) {
      const auto f = uc::expand(uc::product_form(family, unicyclo::arith::factorize(n)), uc::ExpandMode::BigOnly);
      const auto c = f.coefficients();
      for (std::size_t k = 0; k < c.size(); ++k)
        if (abs(c[k]) == m) {
          rows.push_back({m, n, f.degree(), k, c[k]});
          found = true;
          break;
        }
    }
    if (!found) break;
  }
  return rows;
}

std::vector<Integer> range(long lo, long hi) {
  std::vector<Integer> v;
  for (long i = lo; i <= hi; ++i) v.emplace_back(i);
  return v;
}

}  // namespace

TEST(Search, MatchesNaiveScan) {
  EXPECT_EQ(ua::minimal_n_table(PolyFamily::PhiStar, 5, 1400), naive_table(PolyFamily::PhiStar, 5, 1400));
  EXPECT_EQ(ua::minimal_n_table(PolyFamily::Phi, 3, 400), naive_table(PolyFamily::Phi, 3, 400));
  EXPECT_EQ(ua::minimal_n_table(PolyFamily::PsiStar, 3, 500), naive_table(PolyFamily::PsiStar, 3, 500));
  EXPECT_EQ(ua::minimal_n_table(PolyFamily::Psi, 2, 600), naive_table(PolyFamily::Psi, 2, 600));
}

TEST(Search, Examples) {
  const auto phi_star = ua::minimal_n_table(PolyFamily::PhiStar, 2, 100);
  ASSERT_EQ(phi_star.size(), 1u);
  EXPECT_EQ(phi_star[0], (ua::CoeffRecord{2, 60, 24, 5, -2}));
  const auto psi_star = ua::minimal_n_table(PolyFamily::PsiStar, 3, 1000);
  ASSERT_EQ(psi_star.size(), 2u);
  EXPECT_EQ(psi_star[1], (ua::CoeffRecord{3, 420, 276, 12, -3}));
  const auto psi = ua::minimal_n_table(PolyFamily::Psi, 2, 1000);
  EXPECT_EQ(psi[0], (ua::CoeffRecord{2, 561, 241, 17, -2}));
}

TEST(Search, RangeExhaustedCarriesCompletedRows) {
  try {
    ua::minimal_n_table(PolyFamily::Psi, 2, 500);
    FAIL() << "expected RangeExhausted";
  } catch (const ua::RangeExhausted& e) {
    EXPECT_EQ(e.m(), 2u);
    EXPECT_TRUE(e.completed().empty());
  }
  try {
    ua::minimal_n_table(PolyFamily::PhiStar, 4, 500);
    FAIL() << "expected RangeExhausted";
  } catch (const ua::RangeExhausted& e) {
    EXPECT_EQ(e.m(), 4u);
    ASSERT_EQ(e.completed().size(), 2u);
    EXPECT_EQ(e.completed()[1].n, 385u);
  }
  const auto outcome = ua::search_minimal_n({PolyFamily::PhiStar, 2, 4, 500, 1});
  EXPECT_EQ(outcome.exhausted_at, 4u);
}

TEST(Search, JobCountDoesNotChangeRows) {
  const auto one = ua::minimal_n_table(PolyFamily::PhiStar, 8, 2000, 1);
  EXPECT_EQ(ua::minimal_n_table(PolyFamily::PhiStar, 8, 2000, 3), one);
  EXPECT_EQ(ua::minimal_n_table(PolyFamily::PhiStar, 8, 2000, 8), one);
}

TEST(Search, RecordsAgreeWithRecomputation) {
  for (const auto& table : unicyclo::golden::tables()) {
    for (const auto& r : table.rows) {
      if (r.n > 4000) continue;
      const auto rec = ua::record_at(table.family, r.n, r.m);
      ASSERT_TRUE(rec.has_value());
      EXPECT_EQ(*rec, (ua::CoeffRecord{r.m, r.n, r.degree, r.k, r.value}));
    }
  }
  EXPECT_FALSE(ua::record_at(PolyFamily::Phi, 105, 3).has_value());
}

TEST(CoefficientSets, Fixtures) {
  const auto big = ua::ternary_consecutive_check(27, 29, 31);
  EXPECT_TRUE(big.is_consecutive);
  EXPECT_EQ(big.coeff_set, range(-8, 8));
  const auto small = ua::ternary_consecutive_check(8, 11, 13);
  EXPECT_TRUE(small.is_consecutive);
  EXPECT_EQ(small.coeff_set, range(-4, 3));
  const auto four = ua::coefficient_set_check({16, 9, 25, 7});
  EXPECT_FALSE(four.is_consecutive);
  EXPECT_EQ(four.min, -49);
  EXPECT_EQ(four.max, 44);
  EXPECT_EQ(four.missing, (std::vector<Integer>{-48, -47, -45, -43, 40, 42, 43}));
  EXPECT_THROW(ua::ternary_consecutive_check(2, 3, 5), unicyclo::PreconditionUnmet);
  EXPECT_THROW(ua::coefficient_set_check({4, 6, 5}), unicyclo::PreconditionUnmet);
  EXPECT_THROW(ua::coefficient_set_check({12, 5, 7}), unicyclo::PreconditionUnmet);
}

TEST(CoefficientSets, RandomTernaryAreConsecutive) {
  std::mt19937_64 rng(29);
  const std::vector<std::uint64_t> pp{3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31};
  int done = 0;
  while (done < 30) {
    const auto a = pp[rng() % pp.size()], b = pp[rng() % pp.size()], c = pp[rng() % pp.size()];
    if (uo::naive_gcd(a, b) != 1 || uo::naive_gcd(a, c) != 1 || uo::naive_gcd(b, c) != 1) continue;
    ++done;
    ASSERT_TRUE(ua::ternary_consecutive_check(a, b, c).is_consecutive) << a << " " << b << " " << c;
  }
}

TEST(CongruenceTransfer, Examples) {
  const auto same = ua::congruence_transfer_check(5, 7, 81, 11);
  EXPECT_EQ(same.sign, 1);
  EXPECT_TRUE(same.holds);
  EXPECT_EQ(same.set_r, same.set_s);
  const auto neg = ua::congruence_transfer_check(5, 7, 59, 11);
  EXPECT_EQ(neg.sign, -1);
  EXPECT_TRUE(neg.holds);
  std::vector<Integer> negated;
  for (auto it = neg.set_s.rbegin(); it != neg.set_s.rend(); ++it) negated.push_back(-*it);
  EXPECT_EQ(neg.set_r, negated);
  EXPECT_THROW(ua::congruence_transfer_check(4, 5, 23, 3), unicyclo::PreconditionUnmet);
  EXPECT_THROW(ua::congruence_transfer_check(5, 7, 13, 11), unicyclo::PreconditionUnmet);
}

TEST(HeightJump, Examples) {
  const auto lower = ua::height_jump_check(4, 5, 3, 23);
  EXPECT_EQ(lower.height_s, 2);
  EXPECT_EQ(lower.height_r, 2);
  EXPECT_TRUE(lower.lower_attained);
  const auto upper = ua::height_jump_check(9, 7, 5, 131);
  EXPECT_EQ(upper.height_s, 2);
  EXPECT_EQ(upper.height_r, 3);
  EXPECT_TRUE(upper.upper_attained);
  EXPECT_THROW(ua::height_jump_check(9, 7, 5, 68), unicyclo::PreconditionUnmet);
}

TEST(Kaplan, Examples) {
  const auto r11 = ua::kaplan_flatness_check(4, 3, 11, 1);
  ASSERT_EQ(r11.instances.size(), 1u);
  EXPECT_EQ(r11.instances[0].n, 132u);
  EXPECT_EQ(r11.instances[0].residue, -1);
  EXPECT_TRUE(r11.holds);
  const auto r13 = ua::kaplan_flatness_check(4, 3, 13, 1);
  EXPECT_EQ(r13.instances.at(0).n, 156u);
  EXPECT_EQ(r13.instances.at(0).residue, 1);
  EXPECT_TRUE(r13.holds);
  const auto r5 = ua::kaplan_flatness_check(4, 3, 5, 2);
  ASSERT_EQ(r5.instances.size(), 1u);  // 5 = 5 (mod 12) is skipped
  EXPECT_EQ(r5.instances[0].n, 300u);
  EXPECT_TRUE(r5.instances[0].flat);
}

TEST(PsiBound, Examples) {
  const auto a = ua::psi_star_ternary_bound_check(3, 5, 7);
  EXPECT_EQ(a.bound, 2u);
  EXPECT_LE(a.height, 2);
  EXPECT_TRUE(a.holds);
  const auto b = ua::psi_star_ternary_bound_check(4, 5, 7);
  EXPECT_EQ(b.bound, 2u);
  EXPECT_TRUE(b.bound_within_p_minus_1);
  EXPECT_TRUE(b.factorization_identity);
  EXPECT_TRUE(b.convolution_identity);
  EXPECT_THROW(ua::psi_star_ternary_bound_check(5, 4, 7), unicyclo::PreconditionUnmet);
}

TEST(PsiBound, RandomTriples) {
  std::mt19937_64 rng(31);
  const std::vector<std::uint64_t> pp{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27};
  int done = 0;
  while (done < 10) {
    std::vector<std::uint64_t> t{pp[rng() % pp.size()], pp[rng() % pp.size()], pp[rng() % pp.size()]};
    std::sort(t.begin(), t.end());
    if (uo::naive_gcd(t[0], t[1]) != 1 || uo::naive_gcd(t[0], t[2]) != 1 || uo::naive_gcd(t[1], t[2]) != 1) continue;
    ++done;
    const auto r = ua::psi_star_ternary_bound_check(t[0], t[1], t[2]);
    ASSERT_TRUE(r.factorization_identity);
    ASSERT_TRUE(r.holds) << t[0] << " " << t[1] << " " << t[2];
  }
}
