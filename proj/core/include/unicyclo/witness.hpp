#pragma once

// Explicit witnesses that every integer is a coefficient of some Phi*_{mn}
// and of some Psi*_{mn}: a prime window in an arithmetic progression, the
// truncated expansion of Phi*_{m n1} below x^{2 p_1}, and the predicted
// coefficients at p_t and just beyond it.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "unicyclo/arith.hpp"
#include "unicyclo/polynomial.hpp"

namespace unicyclo::witness {

using poly::TruncatedSeries;

/// Search limit for the base integer n in build_plan.
inline constexpr std::uint64_t kDefaultSearchCeiling = 100'000'000;
/// Largest m * n1 for which the full polynomial is built as an oracle.
inline constexpr std::uint64_t kDefaultDirectCeiling = 1'000'000;

struct WitnessPlan {
  std::uint64_t m = 0;
  std::uint64_t t = 0;
  /// Base integer, n >= 8m; every prime lies in (n, 15n/8).
  std::uint64_t n = 0;
  /// p_1 < ... < p_t, all = 1 (mod m).
  std::vector<std::uint64_t> primes;
  /// Smallest prime > 2 p_1.
  std::uint64_t q = 0;
  /// p_1...p_t, times q when t is even; mu*(n1) = -1.
  arith::Factorization n1;
  /// p_1...p_t, times q when t is odd; mu*(n2) = +1.
  arith::Factorization n2;

  /// Truncation order 2 p_1.
  std::size_t window() const { return static_cast<std::size_t>(2 * primes.front()); }
  std::uint64_t largest_prime() const { return primes.back(); }
  arith::Factorization m_factorization() const { return arith::factorize(m); }
  /// Factorizations of m * n1 and m * n2 (throws on 64-bit overflow).
  arith::Factorization m_n1() const { return m_factorization().coprime_product(n1); }
  arith::Factorization m_n2() const { return m_factorization().coprime_product(n2); }
};

/// Smallest n >= 8m with t primes = 1 (mod m) strictly inside (n, 15n/8),
/// the t smallest of them, and the smallest prime q > 2 p_1. Throws
/// InvalidArgument for m < 2 or t < 1 and SearchCeilingExceeded when n would
/// pass the ceiling.
WitnessPlan build_plan(std::uint64_t m, std::uint64_t t, std::uint64_t search_ceiling = kDefaultSearchCeiling);

/// Phi*_N mod x^order from the block-divisor factors (1 - x^d)^{mu*(N/d)}
/// with d < order (the others are = 1). Requires N > 1.
TruncatedSeries truncated_unitary_cyclotomic(const arith::Factorization& big_n, std::size_t order);
/// Psi*_N mod x^order from the same factors with exponents negated.
TruncatedSeries truncated_inverse_unitary_cyclotomic(const arith::Factorization& big_n, std::size_t order);

/// Phi*_{m n1} mod x^{2 p_1} via the block-divisor factors.
TruncatedSeries truncated_phi_star_direct(const WitnessPlan& plan);
/// (1 / Phi*_m(x)) (1 - mu*(m)(x^{p_1} + ... + x^{p_t})) mod x^{2 p_1}.
TruncatedSeries truncated_phi_star_closed(const WitnessPlan& plan);
/// Both of the above; throws InternalMismatch when they differ.
TruncatedSeries truncated_phi_star(const WitnessPlan& plan);

/// Full Phi*_{m n1} truncated at 2 p_1; throws CeilingExceeded when
/// m * n1 > ceiling.
TruncatedSeries coefficient_window_direct(const WitnessPlan& plan, std::uint64_t ceiling = kDefaultDirectCeiling);

enum class WitnessCase {
  /// mu*(m) = +1
  EvenOmega,
  /// mu*(m) = -1, m = 2 (mod 4)
  OddOmegaTwoModFour,
  /// mu*(m) = -1 otherwise
  OddOmegaOther,
};

std::string_view to_string(WitnessCase c);

struct WitnessReport {
  WitnessPlan plan;
  WitnessCase case_tag = WitnessCase::EvenOmega;
  int mu_star_m = 0;
  /// Second-smallest block divisor > 1 of m (EvenOmega only).
  std::optional<std::uint64_t> q2;

  /// The two exponents examined: p_t, and p_t + q2 or p_t + 1.
  std::uint64_t k1 = 0;
  std::uint64_t k2 = 0;
  long predicted_a1 = 0;
  long predicted_a2 = 0;
  Integer observed_a1;
  Integer observed_a2;
  /// c*_{m n2} at k1, k2; predicted to be the negatives of a1, a2.
  Integer observed_c1;
  Integer observed_c2;

  /// The two truncated constructions of Phi*_{m n1} agree.
  bool windows_agree = false;
  /// a*_{m n1}(k) = u*_m(k) - mu*(m) t u*_m(k - 1) for p_t <= k < 2 p_1.
  bool window_formula_holds = false;
  /// c*_{m n2}(k) = -a*_{m n1}(k) for all k < 2 p_1.
  bool inverse_reduction_holds = false;
  /// Full-polynomial oracle results; empty when beyond the ceiling.
  std::optional<bool> direct_phi_agrees;
  std::optional<bool> direct_psi_agrees;

  bool all_match = false;

  /// Integers realized as a*_{m n1} coefficients: {a1, a2}.
  std::vector<long> realized() const { return {predicted_a1, predicted_a2}; }
};

struct WitnessOptions {
  std::uint64_t search_ceiling = kDefaultSearchCeiling;
  std::uint64_t direct_ceiling = kDefaultDirectCeiling;
};

/// Computes the report without throwing on a mismatch.
WitnessReport evaluate_witness(std::uint64_t m, std::uint64_t t, const WitnessOptions& options = {});

/// As evaluate_witness, throwing PredictionMismatch unless all_match.
WitnessReport verify_witness(std::uint64_t m, std::uint64_t t, const WitnessOptions& options = {});

}  // namespace unicyclo::witness
