#pragma once

// Numerical semigroups S(a_1, ..., a_m) and their semigroup polynomials.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unicyclo/polynomial.hpp"

namespace unicyclo::semigroup {

using poly::IntPolynomial;
using poly::TruncatedSeries;

class NumericalSemigroup {
 public:
  /// Generators must be >= 2 with gcd 1 (NotNumerical otherwise). Duplicate
  /// values are merged; generators representable by the others are kept.
  explicit NumericalSemigroup(std::vector<std::uint64_t> generators);

  const std::vector<std::uint64_t>& generators() const noexcept { return generators_; }
  /// Every k at or beyond this bound belongs to S; the table covers [0, bound).
  std::uint64_t conductor_bound() const noexcept { return member_.size(); }

  bool contains(std::uint64_t k) const { return k >= member_.size() || member_[k]; }
  const std::vector<std::uint64_t>& gaps() const noexcept { return gaps_; }
  /// Largest gap. Every valid semigroup has 1 as a gap, so this is >= 1.
  std::uint64_t frobenius() const { return gaps_.back(); }

  /// P_S(x) = 1 + (x - 1) * sum_{s not in S} x^s.
  IntPolynomial polynomial() const;
  /// H_S(x) = sum_{s in S} x^s modulo x^order.
  TruncatedSeries hilbert_series(std::size_t order) const;

 private:
  std::vector<std::uint64_t> generators_;
  std::vector<bool> member_;
  std::vector<std::uint64_t> gaps_;
};

inline NumericalSemigroup semigroup_new(std::vector<std::uint64_t> generators) {
  return NumericalSemigroup(std::move(generators));
}

/// Outcome of checking the two-generator identities for S(p, q).
struct BinaryIdentityReport {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  bool prime_powers = false;
  std::uint64_t frobenius = 0;
  IntPolynomial semigroup_poly;
  /// P * (x^p - 1)(x^q - 1) == (x^{pq} - 1)(x - 1)
  bool hilbert_quotient = false;
  /// P == Phi*_{pq}; empty when p, q are not both prime powers.
  std::optional<bool> equals_unitary_cyclotomic;
  /// P == Phi_{pq}; only checked when p, q are distinct primes.
  std::optional<bool> equals_cyclotomic;
  /// Coefficients of Phi*_{pq} match the membership rule at every index.
  std::optional<bool> coefficient_rule;
  /// Psi*_{pq} == -1 - ... - x^{a-1} + x^b + ... + x^{a+b-1}, a < b.
  std::optional<bool> inverse_closed_form;
  bool sylvester = false;
  bool ok = false;
};

/// Throws PreconditionUnmet unless p, q > 1 are coprime, and
/// IdentityViolation naming the first failing identity and index.
BinaryIdentityReport verify_binary_identities(std::uint64_t p, std::uint64_t q);

/// Non-throwing core of verify_binary_identities; `failure` receives the
/// first violation message when ok is false.
BinaryIdentityReport check_binary_identities(std::uint64_t p, std::uint64_t q, std::string* failure = nullptr);

}  // namespace unicyclo::semigroup
