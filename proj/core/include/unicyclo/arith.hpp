#pragma once

// Multiplicative arithmetic: factorization, Moebius functions, totients, and
// unitary (block) divisors.

#include <cstdint>
#include <span>
#include <vector>

namespace unicyclo::arith {

/// Upper limit of the trial-division prime sieve.
inline constexpr std::uint64_t kSieveBound = 1'000'000;

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  std::uint64_t value() const;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical factorization n = prod p^e with strictly increasing primes.
class Factorization {
 public:
  /// Factorization of 1.
  Factorization() = default;

  /// Validates the parts (primality, ordering, exponents) and that n fits in
  /// 64 bits. Throws InvalidArgument otherwise.
  static Factorization from_parts(std::vector<PrimePower> parts);

  std::uint64_t n() const noexcept { return n_; }
  std::span<const PrimePower> parts() const noexcept { return parts_; }

  /// Number of distinct prime factors.
  unsigned omega() const noexcept { return static_cast<unsigned>(parts_.size()); }
  /// Square-free kernel.
  std::uint64_t kappa() const;
  int mobius() const;
  int mobius_star() const { return (parts_.size() % 2 == 0) ? 1 : -1; }
  std::uint64_t euler_phi() const;
  std::uint64_t unitary_phi() const;
  bool is_square_free() const;
  bool is_prime_power() const { return parts_.size() == 1; }

  /// The prime-power blocks p^e, ascending by prime.
  std::vector<std::uint64_t> blocks() const;
  /// All divisors, ascending.
  std::vector<std::uint64_t> divisors() const;
  /// All unitary divisors, ascending; there are exactly 2^omega of them.
  std::vector<std::uint64_t> unitary_divisors() const;

  /// Factorization of n * other; the two must be coprime.
  Factorization coprime_product(const Factorization& other) const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::uint64_t n_ = 1;
  std::vector<PrimePower> parts_;
};

/// Throws InvalidArgument for n == 0, and for the (out of scope) case of a
/// composite cofactor with no prime factor below the sieve bound.
Factorization factorize(std::uint64_t n);

/// Deterministic for every 64-bit input.
bool is_prime(std::uint64_t n);
/// Smallest prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n);
bool is_prime_power(std::uint64_t n);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
bool pairwise_coprime(std::span<const std::uint64_t> values);

int mobius(std::uint64_t n);
int mobius_star(std::uint64_t n);
unsigned omega(std::uint64_t n);
std::uint64_t kappa(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t unitary_phi(std::uint64_t n);

std::vector<std::uint64_t> divisors(std::uint64_t n);
std::vector<std::uint64_t> unitary_divisors(std::uint64_t n);
bool is_unitary_divisor(std::uint64_t d, std::uint64_t n);

/// (j, n)_* : the largest unitary divisor of n that divides j. (0, n)_* = n.
std::uint64_t unitary_gcd(std::uint64_t j, std::uint64_t n);

/// a * b, throwing InvalidArgument on 64-bit overflow.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

}  // namespace unicyclo::arith
