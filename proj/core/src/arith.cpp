#include "unicyclo/arith.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "unicyclo/error.hpp"

namespace unicyclo::arith {

namespace {

const std::vector<std::uint32_t>& sieve_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kSieveBound + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 2; i <= kSieveBound; ++i) {
      if (composite[i]) continue;
      out.push_back(static_cast<std::uint32_t>(i));
      for (std::uint64_t j = i * i; j <= kSieveBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

__extension__ typedef unsigned __int128 uint128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// The first twelve primes as bases make Miller-Rabin exact below 3.3e24.
bool miller_rabin(std::uint64_t n) {
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (a % n == 0) continue;
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::uint64_t ipow(std::uint64_t p, unsigned e) {
  std::uint64_t v = 1;
  for (unsigned i = 0; i < e; ++i) v = checked_mul(v, p);
  return v;
}

}  // namespace

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw InvalidArgument("integer overflow: " + std::to_string(a) + " * " + std::to_string(b));
  }
  return out;
}

std::uint64_t PrimePower::value() const { return ipow(prime, exponent); }

Factorization Factorization::from_parts(std::vector<PrimePower> parts) {
  Factorization f;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& pp = parts[i];
    if (pp.exponent == 0) throw InvalidArgument("factorization exponent must be positive");
    if (!is_prime(pp.prime)) throw InvalidArgument(std::to_string(pp.prime) + " is not prime");
    if (i > 0 && parts[i - 1].prime >= pp.prime) {
      throw InvalidArgument("factorization primes must be strictly increasing");
    }
    f.n_ = checked_mul(f.n_, pp.value());
  }
  f.parts_ = std::move(parts);
  return f;
}

std::uint64_t Factorization::kappa() const {
  std::uint64_t k = 1;
  for (const auto& pp : parts_) k *= pp.prime;
  return k;
}

int Factorization::mobius() const {
  if (!is_square_free()) return 0;
  return mobius_star();
}

bool Factorization::is_square_free() const {
  return std::all_of(parts_.begin(), parts_.end(), [](const PrimePower& pp) { return pp.exponent == 1; });
}

std::uint64_t Factorization::euler_phi() const {
  std::uint64_t phi = 1;
  for (const auto& pp : parts_) phi *= ipow(pp.prime, pp.exponent - 1) * (pp.prime - 1);
  return phi;
}

std::uint64_t Factorization::unitary_phi() const {
  std::uint64_t phi = 1;
  for (const auto& pp : parts_) phi *= pp.value() - 1;
  return phi;
}

std::vector<std::uint64_t> Factorization::blocks() const {
  std::vector<std::uint64_t> out;
  out.reserve(parts_.size());
  for (const auto& pp : parts_) out.push_back(pp.value());
  return out;
}

std::vector<std::uint64_t> Factorization::divisors() const {
  std::vector<std::uint64_t> out{1};
  for (const auto& pp : parts_) {
    const std::size_t base = out.size();
    std::uint64_t power = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> Factorization::unitary_divisors() const {
  std::vector<std::uint64_t> out{1};
  for (const auto& pp : parts_) {
    const std::uint64_t block = pp.value();
    const std::size_t base = out.size();
    for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * block);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Factorization Factorization::coprime_product(const Factorization& other) const {
  std::vector<PrimePower> merged;
  merged.reserve(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(), std::back_inserter(merged),
             [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  for (std::size_t i = 1; i < merged.size(); ++i) {
    if (merged[i - 1].prime == merged[i].prime) {
      throw InvalidArgument("coprime_product: factors share the prime " + std::to_string(merged[i].prime));
    }
  }
  Factorization f;
  f.n_ = checked_mul(n_, other.n_);
  f.parts_ = std::move(merged);
  return f;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("cannot factorize 0");
  std::vector<PrimePower> parts;
  std::uint64_t rest = n;
  for (std::uint64_t p : sieve_primes()) {
    if (p * p > rest) break;
    if (rest % p != 0) continue;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    parts.push_back({p, e});
  }
  if (rest > 1) {
    const std::uint64_t last = sieve_primes().back();
    if (rest > last * last && !is_prime(rest)) {
      throw InvalidArgument("cofactor " + std::to_string(rest) + " of " + std::to_string(n) +
                            " is composite with no prime factor below the sieve bound");
    }
    parts.push_back({rest, 1});
  }
  return Factorization::from_parts(std::move(parts));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;
  return miller_rabin(n);
}

std::uint64_t next_prime(std::uint64_t n) {
  std::uint64_t c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

bool is_prime_power(std::uint64_t n) { return n >= 2 && factorize(n).is_prime_power(); }

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool pairwise_coprime(std::span<const std::uint64_t> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (gcd(values[i], values[j]) != 1) return false;
    }
  }
  return true;
}

int mobius(std::uint64_t n) { return factorize(n).mobius(); }
int mobius_star(std::uint64_t n) { return factorize(n).mobius_star(); }
unsigned omega(std::uint64_t n) { return factorize(n).omega(); }
std::uint64_t kappa(std::uint64_t n) { return factorize(n).kappa(); }
std::uint64_t euler_phi(std::uint64_t n) { return factorize(n).euler_phi(); }
std::uint64_t unitary_phi(std::uint64_t n) { return factorize(n).unitary_phi(); }
std::vector<std::uint64_t> divisors(std::uint64_t n) { return factorize(n).divisors(); }
std::vector<std::uint64_t> unitary_divisors(std::uint64_t n) { return factorize(n).unitary_divisors(); }

bool is_unitary_divisor(std::uint64_t d, std::uint64_t n) {
  if (d == 0 || n == 0 || n % d != 0) return false;
  return gcd(d, n / d) == 1;
}

std::uint64_t unitary_gcd(std::uint64_t j, std::uint64_t n) {
  if (n == 0) throw InvalidArgument("unitary_gcd requires n >= 1");
  if (j == 0) return n;
  // Unitary divisors are products of whole prime-power blocks, so the maximum
  // is the product of the blocks that divide j.
  const Factorization f = factorize(n);
  std::uint64_t d = 1;
  for (const auto& pp : f.parts()) {
    const std::uint64_t block = pp.value();
    if (j % block == 0) d *= block;
  }
  return d;
}

}  // namespace unicyclo::arith
