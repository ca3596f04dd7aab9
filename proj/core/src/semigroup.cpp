#include "unicyclo/semigroup.hpp"

#include <algorithm>
#include <numeric>

#include "unicyclo/arith.hpp"
#include "unicyclo/cyclotomic.hpp"
#include "unicyclo/error.hpp"

namespace unicyclo::semigroup {

namespace {

std::vector<bool> membership(const std::vector<std::uint64_t>& gens, std::uint64_t bound) {
  std::vector<bool> member(bound, false);
  member[0] = true;
  for (std::uint64_t k = 1; k < bound; ++k) {
    for (std::uint64_t g : gens) {
      if (g > k) break;
      if (member[k - g]) {
        member[k] = true;
        break;
      }
    }
  }
  return member;
}

// Start of the first run of `len` consecutive members, if the table has one.
std::optional<std::uint64_t> run_start(const std::vector<bool>& member, std::uint64_t len) {
  std::uint64_t run = 0;
  for (std::uint64_t k = 0; k < member.size(); ++k) {
    run = member[k] ? run + 1 : 0;
    if (run == len) return k + 1 - len;
  }
  return std::nullopt;
}

}  // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<std::uint64_t> generators) {
  if (generators.empty()) throw InvalidArgument("a semigroup needs at least one generator");
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  if (generators.front() < 2) throw InvalidArgument("semigroup generators must be >= 2");
  std::uint64_t g = 0;
  for (std::uint64_t a : generators) g = std::gcd(g, a);
  if (g != 1) throw NotNumerical("generators have gcd " + std::to_string(g) + "; the complement is infinite");
  generators_ = std::move(generators);

  const std::uint64_t smallest = generators_.front();
  const std::uint64_t largest = generators_.back();
  if (generators_.size() == 2) {
    member_ = membership(generators_, arith::checked_mul(smallest, largest));
  } else {
    // Once `smallest` consecutive integers are members, every larger one is
    // reached by adding the smallest generator.
    std::uint64_t bound = 2 * largest;
    for (;;) {
      member_ = membership(generators_, bound);
      if (auto start = run_start(member_, smallest)) {
        const std::uint64_t needed = *start + largest;
        if (needed > bound) member_ = membership(generators_, needed);
        break;
      }
      bound = arith::checked_mul(bound, 2);
    }
  }
  for (std::uint64_t k = 0; k < member_.size(); ++k) {
    if (!member_[k]) gaps_.push_back(k);
  }
}

IntPolynomial NumericalSemigroup::polynomial() const {
  // 1 + (x - 1) * sum_{gaps} x^s
  std::vector<Integer> c(frobenius() + 2);
  c[0] = 1;
  for (std::uint64_t s : gaps_) {
    c[s + 1] += 1;
    c[s] -= 1;
  }
  return IntPolynomial(std::move(c));
}

TruncatedSeries NumericalSemigroup::hilbert_series(std::size_t order) const {
  TruncatedSeries h(order);
  for (std::size_t k = 0; k < order; ++k) h[k] = contains(k) ? 1 : 0;
  return h;
}

BinaryIdentityReport check_binary_identities(std::uint64_t p, std::uint64_t q, std::string* failure) {
  if (p < 2 || q < 2) throw PreconditionUnmet("binary identities need p, q > 1");
  if (arith::gcd(p, q) != 1) {
    throw PreconditionUnmet("binary identities need coprime p, q; gcd(" + std::to_string(p) + ", " +
                            std::to_string(q) + ") = " + std::to_string(arith::gcd(p, q)));
  }
  const std::uint64_t pq = arith::checked_mul(p, q);
  auto fail = [&](BinaryIdentityReport& r, std::string msg) {
    if (r.ok && failure) *failure = std::move(msg);
    r.ok = false;
  };

  BinaryIdentityReport r;
  r.p = p;
  r.q = q;
  r.ok = true;
  const NumericalSemigroup s({p, q});
  r.frobenius = s.frobenius();
  r.semigroup_poly = s.polynomial();

  const auto lhs = poly::mul_binomial(poly::mul_binomial(r.semigroup_poly, p), q);
  const auto rhs = poly::mul_binomial(IntPolynomial::binomial(pq), 1);
  r.hilbert_quotient = lhs == rhs;
  if (!r.hilbert_quotient) {
    long j = 0;
    while (lhs.coefficient(j) == rhs.coefficient(j)) ++j;
    fail(r, "P_S(x)(x^p-1)(x^q-1) != (x^pq-1)(x-1) at index " + std::to_string(j));
  }

  r.sylvester = r.frobenius == pq - p - q && r.semigroup_poly.degree() == static_cast<long>(r.frobenius) + 1;
  if (!r.sylvester) fail(r, "F(S(p,q)) != pq - p - q = deg(P) - 1");

  r.prime_powers = arith::is_prime_power(p) && arith::is_prime_power(q);
  if (arith::is_prime(p) && arith::is_prime(q)) {
    r.equals_cyclotomic = r.semigroup_poly == cyclo::cyclotomic(pq);
    if (!*r.equals_cyclotomic) fail(r, "P_S != Phi_pq");
  }
  if (r.prime_powers) {
    const auto phi = cyclo::unitary_cyclotomic(pq);
    r.equals_unitary_cyclotomic = r.semigroup_poly == phi;
    if (!*r.equals_unitary_cyclotomic) fail(r, "P_S != Phi*_pq");

    r.coefficient_rule = true;
    for (std::uint64_t k = 0; k <= static_cast<std::uint64_t>(phi.degree()) + 1; ++k) {
      const bool in = s.contains(k);
      const bool prev_in = k > 0 && s.contains(k - 1);
      const int predicted = (in && !prev_in) ? 1 : (!in && prev_in) ? -1 : 0;
      if (phi.coefficient(k) != predicted) {
        r.coefficient_rule = false;
        fail(r, "a*_pq(k) membership rule fails at k = " + std::to_string(k));
        break;
      }
    }

    const std::uint64_t a = std::min(p, q);
    const std::uint64_t b = std::max(p, q);
    std::vector<Integer> closed(a + b);
    for (std::uint64_t i = 0; i < a; ++i) closed[i] -= 1;
    for (std::uint64_t i = b; i < a + b; ++i) closed[i] += 1;
    const auto psi = cyclo::inverse_unitary_cyclotomic(pq);
    r.inverse_closed_form = psi == IntPolynomial(std::move(closed));
    if (!*r.inverse_closed_form) fail(r, "Psi*_pq does not match its closed form");
  }
  return r;
}

BinaryIdentityReport verify_binary_identities(std::uint64_t p, std::uint64_t q) {
  std::string failure;
  auto report = check_binary_identities(p, q, &failure);
  if (!report.ok) throw IdentityViolation(failure);
  return report;
}

}  // namespace unicyclo::semigroup
