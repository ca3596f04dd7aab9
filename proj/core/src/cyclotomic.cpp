#include "unicyclo/cyclotomic.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>

#include "unicyclo/error.hpp"

namespace unicyclo::cyclo {

namespace {

constexpr std::uint64_t kDefaultCacheBound = 1000;

std::uint64_t initial_cache_bound() {
  if (const char* env = std::getenv("UNICYCLO_CACHE_BOUND")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      // fall through to the default
    }
  }
  return kDefaultCacheBound;
}

class PolynomialCache {
 public:
  std::shared_ptr<const IntPolynomial> find(PolyFamily family, std::uint64_t n) const {
    std::shared_lock lock(mutex_);
    auto it = entries_.find({family, n});
    return it == entries_.end() ? nullptr : it->second;
  }

  std::shared_ptr<const IntPolynomial> insert(PolyFamily family, std::uint64_t n,
                                              std::shared_ptr<const IntPolynomial> value) {
    std::unique_lock lock(mutex_);
    auto [it, inserted] = entries_.try_emplace({family, n}, std::move(value));
    return it->second;
  }

  void clear() {
    std::unique_lock lock(mutex_);
    entries_.clear();
  }

  std::atomic<std::uint64_t> bound{initial_cache_bound()};

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::pair<PolyFamily, std::uint64_t>, std::shared_ptr<const IntPolynomial>> entries_;
};

PolynomialCache& cache() {
  static PolynomialCache instance;
  return instance;
}

// v <- v * (x^d - 1), growing v by d.
bool mul_binomial_inplace(std::vector<std::int64_t>& v, std::uint64_t d) {
  const std::size_t old_len = v.size();
  v.resize(old_len + d, 0);
  for (std::size_t j = v.size(); j-- > 0;) {
    const std::int64_t shifted = j >= d ? v[j - d] : 0;
    const std::int64_t own = j < old_len ? v[j] : 0;
    if (__builtin_sub_overflow(shifted, own, &v[j])) return false;
  }
  return true;
}

// v <- v / (x^d - 1); throws NonExactDivision on a remainder.
bool div_binomial_inplace(std::vector<std::int64_t>& v, std::uint64_t d) {
  if (v.size() <= d) throw NonExactDivision(d, "degree is below the divisor");
  const std::size_t g_len = v.size() - d;
  for (std::size_t j = 0; j < g_len; ++j) {
    const std::int64_t prev = j >= d ? v[j - d] : 0;
    if (__builtin_sub_overflow(prev, v[j], &v[j])) return false;
  }
  for (std::size_t j = g_len; j < v.size(); ++j) {
    const std::int64_t expected = j >= d ? v[j - d] : 0;
    if (v[j] != expected) throw NonExactDivision(d, "remainder is non-zero at x^" + std::to_string(j - g_len));
  }
  v.resize(g_len);
  return true;
}

IntPolynomial compute(PolyFamily family, std::uint64_t n) {
  return expand(product_form(family, arith::factorize(n)));
}

}  // namespace

std::string_view to_string(PolyFamily family) {
  switch (family) {
    case PolyFamily::Phi:
      return "phi";
    case PolyFamily::Psi:
      return "psi";
    case PolyFamily::PhiStar:
      return "phi-star";
    case PolyFamily::PsiStar:
      return "psi-star";
  }
  return "?";
}

PolyFamily parse_family(std::string_view name) {
  for (PolyFamily f : kAllFamilies) {
    if (to_string(f) == name) return f;
  }
  throw InvalidArgument("unknown polynomial family '" + std::string(name) + "'");
}

BinomialProduct product_form(PolyFamily family, const arith::Factorization& n) {
  const bool unitary = family == PolyFamily::PhiStar || family == PolyFamily::PsiStar;
  const bool inverse = family == PolyFamily::Psi || family == PolyFamily::PsiStar;
  BinomialProduct out;
  // For the ordinary family only square-free d contribute; they are exactly
  // the products of distinct primes, so enumerate subsets of primes (or of
  // prime-power blocks for the unitary family).
  std::vector<std::uint64_t> units;
  for (const auto& pp : n.parts()) units.push_back(unitary ? pp.value() : pp.prime);
  const std::size_t subsets = std::size_t{1} << units.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    if (inverse && mask == 0) continue;
    std::uint64_t d = 1;
    for (std::size_t i = 0; i < units.size(); ++i) {
      if (mask & (std::size_t{1} << i)) d *= units[i];
    }
    const bool even = std::popcount(mask) % 2 == 0;
    const bool in_numerator = even != inverse;
    (in_numerator ? out.numerator : out.denominator).push_back(n.n() / d);
  }
  return out;
}

std::optional<std::vector<std::int64_t>> expand_int64(const BinomialProduct& product) {
  std::vector<std::int64_t> v{1};
  for (std::uint64_t d : product.numerator) {
    if (!mul_binomial_inplace(v, d)) return std::nullopt;
  }
  for (std::uint64_t d : product.denominator) {
    if (!div_binomial_inplace(v, d)) return std::nullopt;
  }
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

IntPolynomial expand(const BinomialProduct& product, ExpandMode mode) {
  if (mode == ExpandMode::Auto) {
    if (auto small = expand_int64(product)) return IntPolynomial::from_int64(*small);
  }
  IntPolynomial f = IntPolynomial::constant(1);
  for (std::uint64_t d : product.numerator) f = poly::mul_binomial(f, d);
  for (std::uint64_t d : product.denominator) f = poly::div_binomial_exact(f, d);
  return f;
}

IntPolynomial cyclotomic(std::uint64_t n) { return polynomial(PolyFamily::Phi, n); }
IntPolynomial inverse_cyclotomic(std::uint64_t n) { return polynomial(PolyFamily::Psi, n); }
IntPolynomial unitary_cyclotomic(std::uint64_t n) { return polynomial(PolyFamily::PhiStar, n); }
IntPolynomial inverse_unitary_cyclotomic(std::uint64_t n) { return polynomial(PolyFamily::PsiStar, n); }

IntPolynomial unitary_cyclotomic_binomial(std::uint64_t n, ExpandMode mode) {
  return expand(product_form(PolyFamily::PhiStar, arith::factorize(n)), mode);
}

IntPolynomial unitary_cyclotomic_kernel(std::uint64_t n) {
  const auto f = arith::factorize(n);
  const std::uint64_t k = f.kappa();
  std::vector<std::uint64_t> ds;
  for (std::uint64_t d : f.divisors()) {
    if (arith::kappa(d) == k) ds.push_back(d);
  }
  // Largest factor first so each multiply runs over the densest operand once.
  std::reverse(ds.begin(), ds.end());
  IntPolynomial out = IntPolynomial::constant(1);
  for (std::uint64_t d : ds) out = poly::mul(*family_polynomial(PolyFamily::Phi, d), out);
  return out;
}

std::shared_ptr<const IntPolynomial> family_polynomial(PolyFamily family, std::uint64_t n) {
  if (n == 0) throw InvalidArgument("polynomial index must be >= 1");
  auto& c = cache();
  const bool cacheable = n <= c.bound.load();
  if (cacheable) {
    if (auto hit = c.find(family, n)) return hit;
  }
  auto value = std::make_shared<const IntPolynomial>(compute(family, n));
  if (!cacheable) return value;
  return c.insert(family, n, std::move(value));
}

std::uint64_t cache_bound() { return cache().bound.load(); }

void set_cache_bound(std::uint64_t bound) {
  cache().bound.store(bound);
  cache().clear();
}

void clear_cache() { cache().clear(); }

CoprimeBasis::CoprimeBasis(std::vector<std::uint64_t> rho) : rho_(std::move(rho)) {
  std::sort(rho_.begin(), rho_.end());
  for (std::uint64_t r : rho_) {
    if (r < 2) throw InvalidBasis("basis elements must be >= 2, got " + std::to_string(r));
  }
  if (!arith::pairwise_coprime(rho_)) throw InvalidBasis("basis elements must be pairwise coprime");
  for (std::uint64_t r : rho_) n0_ = arith::checked_mul(n0_, r);
}

CoprimeBasis CoprimeBasis::from_factorization(const arith::Factorization& n) { return CoprimeBasis(n.blocks()); }

BinomialProduct inclusion_exclusion_form(const CoprimeBasis& basis) {
  const auto& rho = basis.elements();
  BinomialProduct out;
  const std::size_t subsets = std::size_t{1} << rho.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    std::uint64_t n_t = basis.product();
    for (std::size_t i = 0; i < rho.size(); ++i) {
      if (mask & (std::size_t{1} << i)) n_t /= rho[i];
    }
    (std::popcount(mask) % 2 == 0 ? out.numerator : out.denominator).push_back(n_t);
  }
  return out;
}

IntPolynomial inclusion_exclusion(const CoprimeBasis& basis) { return expand(inclusion_exclusion_form(basis)); }

TruncatedSeries u_star_expansion(std::uint64_t m, std::size_t order) {
  if (m == 0) throw InvalidArgument("u_star_expansion requires m >= 1");
  return poly::series_inverse(poly::series_from(*family_polynomial(PolyFamily::PhiStar, m), order));
}

}  // namespace unicyclo::cyclo
