#pragma once

// Cyclotomic, unitary cyclotomic, and inverse (unitary) cyclotomic
// polynomials, plus inclusion-exclusion polynomials over a coprime basis.

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "unicyclo/arith.hpp"
#include "unicyclo/polynomial.hpp"

namespace unicyclo::cyclo {

using poly::IntPolynomial;
using poly::TruncatedSeries;

enum class PolyFamily { Phi, Psi, PhiStar, PsiStar };

inline constexpr PolyFamily kAllFamilies[] = {PolyFamily::Phi, PolyFamily::Psi, PolyFamily::PhiStar,
                                              PolyFamily::PsiStar};

/// "phi", "psi", "phi-star", "psi-star".
std::string_view to_string(PolyFamily family);
/// Inverse of to_string; throws InvalidArgument on an unknown name.
PolyFamily parse_family(std::string_view name);

/// A quotient prod (x^a - 1) / prod (x^b - 1) that is known to be a polynomial.
struct BinomialProduct {
  std::vector<std::uint64_t> numerator;
  std::vector<std::uint64_t> denominator;
};

/// The binomial product formula for a family member:
///   Phi_n     = prod_{d | n}  (x^{n/d} - 1)^{mu(d)}
///   Phi*_n    = prod_{d || n} (x^{n/d} - 1)^{mu*(d)}
///   Psi_n, Psi*_n: the same with exponents negated and the d = 1 factor dropped.
BinomialProduct product_form(PolyFamily family, const arith::Factorization& n);

enum class ExpandMode {
  /// 64-bit arithmetic with overflow detection, falling back to big integers.
  Auto,
  /// Big-integer binomial multiply/divide only.
  BigOnly,
};

/// Applies every numerator factor, then divides by every denominator factor.
/// Throws NonExactDivision if some division leaves a remainder.
IntPolynomial expand(const BinomialProduct& product, ExpandMode mode = ExpandMode::Auto);

/// 64-bit expansion; nullopt on overflow. Dense coefficients, trailing zeros
/// removed. Throws NonExactDivision like expand().
std::optional<std::vector<std::int64_t>> expand_int64(const BinomialProduct& product);

IntPolynomial cyclotomic(std::uint64_t n);
IntPolynomial inverse_cyclotomic(std::uint64_t n);
/// Default (binomial product) algorithm.
IntPolynomial unitary_cyclotomic(std::uint64_t n);
IntPolynomial inverse_unitary_cyclotomic(std::uint64_t n);

/// Unitary cyclotomic polynomial from its block-divisor binomial product.
IntPolynomial unitary_cyclotomic_binomial(std::uint64_t n, ExpandMode mode = ExpandMode::Auto);
/// Unitary cyclotomic polynomial as prod Phi_d over d | n with kappa(d) = kappa(n).
IntPolynomial unitary_cyclotomic_kernel(std::uint64_t n);

/// Memoized family member. Values with n above the cache bound are computed
/// and returned without being stored. Safe to call concurrently.
std::shared_ptr<const IntPolynomial> family_polynomial(PolyFamily family, std::uint64_t n);
inline IntPolynomial polynomial(PolyFamily family, std::uint64_t n) { return *family_polynomial(family, n); }

/// Largest n memoized. Initialized from UNICYCLO_CACHE_BOUND when set.
std::uint64_t cache_bound();
void set_cache_bound(std::uint64_t bound);
void clear_cache();

/// Pairwise-coprime integers r_i >= 2, kept ascending.
class CoprimeBasis {
 public:
  /// Throws InvalidBasis unless every element is >= 2 and all pairs are coprime.
  explicit CoprimeBasis(std::vector<std::uint64_t> rho);
  /// Prime-power blocks of n.
  static CoprimeBasis from_factorization(const arith::Factorization& n);

  const std::vector<std::uint64_t>& elements() const noexcept { return rho_; }
  /// n_0, the product of all elements.
  std::uint64_t product() const noexcept { return n0_; }

 private:
  std::vector<std::uint64_t> rho_;
  std::uint64_t n0_ = 1;
};

/// Q_rho: prod over subsets T of (x^{n_0 / prod_T r_i} - 1)^{(-1)^{|T|}}.
BinomialProduct inclusion_exclusion_form(const CoprimeBasis& basis);
IntPolynomial inclusion_exclusion(const CoprimeBasis& basis);

/// Taylor coefficients of 1 / Phi*_m(x) up to x^{order - 1}.
TruncatedSeries u_star_expansion(std::uint64_t m, std::size_t order);

}  // namespace unicyclo::cyclo
