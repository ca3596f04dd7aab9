#pragma once

// Dense exact-integer polynomials and truncated power series.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace unicyclo {

using Integer = boost::multiprecision::cpp_int;

namespace poly {

/// Dense polynomial with arbitrary-precision integer coefficients. Index j
/// holds the coefficient of x^j; the last stored coefficient is non-zero, so
/// the zero polynomial is the empty sequence and has degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  static IntPolynomial from_int64(std::span<const std::int64_t> coeffs);
  static IntPolynomial constant(Integer c);
  /// c * x^k
  static IntPolynomial monomial(Integer c, std::size_t k);
  /// x^d - 1
  static IntPolynomial binomial(std::uint64_t d);

  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::size_t size() const noexcept { return coeffs_.size(); }

  /// Coefficient of x^j; zero beyond the degree.
  Integer coefficient(std::size_t j) const;
  std::span<const Integer> coefficients() const noexcept { return coeffs_; }

  /// f(x^k) for k >= 1.
  IntPolynomial substitute_power(std::uint64_t k) const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

IntPolynomial operator+(const IntPolynomial& f, const IntPolynomial& g);
IntPolynomial operator-(const IntPolynomial& f, const IntPolynomial& g);
IntPolynomial operator-(const IntPolynomial& f);
IntPolynomial mul(const IntPolynomial& f, const IntPolynomial& g);
inline IntPolynomial operator*(const IntPolynomial& f, const IntPolynomial& g) { return mul(f, g); }

/// f * (x^d - 1), d >= 1.
IntPolynomial mul_binomial(const IntPolynomial& f, std::uint64_t d);
/// f / (x^d - 1); throws NonExactDivision on a non-zero remainder.
IntPolynomial div_binomial_exact(const IntPolynomial& f, std::uint64_t d);

inline long degree(const IntPolynomial& f) { return f.degree(); }
inline Integer coefficient(const IntPolynomial& f, std::size_t j) { return f.coefficient(j); }
/// Largest absolute coefficient; 0 for the zero polynomial.
Integer height(const IntPolynomial& f);
/// The set of coefficients over 0..deg f (includes 0 when an interior
/// coefficient vanishes); empty for the zero polynomial.
std::set<Integer> coeff_set(const IntPolynomial& f);
bool is_flat(const IntPolynomial& f);

/// Power series modulo x^order with exact integer coefficients.
class TruncatedSeries {
 public:
  /// The zero series of the given order (order >= 1).
  explicit TruncatedSeries(std::size_t order);
  TruncatedSeries(std::size_t order, std::vector<Integer> coeffs);

  static TruncatedSeries one(std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size(); }
  const Integer& operator[](std::size_t j) const { return coeffs_.at(j); }
  Integer& operator[](std::size_t j) { return coeffs_.at(j); }
  std::span<const Integer> coefficients() const noexcept { return coeffs_; }

  /// Truncates into a polynomial (drops trailing zeros).
  IntPolynomial to_polynomial() const { return IntPolynomial(coeffs_); }

  /// In-place multiply by (1 - x^d), d >= 1.
  void mul_one_minus_power(std::uint64_t d);
  /// In-place multiply by 1/(1 - x^d) = 1 + x^d + x^2d + ..., d >= 1.
  void div_one_minus_power(std::uint64_t d);

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Integer> coeffs_;
};

TruncatedSeries series_from(const IntPolynomial& f, std::size_t order);
/// Throws InvalidArgument when the orders differ.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a);
/// Throws NonUnitConstantTerm unless a[0] is +1 or -1.
TruncatedSeries series_inverse(const TruncatedSeries& a);

}  // namespace poly
}  // namespace unicyclo
