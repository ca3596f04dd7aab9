#include "unicyclo/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "unicyclo/error.hpp"

namespace unicyclo::poly {

namespace {

Integer max_abs(std::span<const Integer> c) {
  Integer m = 0;
  for (const auto& v : c) {
    const Integer a = abs(v);
    if (a > m) m = a;
  }
  return m;
}

std::size_t count_nonzero(std::span<const Integer> c) {
  return static_cast<std::size_t>(std::count_if(c.begin(), c.end(), [](const Integer& v) { return !v.is_zero(); }));
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::from_int64(std::span<const std::int64_t> coeffs) {
  std::vector<Integer> c;
  c.reserve(coeffs.size());
  for (std::int64_t v : coeffs) c.emplace_back(v);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::constant(Integer c) { return IntPolynomial(std::vector<Integer>{std::move(c)}); }

IntPolynomial IntPolynomial::monomial(Integer c, std::size_t k) {
  std::vector<Integer> v(k + 1);
  v[k] = std::move(c);
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::binomial(std::uint64_t d) {
  if (d == 0) throw InvalidArgument("binomial x^d - 1 requires d >= 1");
  std::vector<Integer> v(d + 1);
  v[0] = -1;
  v[d] = 1;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Integer IntPolynomial::coefficient(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : Integer(0); }

IntPolynomial IntPolynomial::substitute_power(std::uint64_t k) const {
  if (k == 0) throw InvalidArgument("substitute_power requires k >= 1");
  if (is_zero()) return {};
  std::vector<Integer> v((coeffs_.size() - 1) * k + 1);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) v[j * k] = coeffs_[j];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator+(const IntPolynomial& f, const IntPolynomial& g) {
  std::vector<Integer> v(std::max(f.size(), g.size()));
  for (std::size_t j = 0; j < f.size(); ++j) v[j] += f.coefficients()[j];
  for (std::size_t j = 0; j < g.size(); ++j) v[j] += g.coefficients()[j];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& f) {
  std::vector<Integer> v(f.coefficients().begin(), f.coefficients().end());
  for (auto& c : v) c = -c;
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& f, const IntPolynomial& g) { return f + (-g); }

IntPolynomial mul(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() || g.is_zero()) return {};
  // Iterate over the non-zero terms of the sparser factor.
  const bool swap = count_nonzero(f.coefficients()) < count_nonzero(g.coefficients());
  const auto dense = swap ? g.coefficients() : f.coefficients();
  const auto sparse = swap ? f.coefficients() : g.coefficients();
  const std::size_t out_len = dense.size() + sparse.size() - 1;

  const Integer bound = max_abs(dense) * max_abs(sparse) * Integer(std::min(dense.size(), sparse.size()));
  if (bound <= Integer(std::numeric_limits<std::int64_t>::max())) {
    std::vector<std::int64_t> d(dense.size());
    for (std::size_t i = 0; i < dense.size(); ++i) d[i] = dense[i].convert_to<std::int64_t>();
    std::vector<std::int64_t> acc(out_len, 0);
    for (std::size_t j = 0; j < sparse.size(); ++j) {
      if (sparse[j].is_zero()) continue;
      const std::int64_t s = sparse[j].convert_to<std::int64_t>();
      std::int64_t* out = acc.data() + j;
      for (std::size_t i = 0; i < d.size(); ++i) out[i] += s * d[i];
    }
    return IntPolynomial::from_int64(acc);
  }

  std::vector<Integer> acc(out_len);
  for (std::size_t j = 0; j < sparse.size(); ++j) {
    if (sparse[j].is_zero()) continue;
    for (std::size_t i = 0; i < dense.size(); ++i) {
      if (!dense[i].is_zero()) acc[i + j] += sparse[j] * dense[i];
    }
  }
  return IntPolynomial(std::move(acc));
}

IntPolynomial mul_binomial(const IntPolynomial& f, std::uint64_t d) {
  if (d == 0) throw InvalidArgument("mul_binomial requires d >= 1");
  if (f.is_zero()) return {};
  const auto c = f.coefficients();
  std::vector<Integer> v(c.size() + d);
  for (std::size_t j = 0; j < c.size(); ++j) {
    v[j] -= c[j];
    v[j + d] += c[j];
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial div_binomial_exact(const IntPolynomial& f, std::uint64_t d) {
  if (d == 0) throw InvalidArgument("div_binomial_exact requires d >= 1");
  if (f.is_zero()) return {};
  const auto c = f.coefficients();
  if (c.size() <= d) throw NonExactDivision(d, "degree " + std::to_string(f.degree()) + " is below the divisor");
  // f = g * (x^d - 1) gives f_j = g_{j-d} - g_j; solve upward from j = 0.
  const std::size_t g_len = c.size() - d;
  std::vector<Integer> g(g_len);
  for (std::size_t j = 0; j < g_len; ++j) {
    g[j] = -c[j];
    if (j >= d) g[j] += g[j - d];
  }
  for (std::size_t j = g_len; j < c.size(); ++j) {
    const Integer expected = (j >= d && j - d < g_len) ? g[j - d] : Integer(0);
    if (c[j] != expected) {
      throw NonExactDivision(d, "remainder is non-zero at x^" + std::to_string(j - g_len));
    }
  }
  return IntPolynomial(std::move(g));
}

Integer height(const IntPolynomial& f) { return max_abs(f.coefficients()); }

std::set<Integer> coeff_set(const IntPolynomial& f) {
  return std::set<Integer>(f.coefficients().begin(), f.coefficients().end());
}

bool is_flat(const IntPolynomial& f) { return height(f) <= 1; }

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order) {
  if (order == 0) throw InvalidArgument("series order must be at least 1");
}

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  if (order == 0) throw InvalidArgument("series order must be at least 1");
  if (coeffs_.size() > order) throw InvalidArgument("more coefficients than the series order");
  coeffs_.resize(order);
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

void TruncatedSeries::mul_one_minus_power(std::uint64_t d) {
  if (d == 0) throw InvalidArgument("mul_one_minus_power requires d >= 1");
  if (d >= coeffs_.size()) return;
  for (std::size_t j = coeffs_.size(); j-- > d;) coeffs_[j] -= coeffs_[j - d];
}

void TruncatedSeries::div_one_minus_power(std::uint64_t d) {
  if (d == 0) throw InvalidArgument("div_one_minus_power requires d >= 1");
  for (std::size_t j = d; j < coeffs_.size(); ++j) coeffs_[j] += coeffs_[j - d];
}

TruncatedSeries series_from(const IntPolynomial& f, std::size_t order) {
  const auto c = f.coefficients();
  const std::size_t take = std::min(order, c.size());
  return TruncatedSeries(order, std::vector<Integer>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(take)));
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) {
    throw InvalidArgument("series orders differ: " + std::to_string(a.order()) + " vs " + std::to_string(b.order()));
  }
  const std::size_t n = a.order();
  std::vector<Integer> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
  }
  return TruncatedSeries(n, std::move(out));
}

TruncatedSeries operator-(const TruncatedSeries& a) {
  std::vector<Integer> v(a.coefficients().begin(), a.coefficients().end());
  for (auto& c : v) c = -c;
  return TruncatedSeries(a.order(), std::move(v));
}

TruncatedSeries series_inverse(const TruncatedSeries& a) {
  const Integer& a0 = a[0];
  if (a0 != 1 && a0 != -1) throw NonUnitConstantTerm("series constant term must be +1 or -1");
  const std::size_t n = a.order();
  std::size_t last = 0;  // highest non-zero index of a
  for (std::size_t i = 0; i < n; ++i) {
    if (!a[i].is_zero()) last = i;
  }
  std::vector<Integer> b(n);
  b[0] = a0;
  for (std::size_t k = 1; k < n; ++k) {
    Integer s = 0;
    for (std::size_t i = 1; i <= std::min(k, last); ++i) {
      if (!a[i].is_zero()) s += a[i] * b[k - i];
    }
    b[k] = (a0 == 1) ? Integer(-s) : s;
  }
  return TruncatedSeries(n, std::move(b));
}

}  // namespace unicyclo::poly
