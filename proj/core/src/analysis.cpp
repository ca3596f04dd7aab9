#include "unicyclo/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "unicyclo/arith.hpp"

namespace unicyclo::analysis {

namespace {

using poly::IntPolynomial;

constexpr std::uint64_t kSearchBlock = 512;

struct Hit {
  std::uint64_t k = 0;
  Integer value;
};

struct IndexScan {
  long degree = -1;
  std::vector<std::optional<Hit>> first;  // slot m - m_min
};

IndexScan scan_index(PolyFamily family, std::uint64_t n, std::uint64_t m_min, std::uint64_t m_max) {
  IndexScan out;
  out.first.resize(m_max - m_min + 1);
  const auto form = cyclo::product_form(family, arith::factorize(n));
  if (auto small = cyclo::expand_int64(form)) {
    out.degree = static_cast<long>(small->size()) - 1;
    for (std::size_t k = 0; k < small->size(); ++k) {
      const std::int64_t v = (*small)[k];
      const std::uint64_t a = static_cast<std::uint64_t>(v < 0 ? -v : v);
      if (a < m_min || a > m_max) continue;
      auto& slot = out.first[a - m_min];
      if (!slot) slot = Hit{k, Integer(v)};
    }
    return out;
  }
  const IntPolynomial f = cyclo::expand(form, cyclo::ExpandMode::BigOnly);
  out.degree = f.degree();
  const auto c = f.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    const Integer a = abs(c[k]);
    if (a < m_min || a > m_max) continue;
    auto& slot = out.first[a.convert_to<std::uint64_t>() - m_min];
    if (!slot) slot = Hit{k, c[k]};
  }
  return out;
}

// Runs body(i) for i in [0, count) on `jobs` threads.
template <class Body>
void parallel_for(std::size_t count, unsigned jobs, Body body) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> workers;
  const unsigned n_workers = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  for (unsigned w = 0; w < n_workers; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  if (error) std::rethrow_exception(error);
}

std::vector<Integer> sorted_set(const IntPolynomial& f) {
  const auto s = poly::coeff_set(f);
  return {s.begin(), s.end()};
}

void require_prime_powers(std::initializer_list<std::uint64_t> values, std::uint64_t at_least) {
  for (std::uint64_t v : values) {
    if (v < at_least || !arith::is_prime_power(v)) {
      throw PreconditionUnmet(std::to_string(v) + " is not a prime power >= " + std::to_string(at_least));
    }
  }
  const std::vector<std::uint64_t> all(values);
  if (!arith::pairwise_coprime(all)) throw PreconditionUnmet("parameters must be pairwise coprime");
}

std::uint64_t product3(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return arith::checked_mul(arith::checked_mul(a, b), c);
}

// Sign e in {+1, -1} with r = e*s (mod pq), or 0 when neither holds.
int congruence_sign(std::uint64_t r, std::uint64_t s, std::uint64_t pq) {
  if (r % pq == s % pq) return 1;
  if ((r + s) % pq == 0) return -1;
  return 0;
}

}  // namespace

RangeExhausted::RangeExhausted(std::uint64_t m, std::uint64_t n_max, std::vector<CoeffRecord> completed)
    : Error("no n <= " + std::to_string(n_max) + " has a coefficient of absolute value " + std::to_string(m)),
      m_(m),
      completed_(std::move(completed)) {}

SearchOutcome search_minimal_n(const SearchOptions& opt) {
  if (opt.m_min < 1 || opt.m_max < opt.m_min) throw InvalidArgument("search needs 1 <= m_min <= m_max");
  const std::size_t slots = opt.m_max - opt.m_min + 1;
  std::vector<std::optional<CoeffRecord>> found(slots);
  std::size_t remaining = slots;

  // Blocks are reduced in ascending n, so the first hit per m is minimal no
  // matter how the block was split across workers.
  for (std::uint64_t start = 1; start <= opt.n_max && remaining > 0; start += kSearchBlock) {
    const std::uint64_t end = std::min(opt.n_max, start + kSearchBlock - 1);
    std::vector<IndexScan> scans(end - start + 1);
    parallel_for(scans.size(), opt.jobs,
                 [&](std::size_t i) { scans[i] = scan_index(opt.family, start + i, opt.m_min, opt.m_max); });
    for (std::size_t i = 0; i < scans.size(); ++i) {
      for (std::size_t s = 0; s < slots; ++s) {
        if (found[s] || !scans[i].first[s]) continue;
        const Hit& h = *scans[i].first[s];
        found[s] = CoeffRecord{opt.m_min + s, start + i, scans[i].degree, h.k, h.value};
        --remaining;
      }
    }
  }

  SearchOutcome out;
  for (std::size_t s = 0; s < slots; ++s) {
    if (!found[s]) {
      out.exhausted_at = opt.m_min + s;
      break;
    }
    out.rows.push_back(*found[s]);
  }
  return out;
}

std::vector<CoeffRecord> minimal_n_table(PolyFamily family, std::uint64_t m_max, std::uint64_t n_max,
                                         unsigned jobs) {
  if (m_max < 2) throw InvalidArgument("minimal_n_table needs m_max >= 2");
  auto outcome = search_minimal_n({family, 2, m_max, n_max, jobs});
  if (outcome.exhausted_at) throw RangeExhausted(*outcome.exhausted_at, n_max, std::move(outcome.rows));
  return std::move(outcome.rows);
}

std::optional<CoeffRecord> record_at(PolyFamily family, std::uint64_t n, std::uint64_t m) {
  const auto f = cyclo::family_polynomial(family, n);
  const auto c = f->coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (abs(c[k]) == m) return CoeffRecord{m, n, f->degree(), k, c[k]};
  }
  return std::nullopt;
}

CoefficientSetReport coefficient_set_check(std::vector<std::uint64_t> blocks) {
  std::sort(blocks.begin(), blocks.end());
  std::uint64_t n = 1;
  for (std::uint64_t b : blocks) {
    if (!arith::is_prime_power(b)) throw PreconditionUnmet(std::to_string(b) + " is not a prime power");
    n = arith::checked_mul(n, b);
  }
  if (!arith::pairwise_coprime(blocks)) throw PreconditionUnmet("blocks must be pairwise coprime");

  CoefficientSetReport r;
  r.blocks = std::move(blocks);
  r.n = n;
  const auto f = cyclo::family_polynomial(PolyFamily::PhiStar, n);
  r.coeff_set = sorted_set(*f);
  r.min = r.coeff_set.front();
  r.max = r.coeff_set.back();
  r.height = poly::height(*f);
  std::size_t idx = 0;
  for (Integer v = r.min; v <= r.max; ++v) {
    if (r.coeff_set[idx] == v) {
      ++idx;
    } else {
      r.missing.push_back(v);
    }
  }
  r.is_consecutive = r.missing.empty();
  return r;
}

CoefficientSetReport ternary_consecutive_check(std::uint64_t p, std::uint64_t q, std::uint64_t r) {
  require_prime_powers({p, q, r}, 3);
  return coefficient_set_check({p, q, r});
}

CongruenceTransferReport congruence_transfer_check(std::uint64_t p, std::uint64_t q, std::uint64_t r,
                                                   std::uint64_t s) {
  require_prime_powers({p, q, r, s}, 3);
  const std::uint64_t top = std::max(p, q);
  if (r <= top || s <= top) throw PreconditionUnmet("congruence transfer needs r, s > max(p, q)");
  const std::uint64_t pq = p * q;
  CongruenceTransferReport rep;
  rep.p = p;
  rep.q = q;
  rep.r = r;
  rep.s = s;
  rep.sign = congruence_sign(r, s, pq);
  if (rep.sign == 0) throw PreconditionUnmet("congruence transfer needs r = +-s (mod pq)");
  rep.set_r = sorted_set(*cyclo::family_polynomial(PolyFamily::PhiStar, product3(p, q, r)));
  rep.set_s = sorted_set(*cyclo::family_polynomial(PolyFamily::PhiStar, product3(p, q, s)));
  std::vector<Integer> expected = rep.set_s;
  if (rep.sign < 0) {
    for (auto& v : expected) v = -v;
    std::sort(expected.begin(), expected.end());
  }
  rep.holds = expected == rep.set_r;
  return rep;
}

HeightJumpReport height_jump_check(std::uint64_t p, std::uint64_t q, std::uint64_t s, std::uint64_t r) {
  require_prime_powers({p, q, s, r}, 3);
  const std::uint64_t top = std::max(p, q);
  if (!(r > top && top > s)) throw PreconditionUnmet("height jump needs r > max(p, q) > s >= 3");
  if (congruence_sign(r, s, p * q) == 0) throw PreconditionUnmet("height jump needs r = +-s (mod pq)");
  HeightJumpReport rep;
  rep.p = p;
  rep.q = q;
  rep.s = s;
  rep.r = r;
  rep.height_s = poly::height(*cyclo::family_polynomial(PolyFamily::PhiStar, product3(p, q, s)));
  rep.height_r = poly::height(*cyclo::family_polynomial(PolyFamily::PhiStar, product3(p, q, r)));
  rep.lower_attained = rep.height_r == rep.height_s;
  rep.upper_attained = rep.height_r == rep.height_s + 1;
  rep.holds = rep.lower_attained || rep.upper_attained;
  return rep;
}

KaplanReport kaplan_flatness_check(std::uint64_t pa, std::uint64_t qb, std::uint64_t r, std::uint64_t c_max) {
  for (std::uint64_t v : {pa, qb}) {
    if (!arith::is_prime_power(v)) throw PreconditionUnmet(std::to_string(v) + " is not a prime power");
  }
  if (!arith::is_prime(r)) throw PreconditionUnmet(std::to_string(r) + " is not prime");
  const std::vector<std::uint64_t> all{pa, qb, r};
  if (!arith::pairwise_coprime(all)) throw PreconditionUnmet("p^a, q^b, r must be pairwise coprime");

  KaplanReport rep;
  rep.pa = pa;
  rep.qb = qb;
  rep.r = r;
  rep.c_max = c_max;
  rep.holds = true;
  const std::uint64_t modulus = pa * qb;
  std::uint64_t rc = 1;
  std::uint64_t residue = 1;
  for (std::uint64_t c = 1; c <= c_max; ++c) {
    rc = arith::checked_mul(rc, r);
    residue = residue * (r % modulus) % modulus;
    int sign = 0;
    if (residue == 1) sign = 1;
    if (residue == modulus - 1) sign = -1;
    if (sign == 0) continue;
    KaplanInstance inst;
    inst.c = c;
    inst.n = product3(pa, qb, rc);
    inst.residue = sign;
    inst.height = poly::height(*cyclo::family_polynomial(PolyFamily::PhiStar, inst.n));
    inst.flat = inst.height <= 1;
    rep.holds = rep.holds && inst.flat;
    rep.instances.push_back(std::move(inst));
  }
  return rep;
}

PsiBoundReport psi_star_ternary_bound_check(std::uint64_t p, std::uint64_t q, std::uint64_t r) {
  require_prime_powers({p, q, r}, 2);
  if (!(p < q && q < r)) throw PreconditionUnmet("psi bound needs p < q < r");
  PsiBoundReport rep;
  rep.p = p;
  rep.q = q;
  rep.r = r;
  const auto psi = cyclo::family_polynomial(PolyFamily::PsiStar, product3(p, q, r));
  const auto phi_pq = cyclo::family_polynomial(PolyFamily::PhiStar, p * q);
  const auto psi_pq = cyclo::family_polynomial(PolyFamily::PsiStar, p * q);
  rep.height = poly::height(*psi);
  rep.bound = (p - 1) * (q - 1) / r + 1;
  rep.height_within_bound = rep.height <= rep.bound;
  rep.bound_within_p_minus_1 = rep.bound <= p - 1;
  rep.factorization_identity = *psi == poly::mul(*phi_pq, psi_pq->substitute_power(r));

  rep.convolution_identity = true;
  const auto a = phi_pq->coefficients();
  const auto c = psi_pq->coefficients();
  for (std::uint64_t k = 0; k <= static_cast<std::uint64_t>(psi->degree()); ++k) {
    Integer sum = 0;
    for (std::uint64_t j = 0; j <= k / r && j < c.size(); ++j) {
      const std::uint64_t idx = k - j * r;
      if (idx < a.size()) sum += a[idx] * c[j];
    }
    if (sum != psi->coefficient(k)) {
      rep.convolution_identity = false;
      break;
    }
  }
  rep.holds = rep.height_within_bound && rep.bound_within_p_minus_1 && rep.factorization_identity &&
              rep.convolution_identity;
  return rep;
}

}  // namespace unicyclo::analysis
