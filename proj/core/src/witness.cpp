#include "unicyclo/witness.hpp"

#include <string>

#include "unicyclo/cyclotomic.hpp"
#include "unicyclo/error.hpp"

namespace unicyclo::witness {

namespace {

arith::Factorization product_of_primes(const std::vector<std::uint64_t>& primes, std::optional<std::uint64_t> extra) {
  std::vector<arith::PrimePower> parts;
  for (std::uint64_t p : primes) parts.push_back({p, 1});
  if (extra) parts.push_back({*extra, 1});
  return arith::Factorization::from_parts(std::move(parts));
}

// Calls visit(d, omega(d)) for every unitary divisor d < limit of big_n.
template <class Visit>
void for_small_unitary_divisors(const arith::Factorization& big_n, std::uint64_t limit, Visit visit) {
  const auto blocks = big_n.blocks();
  auto rec = [&](auto& self, std::size_t i, std::uint64_t d, unsigned w) -> void {
    if (i == blocks.size()) {
      visit(d, w);
      return;
    }
    self(self, i + 1, d, w);
    if (blocks[i] < limit && d * blocks[i] < limit) self(self, i + 1, d * blocks[i], w + 1);
  };
  rec(rec, 0, 1, 0);
}

std::string case_context(const WitnessReport& r) {
  std::string s = "m=" + std::to_string(r.plan.m) + " t=" + std::to_string(r.plan.t) + " n=" +
                  std::to_string(r.plan.n) + " primes=[";
  for (std::size_t i = 0; i < r.plan.primes.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(r.plan.primes[i]);
  }
  s += "] q=" + std::to_string(r.plan.q) + " case=" + std::string(to_string(r.case_tag));
  return s;
}

}  // namespace

WitnessPlan build_plan(std::uint64_t m, std::uint64_t t, std::uint64_t search_ceiling) {
  if (m < 2) throw InvalidArgument("witness plans need m > 1");
  if (t < 1) throw InvalidArgument("witness plans need t >= 1");
  WitnessPlan plan;
  plan.m = m;
  plan.t = t;
  for (std::uint64_t n = 8 * m;; ++n) {
    if (n > search_ceiling) {
      throw SearchCeilingExceeded("no admissible prime window for m=" + std::to_string(m) +
                                  " t=" + std::to_string(t) + " with n <= " + std::to_string(search_ceiling));
    }
    std::vector<std::uint64_t> primes;
    std::uint64_t p = n + 1;
    p += (m + 1 - p % m) % m;  // first value > n that is 1 (mod m)
    for (; 8 * p < 15 * n && primes.size() < t; p += m) {
      if (arith::is_prime(p)) primes.push_back(p);
    }
    if (primes.size() < t) continue;
    plan.n = n;
    plan.primes = std::move(primes);
    break;
  }
  plan.q = arith::next_prime(2 * plan.primes.front());
  const bool even = t % 2 == 0;
  plan.n1 = product_of_primes(plan.primes, even ? std::optional(plan.q) : std::nullopt);
  plan.n2 = product_of_primes(plan.primes, even ? std::nullopt : std::optional(plan.q));
  return plan;
}

TruncatedSeries truncated_unitary_cyclotomic(const arith::Factorization& big_n, std::size_t order) {
  if (big_n.n() < 2) throw InvalidArgument("truncated unitary cyclotomic needs N > 1");
  TruncatedSeries s = TruncatedSeries::one(order);
  const unsigned w = big_n.omega();
  for_small_unitary_divisors(big_n, order, [&](std::uint64_t d, unsigned wd) {
    // exponent mu*(N/d) = (-1)^(w - wd)
    if ((w - wd) % 2 == 0) {
      s.mul_one_minus_power(d);
    } else {
      s.div_one_minus_power(d);
    }
  });
  return s;
}

TruncatedSeries truncated_inverse_unitary_cyclotomic(const arith::Factorization& big_n, std::size_t order) {
  if (big_n.n() < 2) throw InvalidArgument("truncated inverse unitary cyclotomic needs N > 1");
  // Psi*_N = -(1 - x^N) / Phi*_N; the d = N factor of 1/Phi*_N cancels (1 - x^N).
  TruncatedSeries s = TruncatedSeries::one(order);
  const unsigned w = big_n.omega();
  for_small_unitary_divisors(big_n, order, [&](std::uint64_t d, unsigned wd) {
    if (d == big_n.n()) return;
    if ((w - wd) % 2 == 0) {
      s.div_one_minus_power(d);
    } else {
      s.mul_one_minus_power(d);
    }
  });
  return -s;
}

TruncatedSeries truncated_phi_star_direct(const WitnessPlan& plan) {
  return truncated_unitary_cyclotomic(plan.m_n1(), plan.window());
}

TruncatedSeries truncated_phi_star_closed(const WitnessPlan& plan) {
  const std::size_t order = plan.window();
  const int mu = arith::mobius_star(plan.m);
  TruncatedSeries perturbation = TruncatedSeries::one(order);
  for (std::uint64_t p : plan.primes) perturbation[p] -= mu;
  return poly::series_mul(cyclo::u_star_expansion(plan.m, order), perturbation);
}

TruncatedSeries truncated_phi_star(const WitnessPlan& plan) {
  auto direct = truncated_phi_star_direct(plan);
  const auto closed = truncated_phi_star_closed(plan);
  if (direct != closed) {
    std::size_t k = 0;
    while (direct[k] == closed[k]) ++k;
    throw InternalMismatch("truncated Phi*_{m n1} constructions differ at x^" + std::to_string(k) +
                           " for m=" + std::to_string(plan.m) + " t=" + std::to_string(plan.t));
  }
  return direct;
}

TruncatedSeries coefficient_window_direct(const WitnessPlan& plan, std::uint64_t ceiling) {
  const auto mn1 = plan.m_n1();
  if (mn1.n() > ceiling) {
    throw CeilingExceeded("m*n1 = " + std::to_string(mn1.n()) + " exceeds the full-polynomial ceiling " +
                          std::to_string(ceiling));
  }
  return poly::series_from(cyclo::unitary_cyclotomic(mn1.n()), plan.window());
}

std::string_view to_string(WitnessCase c) {
  switch (c) {
    case WitnessCase::EvenOmega:
      return "mu*(m)=+1";
    case WitnessCase::OddOmegaTwoModFour:
      return "mu*(m)=-1, m=2 mod 4";
    case WitnessCase::OddOmegaOther:
      return "mu*(m)=-1, m!=2 mod 4";
  }
  return "?";
}

WitnessReport evaluate_witness(std::uint64_t m, std::uint64_t t, const WitnessOptions& options) {
  WitnessReport r;
  r.plan = build_plan(m, t, options.search_ceiling);
  const std::size_t order = r.plan.window();
  const long tl = static_cast<long>(t);
  const std::uint64_t pt = r.plan.largest_prime();
  r.mu_star_m = arith::mobius_star(m);

  r.k1 = pt;
  if (r.mu_star_m == 1) {
    r.case_tag = WitnessCase::EvenOmega;
    r.q2 = arith::unitary_divisors(m).at(2);
    r.k2 = pt + *r.q2;
    r.predicted_a1 = 1 - tl;
    r.predicted_a2 = tl - 1;
  } else {
    r.case_tag = m % 4 == 2 ? WitnessCase::OddOmegaTwoModFour : WitnessCase::OddOmegaOther;
    r.k2 = pt + 1;
    r.predicted_a1 = tl - 1;
    r.predicted_a2 = r.case_tag == WitnessCase::OddOmegaTwoModFour ? 1 - tl : -tl;
  }

  const auto a = truncated_phi_star_direct(r.plan);
  const auto closed = truncated_phi_star_closed(r.plan);
  r.windows_agree = a == closed;

  const auto u = cyclo::u_star_expansion(m, order);
  r.window_formula_holds = true;
  for (std::size_t k = pt; k < order; ++k) {
    if (a[k] != u[k] - Integer(r.mu_star_m) * Integer(tl) * u[k - 1]) {
      r.window_formula_holds = false;
      break;
    }
  }

  const auto c = truncated_inverse_unitary_cyclotomic(r.plan.m_n2(), order);
  r.inverse_reduction_holds = c == -a;

  r.observed_a1 = a[r.k1];
  r.observed_a2 = a[r.k2];
  r.observed_c1 = c[r.k1];
  r.observed_c2 = c[r.k2];

  if (r.plan.m_n1().n() <= options.direct_ceiling) {
    r.direct_phi_agrees = coefficient_window_direct(r.plan, options.direct_ceiling) == a;
  }
  const auto mn2 = r.plan.m_n2().n();
  if (mn2 <= options.direct_ceiling) {
    r.direct_psi_agrees = poly::series_from(cyclo::inverse_unitary_cyclotomic(mn2), order) == c;
  }

  r.all_match = r.windows_agree && r.window_formula_holds && r.inverse_reduction_holds &&
                r.observed_a1 == r.predicted_a1 && r.observed_a2 == r.predicted_a2 &&
                r.observed_c1 == -r.predicted_a1 && r.observed_c2 == -r.predicted_a2 &&
                r.direct_phi_agrees.value_or(true) && r.direct_psi_agrees.value_or(true);
  return r;
}

WitnessReport verify_witness(std::uint64_t m, std::uint64_t t, const WitnessOptions& options) {
  auto r = evaluate_witness(m, t, options);
  if (!r.all_match) {
    std::string msg = "witness prediction failed: " + case_context(r) + "; a*(" + std::to_string(r.k1) +
                      ")=" + r.observed_a1.str() + " predicted " + std::to_string(r.predicted_a1) + ", a*(" +
                      std::to_string(r.k2) + ")=" + r.observed_a2.str() + " predicted " +
                      std::to_string(r.predicted_a2) + ", windows_agree=" + std::to_string(r.windows_agree) +
                      ", window_formula=" + std::to_string(r.window_formula_holds) +
                      ", inverse_reduction=" + std::to_string(r.inverse_reduction_holds);
    throw PredictionMismatch(msg);
  }
  return r;
}

}  // namespace unicyclo::witness
