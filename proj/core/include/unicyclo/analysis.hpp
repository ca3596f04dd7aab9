#pragma once

// Coefficient investigations: minimal-index height tables and instance checks
// of the ternary coefficient-set and height theorems.

#include <cstdint>
#include <optional>
#include <vector>

#include "unicyclo/cyclotomic.hpp"
#include "unicyclo/error.hpp"

namespace unicyclo::analysis {

using cyclo::PolyFamily;

/// One table row: the least n whose family polynomial has a coefficient of
/// absolute value m, its degree, the least such exponent k and the signed
/// coefficient found there.
struct CoeffRecord {
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  long degree = 0;
  std::uint64_t k = 0;
  Integer value;

  friend bool operator==(const CoeffRecord&, const CoeffRecord&) = default;
};

struct SearchOptions {
  PolyFamily family = PolyFamily::Phi;
  std::uint64_t m_min = 2;
  std::uint64_t m_max = 2;
  std::uint64_t n_max = 0;
  /// Worker threads; the result does not depend on this.
  unsigned jobs = 1;
};

struct SearchOutcome {
  /// Rows for m_min, m_min + 1, ... up to the first m not attained.
  std::vector<CoeffRecord> rows;
  /// First m with no n <= n_max, if any.
  std::optional<std::uint64_t> exhausted_at;
};

class RangeExhausted : public Error {
 public:
  RangeExhausted(std::uint64_t m, std::uint64_t n_max, std::vector<CoeffRecord> completed);
  std::uint64_t m() const noexcept { return m_; }
  const std::vector<CoeffRecord>& completed() const noexcept { return completed_; }

 private:
  std::uint64_t m_;
  std::vector<CoeffRecord> completed_;
};

SearchOutcome search_minimal_n(const SearchOptions& options);

/// Rows for m = 2..m_max; throws RangeExhausted carrying the completed rows.
std::vector<CoeffRecord> minimal_n_table(PolyFamily family, std::uint64_t m_max, std::uint64_t n_max,
                                         unsigned jobs = 1);

/// Record for a given (family, n, m), recomputed from the full polynomial;
/// nullopt when no coefficient has absolute value m.
std::optional<CoeffRecord> record_at(PolyFamily family, std::uint64_t n, std::uint64_t m);

/// Coefficient set of Phi*_n for n the product of the given pairwise coprime
/// prime powers, and whether it is an unbroken integer interval.
struct CoefficientSetReport {
  std::vector<std::uint64_t> blocks;
  std::uint64_t n = 0;
  std::vector<Integer> coeff_set;  // ascending
  Integer min;
  Integer max;
  Integer height;
  bool is_consecutive = false;
  /// Integers in [min, max] absent from the set.
  std::vector<Integer> missing;
};

/// Throws PreconditionUnmet unless blocks are pairwise coprime prime powers.
CoefficientSetReport coefficient_set_check(std::vector<std::uint64_t> blocks);

/// Three-block case; additionally requires every block >= 3.
CoefficientSetReport ternary_consecutive_check(std::uint64_t p, std::uint64_t q, std::uint64_t r);

struct CongruenceTransferReport {
  std::uint64_t p = 0, q = 0, r = 0, s = 0;
  /// +1 when r = s (mod pq), -1 when r = -s (mod pq).
  int sign = 0;
  std::vector<Integer> set_r;
  std::vector<Integer> set_s;
  bool holds = false;
};

CongruenceTransferReport congruence_transfer_check(std::uint64_t p, std::uint64_t q, std::uint64_t r,
                                                   std::uint64_t s);

struct HeightJumpReport {
  std::uint64_t p = 0, q = 0, s = 0, r = 0;
  Integer height_s;  // H(Phi*_{pqs})
  Integer height_r;  // H(Phi*_{pqr})
  bool lower_attained = false;
  bool upper_attained = false;
  bool holds = false;
};

HeightJumpReport height_jump_check(std::uint64_t p, std::uint64_t q, std::uint64_t s, std::uint64_t r);

struct KaplanInstance {
  std::uint64_t c = 0;
  std::uint64_t n = 0;
  int residue = 0;  // r^c = residue (mod p^a q^b), residue in {+1, -1}
  Integer height;
  bool flat = false;
};

struct KaplanReport {
  std::uint64_t pa = 0, qb = 0, r = 0, c_max = 0;
  std::vector<KaplanInstance> instances;
  bool holds = false;
};

/// Checks flatness of Phi*_{p^a q^b r^c} for each c <= c_max with
/// r^c = +-1 (mod p^a q^b).
KaplanReport kaplan_flatness_check(std::uint64_t pa, std::uint64_t qb, std::uint64_t r, std::uint64_t c_max);

struct PsiBoundReport {
  std::uint64_t p = 0, q = 0, r = 0;
  Integer height;            // H(Psi*_{pqr})
  std::uint64_t bound = 0;   // floor((p-1)(q-1)/r) + 1
  bool height_within_bound = false;
  bool bound_within_p_minus_1 = false;
  /// Psi*_{pqr}(x) == Phi*_{pq}(x) * Psi*_{pq}(x^r)
  bool factorization_identity = false;
  /// c*_{pqr}(k) == sum_j a*_{pq}(k - jr) c*_{pq}(j) at every k
  bool convolution_identity = false;
  bool holds = false;
};

/// Requires p < q < r pairwise coprime prime powers.
PsiBoundReport psi_star_ternary_bound_check(std::uint64_t p, std::uint64_t q, std::uint64_t r);

}  // namespace unicyclo::analysis
