#pragma once

#include <atomic>
#include <cstddef>
#include <limits>
#include <memory>
#include <vector>

#include "rotavg/pi_rational.hpp"
#include "rotavg/power_matrix.hpp"
#include "rotavg/rational.hpp"

namespace rotavg {

/// Exponents of the six trigonometric factors after expanding one summand
/// (q, r, t, u) of the Euler-angle integral. s_beta already includes the
/// sin(beta) from the measure.
struct TrigPowers {
  int c_beta = 0, s_beta = 0;
  int c_alpha = 0, s_alpha = 0;
  int c_gamma = 0, s_gamma = 0;
};

TrigPowers trig_powers(const PowerMatrix& chi, int q, int r, int t, int u);

/// One summand of the closed-form quadruple sum, excluding the common
/// prefactor, i.e. value = prefactor * sum(term).
struct ClosedFormTerm {
  int q = 0, r = 0, t = 0, u = 0;
  ExactRational term;
};

struct ClosedFormExpansion {
  ExactRational prefactor;
  std::vector<ClosedFormTerm> terms;  // only the parity-admissible (q, r, t, u)
};

/// Requires selection_rule(chi); throws PreconditionError otherwise.
ClosedFormExpansion closed_form_expansion(const PowerMatrix& chi);

/// Exact average of the direction-cosine monomial described by chi, from the
/// closed double-factorial sum over (q, r, t, u) with q+r+t+u = rank (mod 2).
/// Requires selection_rule(chi); throws PreconditionError otherwise.
ExactRational evaluate_closed_form(const PowerMatrix& chi);

/// Same average from the unrestricted beta-function expansion, tracking
/// powers of pi symbolically. Defined for every chi. Throws ConsistencyError
/// if mixed powers of pi would have to be added.
PiRational evaluate_beta_path(const PowerMatrix& chi);

/// Closed factorial form valid when the upper-left 2x2 block is zero.
/// Requires Q=R=T=U=0 and selection_rule(chi).
ExactRational evaluate_special_no_upper_block(const PowerMatrix& chi);

/// Closed factorial forms valid for Q=1, R=T=U=0 (separate odd and even rank
/// expressions). Requires that shape and selection_rule(chi).
ExactRational evaluate_special_q1(const PowerMatrix& chi);

/// A nonnegative integer or half-odd-integer angular momentum.
class HalfInteger {
 public:
  static HalfInteger from_twice(int twice);
  /// Accepts "j" or "k/2". Throws ParseError otherwise or if negative.
  static HalfInteger parse(std::string_view text);
  static HalfInteger from_double(double value);

  int twice() const { return twice_; }
  bool is_integer() const { return twice_ % 2 == 0; }

 private:
  explicit HalfInteger(int twice) : twice_(twice) {}
  int twice_;
};

/// Square of the Wigner 3j symbol (j1 j2 j3; 0 0 0). Zero when the
/// triangle condition fails, the j sum is odd, or any j is half-odd.
ExactRational three_j_000_squared(HalfInteger j1, HalfInteger j2, HalfInteger j3);

/// Memo table keyed by canonical representative. Concurrent readers and
/// concurrent (idempotent) inserts are allowed unless built single-threaded.
class EvaluationCache {
 public:
  explicit EvaluationCache(std::size_t max_entries = std::numeric_limits<std::size_t>::max());
  ~EvaluationCache();
  EvaluationCache(const EvaluationCache&) = delete;
  EvaluationCache& operator=(const EvaluationCache&) = delete;

  /// Returns true and fills `out` on a hit.
  bool lookup(const PowerMatrix& representative, ExactRational& out) const;
  /// No-op once max_entries is reached or the key is present.
  void insert(const PowerMatrix& representative, const ExactRational& value);

  std::size_t size() const;
  std::size_t hits() const { return hits_.load(std::memory_order_relaxed); }
  std::size_t misses() const { return misses_.load(std::memory_order_relaxed); }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::size_t max_entries_;
  mutable std::atomic<std::size_t> hits_{0};
  mutable std::atomic<std::size_t> misses_{0};
};

/// Dispatcher: zero by the selection rule or an odd self-symmetry; det/6 at
/// rank 3 and det/30 at rank 5; otherwise the cached closed form of the
/// canonical representative with the orbit sign applied.
ExactRational evaluate(const PowerMatrix& chi, EvaluationCache& cache);

/// As above; with use_shortcuts = false ranks 3 and 5 also go through the
/// closed form, which is what verification runs want.
ExactRational evaluate(const PowerMatrix& chi, EvaluationCache& cache, bool use_shortcuts);

/// Uncached convenience overload.
ExactRational evaluate(const PowerMatrix& chi);

}  // namespace rotavg
