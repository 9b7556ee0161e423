#include "rotavg/combinatorics.hpp"
#include "rotavg/errors.hpp"
#include "rotavg/evaluator.hpp"

namespace rotavg {

namespace {

struct Powers {
  int Q, R, S, T, U, V, W, X, Y;
  explicit Powers(const PowerMatrix& m)
      : Q(m(0, 0)), R(m(0, 1)), S(m(0, 2)),
        T(m(1, 0)), U(m(1, 1)), V(m(1, 2)),
        W(m(2, 0)), X(m(2, 1)), Y(m(2, 2)) {}
};

void require_selection_rule(const PowerMatrix& chi) {
  if (!selection_rule(chi)) {
    throw PreconditionError("closed form requires the selection rule; " + chi.str() + " fails it");
  }
}

/// Visits every parity-admissible (q, r, t, u) with the integer numerator of
/// its summand and the argument of the (n - s + 1)!! denominator.
template <class Visit>
void for_each_summand(const PowerMatrix& chi, Visit visit) {
  const Powers p(chi);
  const int n = chi.rank();
  BigInt numerator;
  for (int q = 0; q <= p.Q; ++q) {
    for (int r = 0; r <= p.R; ++r) {
      for (int t = 0; t <= p.T; ++t) {
        for (int u = 0; u <= p.U; ++u) {
          const int s = q + r + t + u;
          if ((s - n) % 2 != 0) continue;
          numerator = binomial(p.Q, q) * binomial(p.R, r) * binomial(p.T, t) * binomial(p.U, u);
          numerator *= double_factorial(p.Q + p.R + p.T + p.U + p.Y - s - 1);
          numerator *= double_factorial(p.T + p.U + p.V + q + r - t - u - 1);
          numerator *= double_factorial(p.Q + p.R + p.S - q - r + t + u - 1);
          numerator *= double_factorial(p.R + p.U + p.X + q - r + t - u - 1);
          numerator *= double_factorial(p.Q + p.T + p.W - q + r - t + u - 1);
          if ((q + u) % 2) numerator = -numerator;
          visit(q, r, t, u, numerator, n - s + 1);
        }
      }
    }
  }
}

ExactRational prefactor(const PowerMatrix& chi) {
  const Powers p(chi);
  BigInt num = factorial((p.S + p.V + p.W + p.X) / 2);
  BigInt den = factorial((p.Q + p.R + p.S + p.T + p.U + p.V) / 2) *
               factorial((p.Q + p.R + p.T + p.U + p.W + p.X) / 2);
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(p.Q + p.R + p.T + p.U));
  if ((p.R + p.U + p.W) % 2) num = -num;
  return ExactRational(num, den);
}

}  // namespace

TrigPowers trig_powers(const PowerMatrix& chi, int q, int r, int t, int u) {
  const Powers p(chi);
  TrigPowers tp;
  tp.c_beta = p.Q + p.R + p.T + p.U + p.Y - (q + r + t + u);
  tp.s_beta = p.S + p.V + p.W + p.X + 1;
  tp.c_alpha = p.Q + p.R + p.S - q - r + t + u;
  tp.s_alpha = p.T + p.U + p.V + q + r - t - u;
  tp.c_gamma = p.Q + p.T + p.W - q + r - t + u;
  tp.s_gamma = p.R + p.U + p.X + q - r + t - u;
  return tp;
}

ClosedFormExpansion closed_form_expansion(const PowerMatrix& chi) {
  require_selection_rule(chi);
  ClosedFormExpansion out;
  out.prefactor = prefactor(chi);
  for_each_summand(chi, [&](int q, int r, int t, int u, const BigInt& num, int den_arg) {
    out.terms.push_back({q, r, t, u, ExactRational(num, double_factorial(den_arg))});
  });
  return out;
}

ExactRational evaluate_closed_form(const PowerMatrix& chi) {
  require_selection_rule(chi);
  // Every (n - s + 1)!! has an odd argument and divides the s = n mod 2 one,
  // so the sum runs over integers against a single common denominator.
  const int n = chi.rank();
  const int top = n - (n % 2) + 1;
  const BigInt& common = double_factorial(top);
  BigInt sum = 0;
  for_each_summand(chi, [&](int, int, int, int, const BigInt& num, int den_arg) {
    sum += num * (common / double_factorial(den_arg));
  });
  return prefactor(chi) * ExactRational(sum, common);
}

}  // namespace rotavg
