#include "rotavg/combinatorics.hpp"
#include "rotavg/errors.hpp"
#include "rotavg/evaluator.hpp"

namespace rotavg {

namespace {

/// Gamma(m/2) for m >= 1 as coefficient * sqrt(pi)^half_pi.
struct HalfGamma {
  ExactRational coefficient;
  int half_pi = 0;
};

HalfGamma gamma_half(int m) {
  if (m % 2 == 0) return {ExactRational(factorial(m / 2 - 1)), 0};
  // Gamma(k + 1/2) = (2k - 1)!! / 2^k * sqrt(pi), with m = 2k + 1.
  const int k = (m - 1) / 2;
  BigInt den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
  return {ExactRational(double_factorial(2 * k - 1), den), 1};
}

/// B((1+a)/2, (1+b)/2) for integers a, b >= 0.
PiRational beta(int a, int b) {
  const HalfGamma ga = gamma_half(1 + a);
  const HalfGamma gb = gamma_half(1 + b);
  const HalfGamma gab = gamma_half(2 + a + b);
  const int half_pi = ga.half_pi + gb.half_pi - gab.half_pi;
  if (half_pi % 2 != 0) throw ConsistencyError("beta value with odd power of sqrt(pi)");
  return PiRational(ga.coefficient * gb.coefficient / gab.coefficient, half_pi / 2);
}

int parity_factor(int k) { return k % 2 == 0 ? 2 : 0; }

}  // namespace

PiRational evaluate_beta_path(const PowerMatrix& chi) {
  const int Q = chi(0, 0), R = chi(0, 1), T = chi(1, 0), U = chi(1, 1), W = chi(2, 0);
  PiRational sum;
  for (int q = 0; q <= Q; ++q) {
    for (int r = 0; r <= R; ++r) {
      for (int t = 0; t <= T; ++t) {
        for (int u = 0; u <= U; ++u) {
          const TrigPowers tp = trig_powers(chi, q, r, t, u);
          const int parity = parity_factor(tp.c_beta) * parity_factor(tp.c_alpha) *
                             parity_factor(tp.s_alpha) * parity_factor(tp.c_gamma) *
                             parity_factor(tp.s_gamma);
          if (parity == 0) continue;
          BigInt weight = binomial(Q, q) * binomial(R, r) * binomial(T, t) * binomial(U, u) * parity;
          if ((q + R + U - u + W) % 2 != 0) weight = -weight;
          sum += PiRational(ExactRational(weight)) * beta(tp.c_alpha, tp.s_alpha) *
                 beta(tp.c_beta, tp.s_beta) * beta(tp.c_gamma, tp.s_gamma);
        }
      }
    }
  }
  return sum / PiRational(ExactRational(64), 2);
}

}  // namespace rotavg
