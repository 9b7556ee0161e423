#include <cmath>
#include <string>

#include "rotavg/combinatorics.hpp"
#include "rotavg/errors.hpp"
#include "rotavg/evaluator.hpp"

namespace rotavg {

namespace {

BigInt product_of_factorials(std::initializer_list<int> args) {
  BigInt p = 1;
  for (int k : args) p *= factorial(k);
  return p;
}

}  // namespace

ExactRational evaluate_special_no_upper_block(const PowerMatrix& chi) {
  if (chi(0, 0) || chi(0, 1) || chi(1, 0) || chi(1, 1)) {
    throw PreconditionError("upper-left 2x2 block must be zero: " + chi.str());
  }
  if (!selection_rule(chi)) throw PreconditionError("selection rule fails for " + chi.str());
  if (chi.rank() % 2) return 0;  // empty sum
  const int S = chi(0, 2), V = chi(1, 2), W = chi(2, 0), X = chi(2, 1), Y = chi(2, 2);
  const BigInt num = product_of_factorials({(S + V + W + X) / 2, (S + V + W + X + Y) / 2, S, V, W, X, Y});
  const BigInt den = product_of_factorials(
      {(S + V) / 2, (W + X) / 2, S / 2, V / 2, W / 2, X / 2, Y / 2, S + V + W + X + Y + 1});
  return ExactRational(num, den);
}

ExactRational evaluate_special_q1(const PowerMatrix& chi) {
  if (chi(0, 0) != 1 || chi(0, 1) || chi(1, 0) || chi(1, 1)) {
    throw PreconditionError("expected Q=1 and R=T=U=0: " + chi.str());
  }
  if (!selection_rule(chi)) throw PreconditionError("selection rule fails for " + chi.str());
  const int S = chi(0, 2), V = chi(1, 2), W = chi(2, 0), X = chi(2, 1), Y = chi(2, 2);
  if (chi.rank() % 2) {
    const BigInt num =
        product_of_factorials({(S + V + W + X) / 2, (S + V + W + X + Y) / 2, S, V, W, X, Y});
    const BigInt den = product_of_factorials({(S + V + 1) / 2, (W + X + 1) / 2, S / 2, W / 2, Y / 2,
                                              (V - 1) / 2, (X - 1) / 2, S + V + W + X + Y + 1});
    return -ExactRational(num, den);
  }
  const BigInt num =
      product_of_factorials({(S + V + W + X) / 2, (S + V + W + X + Y + 1) / 2, S, V, W, X, Y});
  const BigInt den = product_of_factorials({(S + V + 1) / 2, (W + X + 1) / 2, (S - 1) / 2, (W - 1) / 2,
                                            (Y - 1) / 2, V / 2, X / 2, S + V + W + X + Y + 2});
  return ExactRational(-2) * ExactRational(num, den);
}

HalfInteger HalfInteger::from_twice(int twice) {
  if (twice < 0) throw PreconditionError("angular momentum must be nonnegative");
  return HalfInteger(twice);
}

HalfInteger HalfInteger::parse(std::string_view text) {
  try {
    const ExactRational r = ExactRational::parse(text);
    const ExactRational twice = r * ExactRational(2);
    if (twice.denominator() != 1 || twice.sign() < 0 || !twice.numerator().fits_sint_p()) {
      throw ParseError("not a nonnegative half-integer: '" + std::string(text) + "'");
    }
    return HalfInteger(static_cast<int>(twice.numerator().get_si()));
  } catch (const PreconditionError&) {
    throw ParseError("not a nonnegative half-integer: '" + std::string(text) + "'");
  }
}

HalfInteger HalfInteger::from_double(double value) {
  const double twice = 2.0 * value;
  if (!std::isfinite(twice) || twice < 0 || twice != std::floor(twice) || twice > 1e9) {
    throw PreconditionError("not a nonnegative half-integer: " + std::to_string(value));
  }
  return HalfInteger(static_cast<int>(twice));
}

ExactRational three_j_000_squared(HalfInteger j1, HalfInteger j2, HalfInteger j3) {
  if (!j1.is_integer() || !j2.is_integer() || !j3.is_integer()) return 0;
  const int a = j1.twice() / 2, b = j2.twice() / 2, c = j3.twice() / 2;
  const int sum = a + b + c;
  if (sum % 2) return 0;
  if (c > a + b || a > b + c || b > a + c) return 0;
  const int g = sum / 2;
  // (j1 j2 j3; 0 0 0)^2 = (2g-2a)!(2g-2b)!(2g-2c)!/(2g+1)! * [g!/((g-a)!(g-b)!(g-c)!)]^2
  const BigInt tri = factorial(sum - 2 * a) * factorial(sum - 2 * b) * factorial(sum - 2 * c);
  const BigInt ratio = factorial(g) / (factorial(g - a) * factorial(g - b) * factorial(g - c));
  return ExactRational(tri * ratio * ratio, factorial(sum + 1));
}

}  // namespace rotavg
