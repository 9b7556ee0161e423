#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace rotavg {

using BigInt = mpz_class;

/// Arbitrary-precision rational, always held in lowest terms with a positive
/// denominator. Text form is "p/q", or just "p" when the denominator is 1.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(long value) : value_(value) {}  // NOLINT(implicit)
  ExactRational(const BigInt& value) : value_(value) {}  // NOLINT(implicit)
  ExactRational(const BigInt& numerator, const BigInt& denominator);
  explicit ExactRational(mpq_class value);

  /// Accepts "p", "-p", "p/q", "-p/q" with optional surrounding whitespace.
  /// Throws ParseError on anything else or a zero denominator.
  static ExactRational parse(std::string_view text);

  std::string str() const;
  double to_double() const { return value_.get_d(); }

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  const mpq_class& value() const { return value_; }

  ExactRational operator-() const { return ExactRational(mpq_class(-value_)); }
  ExactRational& operator+=(const ExactRational& rhs);
  ExactRational& operator-=(const ExactRational& rhs);
  ExactRational& operator*=(const ExactRational& rhs);
  ExactRational& operator/=(const ExactRational& rhs);

  friend ExactRational operator+(ExactRational lhs, const ExactRational& rhs) { return lhs += rhs; }
  friend ExactRational operator-(ExactRational lhs, const ExactRational& rhs) { return lhs -= rhs; }
  friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) { return lhs *= rhs; }
  friend ExactRational operator/(ExactRational lhs, const ExactRational& rhs) { return lhs /= rhs; }

  friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const ExactRational& r);

}  // namespace rotavg
