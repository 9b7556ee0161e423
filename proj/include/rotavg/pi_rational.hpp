#pragma once

#include <string>

#include "rotavg/rational.hpp"

namespace rotavg {

/// coefficient * pi^pi_power. A zero coefficient always carries pi_power 0.
class PiRational {
 public:
  PiRational() = default;
  PiRational(ExactRational coefficient, int pi_power = 0);  // NOLINT(implicit)

  const ExactRational& coefficient() const { return coefficient_; }
  int pi_power() const { return pi_power_; }
  bool is_zero() const { return coefficient_.is_zero(); }

  /// Throws ConsistencyError when both sides are nonzero with different
  /// powers of pi.
  PiRational& operator+=(const PiRational& rhs);
  PiRational& operator*=(const PiRational& rhs);
  PiRational& operator/=(const PiRational& rhs);

  friend PiRational operator+(PiRational a, const PiRational& b) { return a += b; }
  friend PiRational operator*(PiRational a, const PiRational& b) { return a *= b; }
  friend PiRational operator/(PiRational a, const PiRational& b) { return a /= b; }
  friend bool operator==(const PiRational&, const PiRational&) = default;

  std::string str() const;

 private:
  ExactRational coefficient_;
  int pi_power_ = 0;
};

}  // namespace rotavg
