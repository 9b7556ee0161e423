#include "rotavg/pi_rational.hpp"

#include "rotavg/errors.hpp"

namespace rotavg {

PiRational::PiRational(ExactRational coefficient, int pi_power)
    : coefficient_(std::move(coefficient)), pi_power_(coefficient_.is_zero() ? 0 : pi_power) {}

PiRational& PiRational::operator+=(const PiRational& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (pi_power_ != rhs.pi_power_) {
    throw ConsistencyError("adding " + str() + " and " + rhs.str() + ": powers of pi differ");
  }
  coefficient_ += rhs.coefficient_;
  if (coefficient_.is_zero()) pi_power_ = 0;
  return *this;
}

PiRational& PiRational::operator*=(const PiRational& rhs) {
  coefficient_ *= rhs.coefficient_;
  pi_power_ = coefficient_.is_zero() ? 0 : pi_power_ + rhs.pi_power_;
  return *this;
}

PiRational& PiRational::operator/=(const PiRational& rhs) {
  coefficient_ /= rhs.coefficient_;
  pi_power_ = coefficient_.is_zero() ? 0 : pi_power_ - rhs.pi_power_;
  return *this;
}

std::string PiRational::str() const {
  if (pi_power_ == 0) return coefficient_.str();
  return "(" + coefficient_.str() + ")*pi^" + std::to_string(pi_power_);
}

}  // namespace rotavg
