#include "rotavg/combinatorics.hpp"

#include <deque>
#include <string>

#include "rotavg/errors.hpp"
#include "sync.hpp"

namespace rotavg {

namespace {

// Grows by appending; std::deque keeps references to existing elements valid
// across push_back, so callers may hold a reference after the lock is gone.
class GrowingTable {
 public:
  template <class Next>
  const BigInt& get(std::size_t index, Next next) {
    {
      std::shared_lock lock(mutex_);
      if (index < values_.size()) return values_[index];
    }
    std::unique_lock lock(mutex_);
    while (values_.size() <= index) values_.push_back(next(values_));
    return values_[index];
  }

 private:
  detail::SharedMutex mutex_;
  std::deque<BigInt> values_;
};

}  // namespace

const BigInt& factorial(int k) {
  if (k < 0) throw PreconditionError("factorial of negative number " + std::to_string(k));
  static GrowingTable table;
  return table.get(static_cast<std::size_t>(k), [](const std::deque<BigInt>& v) {
    return v.empty() ? BigInt(1) : BigInt(v.back() * static_cast<unsigned long>(v.size()));
  });
}

const BigInt& double_factorial(int k) {
  if (k < -1) throw PreconditionError("double factorial of " + std::to_string(k));
  // Slot i holds (i-1)!!.
  static GrowingTable table;
  return table.get(static_cast<std::size_t>(k + 1), [](const std::deque<BigInt>& v) {
    const auto i = static_cast<unsigned long>(v.size());
    if (i < 2) return BigInt(1);
    return BigInt(v[i - 2] * (i - 1));
  });
}

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

}  // namespace rotavg
