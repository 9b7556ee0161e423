#include <unordered_map>

#include "rotavg/evaluator.hpp"
#include "rotavg/symmetry.hpp"
#include "sync.hpp"

namespace rotavg {

struct EvaluationCache::Impl {
  mutable detail::SharedMutex mutex;
  std::unordered_map<PowerMatrix, ExactRational> table;
};

EvaluationCache::EvaluationCache(std::size_t max_entries)
    : impl_(std::make_unique<Impl>()), max_entries_(max_entries) {}

EvaluationCache::~EvaluationCache() = default;

bool EvaluationCache::lookup(const PowerMatrix& representative, ExactRational& out) const {
  std::shared_lock lock(impl_->mutex);
  const auto it = impl_->table.find(representative);
  if (it == impl_->table.end()) {
    misses_.fetch_add(1, std::memory_order_relaxed);
    return false;
  }
  hits_.fetch_add(1, std::memory_order_relaxed);
  out = it->second;
  return true;
}

void EvaluationCache::insert(const PowerMatrix& representative, const ExactRational& value) {
  std::unique_lock lock(impl_->mutex);
  if (impl_->table.size() >= max_entries_) return;
  impl_->table.try_emplace(representative, value);
}

std::size_t EvaluationCache::size() const {
  std::shared_lock lock(impl_->mutex);
  return impl_->table.size();
}

namespace {

long summation_cost(const PowerMatrix& m) {
  return static_cast<long>(m(0, 0) + 1) * (m(0, 1) + 1) * (m(1, 0) + 1) * (m(1, 1) + 1);
}

/// Closed form for a representative, evaluated on whichever orbit image has
/// the smallest (q, r, t, u) box. I(image) = sign(op)^n I(rep).
ExactRational evaluate_representative(const PowerMatrix& rep) {
  const bool odd = rep.rank() % 2 == 1;
  const SymmetryOp* best = nullptr;
  PowerMatrix best_image;
  long best_cost = 0;
  for (const SymmetryOp& op : symmetry_ops()) {
    const PowerMatrix image = apply_symmetry(rep, op);
    const long cost = summation_cost(image);
    if (best == nullptr || cost < best_cost) {
      best = &op;
      best_image = image;
      best_cost = cost;
    }
  }
  ExactRational value = evaluate_closed_form(best_image);
  if (odd && best->sign() < 0) value = -value;
  return value;
}

}  // namespace

ExactRational evaluate(const PowerMatrix& chi, EvaluationCache& cache) { return evaluate(chi, cache, true); }

ExactRational evaluate(const PowerMatrix& chi, EvaluationCache& cache, bool use_shortcuts) {
  if (!selection_rule(chi)) return 0;
  const CanonicalForm canon = canonicalize(chi);
  if (canon.sign == 0) return 0;
  const int n = chi.rank();
  if (use_shortcuts && n == 3) return ExactRational(BigInt(determinant(chi)), 6);
  if (use_shortcuts && n == 5) return ExactRational(BigInt(determinant(chi)), 30);

  ExactRational value;
  if (!cache.lookup(canon.representative, value)) {
    value = evaluate_representative(canon.representative);
    cache.insert(canon.representative, value);
  }
  return canon.sign < 0 ? -value : value;
}

ExactRational evaluate(const PowerMatrix& chi) {
  EvaluationCache local;
  return evaluate(chi, local);
}

}  // namespace rotavg
