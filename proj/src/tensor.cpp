#include "rotavg/tensor.hpp"

#include <map>
#include <string>

#include "rotavg/errors.hpp"
#include "rotavg/parallel.hpp"

namespace rotavg {

namespace {

std::size_t power_of_three(int n) {
  std::size_t p = 1;
  for (int k = 0; k < n; ++k) p *= 3;
  return p;
}

PowerMatrix tally(std::span<const int> lab, std::span<const int> mol) {
  PowerMatrix::Entries e{};
  for (std::size_t k = 0; k < lab.size(); ++k) ++e[3 * (lab[k] - 1) + (mol[k] - 1)];
  return PowerMatrix(e);
}

void check_lab(std::span<const int> lab, int rank) {
  if (static_cast<int>(lab.size()) != rank) {
    throw PreconditionError("lab tuple length " + std::to_string(lab.size()) + " does not match rank " +
                            std::to_string(rank));
  }
  for (int i : lab) {
    if (i < 1 || i > 3) throw PreconditionError("lab index outside {1,2,3}");
  }
}

template <class T>
bool is_zero_value(const T& v) {
  if constexpr (std::is_same_v<T, double>) {
    return v == 0.0;
  } else {
    return v.is_zero();
  }
}

/// Group the nonzero molecular components by power matrix against `lab`.
template <class T>
std::map<PowerMatrix, T> grouped_weights(std::span<const int> lab, const DenseTensor<T>& mol) {
  std::map<PowerMatrix, T> groups;
  for (std::size_t f = 0; f < mol.size(); ++f) {
    const T& v = mol.flat(f);
    if (is_zero_value(v)) continue;
    const std::vector<int> lambda = mol.index_tuple(f);
    groups[tally(lab, lambda)] += v;
  }
  return groups;
}

template <class T>
T average_component_impl(std::span<const int> lab, const DenseTensor<T>& mol, EvaluationCache& cache) {
  check_lab(lab, mol.rank());
  T total{};
  if (!lab_tuple_admissible(lab)) return total;
  for (const auto& [chi, weight] : grouped_weights(lab, mol)) {
    const ExactRational value = evaluate(chi, cache);
    if (value.is_zero()) continue;
    if constexpr (std::is_same_v<T, double>) {
      total += value.to_double() * weight;
    } else {
      total += value * weight;
    }
  }
  return total;
}

template <class T>
DenseTensor<T> average_tensor_impl(const DenseTensor<T>& mol, EvaluationCache& cache,
                                   const AverageOptions& options) {
  if (mol.rank() > options.max_rank) {
    throw LimitError("tensor rank " + std::to_string(mol.rank()) + " exceeds limit " +
                     std::to_string(options.max_rank));
  }
  DenseTensor<T> out(mol.rank());
  parallel_for(out.size(), options.threads, [&](std::size_t f) {
    const std::vector<int> lab = out.index_tuple(f);
    out.flat(f) = average_component_impl<T>(lab, mol, cache);
  });
  return out;
}

}  // namespace

template <class T>
DenseTensor<T>::DenseTensor(int rank) : rank_(rank) {
  if (rank < 0 || rank > kMaxStorableRank) {
    throw PreconditionError("tensor rank " + std::to_string(rank) + " outside [0, " +
                            std::to_string(kMaxStorableRank) + "]");
  }
  values_.assign(power_of_three(rank), T{});
}

template <class T>
std::size_t DenseTensor<T>::flat_index(std::span<const int> idx) const {
  if (static_cast<int>(idx.size()) != rank_) throw PreconditionError("index tuple has wrong length");
  std::size_t f = 0;
  for (int i : idx) {
    if (i < 1 || i > 3) throw PreconditionError("tensor index outside {1,2,3}");
    f = 3 * f + static_cast<std::size_t>(i - 1);
  }
  return f;
}

template <class T>
std::vector<int> DenseTensor<T>::index_tuple(std::size_t flat) const {
  std::vector<int> idx(static_cast<std::size_t>(rank_));
  for (int k = rank_ - 1; k >= 0; --k) {
    idx[static_cast<std::size_t>(k)] = static_cast<int>(flat % 3) + 1;
    flat /= 3;
  }
  return idx;
}

template class DenseTensor<ExactRational>;
template class DenseTensor<double>;

std::vector<ComponentGroup> group_by_power_matrix(std::span<const int> lab, int rank) {
  check_lab(lab, rank);
  const ExactTensor shape(rank);
  std::map<PowerMatrix, std::vector<std::vector<int>>> groups;
  for (std::size_t f = 0; f < shape.size(); ++f) {
    std::vector<int> lambda = shape.index_tuple(f);
    groups[tally(lab, lambda)].push_back(std::move(lambda));
  }
  std::vector<ComponentGroup> out;
  out.reserve(groups.size());
  for (auto& [chi, members] : groups) out.push_back({chi, std::move(members)});
  return out;
}

bool lab_tuple_admissible(std::span<const int> lab) {
  std::array<int, 3> counts{};
  for (int i : lab) ++counts[static_cast<std::size_t>(i - 1)];
  const int parity = static_cast<int>(lab.size() % 2);
  for (int c : counts) {
    if (c % 2 != parity) return false;
  }
  return true;
}

ExactRational average_component(std::span<const int> lab, const ExactTensor& mol, EvaluationCache& cache) {
  return average_component_impl(lab, mol, cache);
}

double average_component(std::span<const int> lab, const RealTensor& mol, EvaluationCache& cache) {
  return average_component_impl(lab, mol, cache);
}

ExactTensor average_tensor(const ExactTensor& mol, EvaluationCache& cache, const AverageOptions& options) {
  return average_tensor_impl(mol, cache, options);
}

RealTensor average_tensor(const RealTensor& mol, EvaluationCache& cache, const AverageOptions& options) {
  return average_tensor_impl(mol, cache, options);
}

}  // namespace rotavg
