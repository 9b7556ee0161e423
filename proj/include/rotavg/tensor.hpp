#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rotavg/evaluator.hpp"
#include "rotavg/power_matrix.hpp"
#include "rotavg/rational.hpp"

namespace rotavg {

/// Rank-n Cartesian tensor in three dimensions, stored densely with the
/// last index varying fastest. Indices are 1-based.
template <class T>
class DenseTensor {
 public:
  static constexpr int kMaxStorableRank = 16;

  explicit DenseTensor(int rank = 0);

  int rank() const { return rank_; }
  std::size_t size() const { return values_.size(); }

  T& operator[](std::span<const int> idx) { return values_[flat_index(idx)]; }
  const T& operator[](std::span<const int> idx) const { return values_[flat_index(idx)]; }
  T& flat(std::size_t i) { return values_[i]; }
  const T& flat(std::size_t i) const { return values_[i]; }
  const std::vector<T>& values() const { return values_; }

  /// Throws PreconditionError on wrong length or an index outside {1,2,3}.
  std::size_t flat_index(std::span<const int> idx) const;
  std::vector<int> index_tuple(std::size_t flat) const;

  friend bool operator==(const DenseTensor&, const DenseTensor&) = default;

 private:
  int rank_ = 0;
  std::vector<T> values_;
};

using ExactTensor = DenseTensor<ExactRational>;
using RealTensor = DenseTensor<double>;

/// Molecular index tuples that share one power matrix for a fixed lab tuple.
struct ComponentGroup {
  PowerMatrix power_matrix;
  std::vector<std::vector<int>> members;
};

/// Partition of all 3^n molecular tuples by their power matrix against
/// `lab`, ordered by power matrix; members in lexicographic order.
std::vector<ComponentGroup> group_by_power_matrix(std::span<const int> lab, int rank);

/// Necessary condition on the lab tuple alone: every lab index count must
/// share the parity of the rank, otherwise the averaged component is 0.
bool lab_tuple_admissible(std::span<const int> lab);

/// sum over lambda of I(lab; lambda) * mol[lambda], one evaluation per group.
/// Throws PreconditionError if lab.size() != mol.rank().
ExactRational average_component(std::span<const int> lab, const ExactTensor& mol, EvaluationCache& cache);
double average_component(std::span<const int> lab, const RealTensor& mol, EvaluationCache& cache);

struct AverageOptions {
  int max_rank = 10;
  unsigned threads = 1;  // 0 = hardware concurrency
};

/// Lab-frame isotropic average of every component. Throws LimitError when
/// the rank exceeds options.max_rank.
ExactTensor average_tensor(const ExactTensor& mol, EvaluationCache& cache, const AverageOptions& options = {});
RealTensor average_tensor(const RealTensor& mol, EvaluationCache& cache, const AverageOptions& options = {});

// JSON tensor files:
//   { "rank": n, "mode": "exact"|"float",
//     "components": [ { "idx": [i1,...,in], "value": "p/q" | number }, ... ] }
// Omitted components are zero.

using AnyTensor = std::variant<ExactTensor, RealTensor>;

/// Throws ParseError on malformed input or duplicate idx, LimitError when the
/// rank exceeds max_rank.
AnyTensor parse_tensor_json(std::string_view text, int max_rank);

std::string write_tensor_json(const AnyTensor& tensor, bool nonzero_only = false);

}  // namespace rotavg
