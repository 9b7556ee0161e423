#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace rotavg {

/// The 3x3 array of exponents
///
///     [ Q R S ]
///     [ T U V ]
///     [ W X Y ]
///
/// collecting like direction cosines l_{i lambda} in a product. Entry (i, j)
/// (0-based here) is the power of l_{i+1, j+1}. Ordering is lexicographic in
/// row-major entry order.
class PowerMatrix {
 public:
  using Entries = std::array<int, 9>;

  PowerMatrix() = default;
  /// Throws PreconditionError if any entry is negative.
  explicit PowerMatrix(const Entries& row_major);
  PowerMatrix(std::initializer_list<std::initializer_list<int>> rows);

  int operator()(int row, int col) const { return entries_[3 * row + col]; }
  const Entries& entries() const { return entries_; }

  int rank() const;
  int row_sum(int row) const;
  int col_sum(int col) const;
  PowerMatrix transposed() const;

  std::string str() const;  // "[[Q,R,S],[T,U,V],[W,X,Y]]"

  friend auto operator<=>(const PowerMatrix&, const PowerMatrix&) = default;
  friend bool operator==(const PowerMatrix&, const PowerMatrix&) = default;

 private:
  Entries entries_{};
};

/// Paired lab and molecular index lists i_1..i_n ; lambda_1..lambda_n, each
/// index in {1,2,3}.
struct MultiIndex {
  std::vector<int> lab;
  std::vector<int> mol;
};

/// Tallies (lab[k], mol[k]) pairs. Throws PreconditionError on a length
/// mismatch or an index outside {1,2,3}.
PowerMatrix from_multi_index(const MultiIndex& m);

/// True iff every row sum and column sum has the parity of the rank. A
/// necessary condition for a nonzero average.
bool selection_rule(const PowerMatrix& chi);

long determinant(const PowerMatrix& chi);

}  // namespace rotavg

template <>
struct std::hash<rotavg::PowerMatrix> {
  std::size_t operator()(const rotavg::PowerMatrix& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int e : m.entries()) {
      h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};
