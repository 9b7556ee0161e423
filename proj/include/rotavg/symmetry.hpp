#pragma once

#include <array>
#include <span>

#include "rotavg/power_matrix.hpp"

namespace rotavg {

/// An element of the 72-element group generated by row permutations, column
/// permutations and transposition of a power matrix. Averages are invariant
/// under it up to sign(op)^rank.
struct SymmetryOp {
  std::array<int, 3> row_perm{0, 1, 2};  // 0-based; result row i takes source row row_perm[i]
  std::array<int, 3> col_perm{0, 1, 2};
  bool transposed = false;

  /// sign(row_perm) * sign(col_perm); transposition contributes +1.
  int sign() const;

  friend bool operator==(const SymmetryOp&, const SymmetryOp&) = default;
};

/// Permutes rows and columns, then transposes if flagged.
PowerMatrix apply_symmetry(const PowerMatrix& chi, const SymmetryOp& op);

/// All 72 operations; the identity comes first.
std::span<const SymmetryOp, 72> symmetry_ops();

/// The op equal to applying `second` after `first`.
SymmetryOp compose(const SymmetryOp& second, const SymmetryOp& first);

struct CanonicalForm {
  PowerMatrix representative;
  /// For odd rank: +1 or -1 such that I(chi) = sign * I(representative), or 0
  /// when chi is fixed by an odd operation (forcing I(chi) = 0). Even rank: +1.
  int sign = 1;
};

/// Orbit-minimal representative (lexicographic, row-major) by enumerating all
/// 72 images.
CanonicalForm canonicalize(const PowerMatrix& chi);

}  // namespace rotavg
