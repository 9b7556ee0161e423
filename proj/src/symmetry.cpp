#include "rotavg/symmetry.hpp"

#include <algorithm>
#include <stdexcept>

namespace rotavg {

namespace {

int permutation_sign(const std::array<int, 3>& p) {
  int inversions = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) inversions += p[i] > p[j];
  }
  return inversions % 2 ? -1 : 1;
}

std::array<SymmetryOp, 72> build_ops() {
  std::array<SymmetryOp, 72> ops{};
  std::array<int, 3> rows{0, 1, 2};
  std::size_t k = 0;
  do {
    std::array<int, 3> cols{0, 1, 2};
    do {
      ops[k++] = SymmetryOp{rows, cols, false};
      ops[k++] = SymmetryOp{rows, cols, true};
    } while (std::next_permutation(cols.begin(), cols.end()));
  } while (std::next_permutation(rows.begin(), rows.end()));
  return ops;
}

}  // namespace

int SymmetryOp::sign() const { return permutation_sign(row_perm) * permutation_sign(col_perm); }

PowerMatrix apply_symmetry(const PowerMatrix& chi, const SymmetryOp& op) {
  PowerMatrix::Entries e{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const int v = chi(op.row_perm[i], op.col_perm[j]);
      if (op.transposed) {
        e[3 * j + i] = v;
      } else {
        e[3 * i + j] = v;
      }
    }
  }
  return PowerMatrix(e);
}

std::span<const SymmetryOp, 72> symmetry_ops() {
  static const std::array<SymmetryOp, 72> ops = build_ops();
  return ops;
}

SymmetryOp compose(const SymmetryOp& second, const SymmetryOp& first) {
  // A matrix with distinct entries is moved by every non-identity op, so its
  // image pins the composite down uniquely.
  const PowerMatrix probe({{0, 1, 2}, {3, 4, 5}, {6, 7, 8}});
  const PowerMatrix target = apply_symmetry(apply_symmetry(probe, first), second);
  for (const SymmetryOp& op : symmetry_ops()) {
    if (apply_symmetry(probe, op) == target) return op;
  }
  throw std::logic_error("symmetry group not closed under composition");
}

CanonicalForm canonicalize(const PowerMatrix& chi) {
  const bool odd = chi.rank() % 2 == 1;
  CanonicalForm best{chi, 1};
  bool seen_plus = true;  // identity reaches chi itself
  bool seen_minus = false;
  for (const SymmetryOp& op : symmetry_ops()) {
    const PowerMatrix image = apply_symmetry(chi, op);
    if (image < best.representative) {
      best.representative = image;
      seen_plus = seen_minus = false;
    }
    if (image == best.representative) {
      (op.sign() > 0 ? seen_plus : seen_minus) = true;
    }
  }
  if (!odd) {
    best.sign = 1;
  } else if (seen_plus && seen_minus) {
    best.sign = 0;
  } else {
    best.sign = seen_plus ? 1 : -1;
  }
  return best;
}

}  // namespace rotavg
