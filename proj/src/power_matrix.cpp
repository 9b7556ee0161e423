#include "rotavg/power_matrix.hpp"

#include <numeric>

#include "rotavg/errors.hpp"

namespace rotavg {

PowerMatrix::PowerMatrix(const Entries& row_major) : entries_(row_major) {
  for (int e : entries_) {
    if (e < 0) throw PreconditionError("power matrix entries must be nonnegative");
  }
}

PowerMatrix::PowerMatrix(std::initializer_list<std::initializer_list<int>> rows) {
  if (rows.size() != 3) throw PreconditionError("power matrix needs 3 rows");
  int i = 0;
  for (const auto& row : rows) {
    if (row.size() != 3) throw PreconditionError("power matrix rows need 3 entries");
    for (int e : row) {
      if (e < 0) throw PreconditionError("power matrix entries must be nonnegative");
      entries_[i++] = e;
    }
  }
}

int PowerMatrix::rank() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

int PowerMatrix::row_sum(int row) const {
  return entries_[3 * row] + entries_[3 * row + 1] + entries_[3 * row + 2];
}

int PowerMatrix::col_sum(int col) const { return entries_[col] + entries_[col + 3] + entries_[col + 6]; }

PowerMatrix PowerMatrix::transposed() const {
  PowerMatrix t;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) t.entries_[3 * j + i] = entries_[3 * i + j];
  }
  return t;
}

std::string PowerMatrix::str() const {
  std::string s = "[";
  for (int i = 0; i < 3; ++i) {
    s += i ? ",[" : "[";
    for (int j = 0; j < 3; ++j) {
      if (j) s += ',';
      s += std::to_string((*this)(i, j));
    }
    s += ']';
  }
  return s + "]";
}

PowerMatrix from_multi_index(const MultiIndex& m) {
  if (m.lab.size() != m.mol.size()) {
    throw PreconditionError("lab and molecular index lists differ in length");
  }
  PowerMatrix::Entries e{};
  for (std::size_t k = 0; k < m.lab.size(); ++k) {
    const int i = m.lab[k];
    const int l = m.mol[k];
    if (i < 1 || i > 3 || l < 1 || l > 3) throw PreconditionError("indices must lie in {1,2,3}");
    ++e[3 * (i - 1) + (l - 1)];
  }
  return PowerMatrix(e);
}

bool selection_rule(const PowerMatrix& chi) {
  const int parity = chi.rank() & 1;
  for (int k = 0; k < 3; ++k) {
    if ((chi.row_sum(k) & 1) != parity || (chi.col_sum(k) & 1) != parity) return false;
  }
  return true;
}

long determinant(const PowerMatrix& chi) {
  auto a = [&](int i, int j) { return static_cast<long>(chi(i, j)); };
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

}  // namespace rotavg
