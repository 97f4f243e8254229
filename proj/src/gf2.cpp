#include "hyperspec/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace hyperspec::gf2 {

int BitRow::lowest_set() const {
  for (std::size_t w = 0; w < limbs_.size(); ++w) {
    if (limbs_[w] != 0) return static_cast<int>(w * 64) + std::countr_zero(limbs_[w]);
  }
  return -1;
}

std::vector<int> BitRow::set_bits() const {
  std::vector<int> out;
  for (std::size_t w = 0; w < limbs_.size(); ++w) {
    std::uint64_t v = limbs_[w];
    while (v != 0) {
      out.push_back(static_cast<int>(w * 64) + std::countr_zero(v));
      v &= v - 1;
    }
  }
  return out;
}

SolveResult solve(std::vector<BitRow> rows, std::vector<bool> rhs, int cols) {
  const int m = static_cast<int>(rows.size());
  if (rhs.size() != rows.size()) throw std::invalid_argument("gf2::solve: rhs size mismatch");

  // history[r] tracks which original rows were XORed into row r.
  std::vector<BitRow> history(m, BitRow(m));
  for (int r = 0; r < m; ++r) history[r].set(r, true);

  std::vector<bool> is_pivot_row(m, false);
  std::vector<int> pivot_row_of_col(cols, -1);

  for (int c = 0; c < cols; ++c) {
    int pivot = -1;
    for (int r = 0; r < m; ++r) {
      if (!is_pivot_row[r] && rows[r].get(c)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    is_pivot_row[pivot] = true;
    pivot_row_of_col[c] = pivot;
    for (int r = 0; r < m; ++r) {
      if (r != pivot && rows[r].get(c)) {
        rows[r] ^= rows[pivot];
        history[r] ^= history[pivot];
        rhs[r] = rhs[r] ^ rhs[pivot];
      }
    }
  }

  // Non-pivot rows are now zero in M; any with rhs = 1 proves infeasibility.
  for (int r = 0; r < m; ++r) {
    if (!is_pivot_row[r] && rhs[r]) {
      SolveResult res;
      res.consistent = false;
      res.witness_rows = history[r].set_bits();
      return res;
    }
  }

  SolveResult res;
  res.consistent = true;
  for (int c = 0; c < cols; ++c) {
    const int r = pivot_row_of_col[c];
    if (r >= 0 && rhs[r]) res.support.push_back(c);
  }
  return res;
}

}  // namespace hyperspec::gf2
