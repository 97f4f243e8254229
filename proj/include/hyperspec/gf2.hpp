#pragma once

// Dense GF(2) linear systems with elimination-history certificates.
// Solving M s = b yields either the canonical solution (free variables
// zero) or the set of original rows whose XOR proves inconsistency.

#include <cstdint>
#include <vector>

namespace hyperspec::gf2 {

/// Fixed-width bit vector packed into 64-bit limbs.
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(int bits) : bits_(bits), limbs_((bits + 63) / 64, 0) {}

  [[nodiscard]] int size() const { return bits_; }
  [[nodiscard]] bool get(int i) const {
    return (limbs_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
  }
  void set(int i, bool v) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v)
      limbs_[static_cast<std::size_t>(i) >> 6] |= mask;
    else
      limbs_[static_cast<std::size_t>(i) >> 6] &= ~mask;
  }
  void operator^=(const BitRow& other) {
    for (std::size_t w = 0; w < limbs_.size(); ++w) limbs_[w] ^= other.limbs_[w];
  }
  [[nodiscard]] bool any() const {
    for (const auto w : limbs_)
      if (w != 0) return true;
    return false;
  }
  /// Index of the lowest set bit, -1 if none.
  [[nodiscard]] int lowest_set() const;
  /// Indices of all set bits, ascending.
  [[nodiscard]] std::vector<int> set_bits() const;

 private:
  int bits_ = 0;
  std::vector<std::uint64_t> limbs_;
};

struct SolveResult {
  bool consistent = false;
  /// Canonical solution (free variables forced to zero); empty if inconsistent.
  std::vector<int> support;
  /// Original row indices whose GF(2) sum is the contradiction 0 = 1;
  /// empty if consistent.
  std::vector<int> witness_rows;
};

/// Gauss-Jordan elimination of M s = rhs over GF(2), pivoting on the
/// lowest-index column available. Deterministic for fixed input.
SolveResult solve(std::vector<BitRow> rows, std::vector<bool> rhs, int cols);

}  // namespace hyperspec::gf2
