#pragma once

#include <cstdint>
#include <vector>

#include "qkernel/board.hpp"
#include "qkernel/sigma.hpp"

namespace qkernel {

// 2x2 truth table of a two-bit logical operation: m[a][b] = op(a, b).
struct ExponentMatrix {
  std::uint8_t m[2][2];
};

inline constexpr ExponentMatrix kOpAnd{{{0, 0}, {0, 1}}};
inline constexpr ExponentMatrix kOpOr{{{0, 1}, {1, 1}}};
inline constexpr ExponentMatrix kOpXor{{{0, 1}, {1, 0}}};

// 2^n x 2^n operator table T_n with entry (i, j) = op(i, j) applied
// bitwise, built by the quadrant recursion: quadrant (a, b) of T_{k+1}
// equals T_k + 2^k * m[a][b], base T_0 = [0]. digit_sums carries the
// companion recursion with +m[a][b] as the increment.
struct FractalTable {
  int bits = 0;  // n
  int dim = 0;   // 2^n
  std::vector<std::uint32_t> table;      // row-major dim*dim
  std::vector<std::uint8_t> digit_sums;  // s2 of each entry

  std::uint32_t at(int i, int j) const {
    return table[static_cast<std::size_t>(i) * dim + j];
  }
  std::uint8_t s2_at(int i, int j) const {
    return digit_sums[static_cast<std::size_t>(i) * dim + j];
  }
};

// Materializes T_n; 1 <= n <= 13 keeps the 4^n-entry table bounded.
FractalTable build_table(const ExponentMatrix& op, int n);

// Direct bitwise evaluation s2(op(i, j)) for every entry, independent of
// the recursion, for cross-checking FractalTable::digit_sums.
std::vector<std::uint8_t> digit_sum_table(const FractalTable& t);

// On-demand entry for arguments beyond the materialization cap.
// Requires m[0][0] = 0, else the value would not be finite.
std::uint64_t table_entry(const ExponentMatrix& op, std::uint64_t i,
                          std::uint64_t j);

// s2 of the AND of the complemented kernel rows selected by p. Equals L
// exactly when p is a valid full solution: the acceptance predicate the
// solver's row-by-row composition uses.
int hypercube_digit_sum(const SigmaSequence& seq, const PVector& p);

}  // namespace qkernel
