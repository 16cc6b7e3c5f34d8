#pragma once

#include <string>
#include <vector>

#include "qkernel/bits.hpp"

namespace qkernel {

// Sorted list of flattened cell indices of occupied cells.
struct PVector {
  std::vector<int> pos;  // strictly increasing, each in [0, cells)

  int count() const { return static_cast<int>(pos.size()); }
  bool empty() const { return pos.empty(); }
  bool operator==(const PVector&) const = default;
};

// Validates strict monotonicity and range, throws std::invalid_argument.
PVector make_pvector(std::vector<int> positions, int cells);

// Orders p-vectors by their integer code nu = sum of 2^p.
bool nu_less(const PVector& a, const PVector& b);

using BoardGrid = std::vector<std::vector<int>>;  // entries treated as booleans

// A queen placement on an L x L board, stored as the integer code
// nu = sum over occupied cells of 2^(row*L + col). Bit j of the code is
// the j-th entry of the row-major flattened occupancy vector.
class BoardConfig {
 public:
  explicit BoardConfig(int L);
  static BoardConfig from_positions(int L, const PVector& p);
  static BoardConfig from_code(int L, BigUint nu);

  int size() const { return L_; }
  int cells() const { return L_ * L_; }
  const BigUint& code() const { return nu_; }
  bool bit(int i) const { return test_bit(nu_, static_cast<unsigned long>(i)); }
  int queen_count() const { return static_cast<int>(qkernel::popcount(nu_)); }
  PVector positions() const;

  bool operator==(const BoardConfig&) const = default;

 private:
  int L_;
  BigUint nu_;
};

// Row-major flattening of a square 0/1 grid; index = row*L + col.
BoardConfig flatten(const BoardGrid& board);
BoardGrid unflatten(const BoardConfig& b);

// Number of 1-bits in the binary expansion of v.
inline std::size_t digit_sum_s2(const BigUint& v) { return qkernel::popcount(v); }

struct PatternSet {
  int L;
  int N;
  BigUint cardinality;  // binomial(L^2, N)
};
PatternSet pattern_set(int L, int N);

// Lexicographic enumeration of all N-subsets of [0, L^2).
// N > L^2 yields an empty stream; N = 0 yields the single empty pattern.
class PatternStream {
 public:
  PatternStream(int L, int N);
  bool next(PVector& out);

 private:
  int cells_;
  int n_;
  std::vector<int> cur_;
  bool started_ = false;
  bool done_ = false;
};

// Text format: L lines of L characters, 'Q' = queen, '.' = empty.
BoardConfig parse_board_text(const std::string& text);
std::string board_to_text(const BoardConfig& b);

// JSON form: {"L": int, "positions": [int, ...]}.
BoardConfig parse_board_json(const std::string& json, bool one_based = false);
std::string board_to_json(const BoardConfig& b, bool one_based = false);

}  // namespace qkernel
