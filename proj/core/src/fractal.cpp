#include "qkernel/fractal.hpp"

#include <bit>

namespace qkernel {

FractalTable build_table(const ExponentMatrix& op, int n) {
  if (n < 1 || n > 13)
    throw std::invalid_argument("build_table: n must be in [1, 13]");
  FractalTable t;
  t.bits = n;
  t.dim = 1 << n;
  const std::size_t dim = static_cast<std::size_t>(t.dim);
  t.table.assign(dim * dim, 0);
  t.digit_sums.assign(dim * dim, 0);

  // Quadrant doubling from the 1x1 base. The (0,0) block is the copy
  // source, so it receives its own increment last.
  for (int k = 0; k < n; ++k) {
    const std::size_t blk = std::size_t{1} << k;
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        if (a == 0 && b == 0) continue;
        const std::uint32_t add = static_cast<std::uint32_t>(op.m[a][b]) << k;
        const std::uint8_t sadd = op.m[a][b];
        for (std::size_t i = 0; i < blk; ++i) {
          const std::size_t src = i * dim;
          const std::size_t dst = (a * blk + i) * dim + b * blk;
          for (std::size_t j = 0; j < blk; ++j) {
            t.table[dst + j] = t.table[src + j] + add;
            t.digit_sums[dst + j] =
                static_cast<std::uint8_t>(t.digit_sums[src + j] + sadd);
          }
        }
      }
    }
    if (op.m[0][0]) {
      const std::uint32_t add = static_cast<std::uint32_t>(op.m[0][0]) << k;
      for (std::size_t i = 0; i < blk; ++i)
        for (std::size_t j = 0; j < blk; ++j) {
          t.table[i * dim + j] += add;
          t.digit_sums[i * dim + j] =
              static_cast<std::uint8_t>(t.digit_sums[i * dim + j] + op.m[0][0]);
        }
    }
  }
  return t;
}

std::vector<std::uint8_t> digit_sum_table(const FractalTable& t) {
  std::vector<std::uint8_t> s;
  s.reserve(t.table.size());
  for (std::uint32_t v : t.table)
    s.push_back(static_cast<std::uint8_t>(std::popcount(v)));
  return s;
}

std::uint64_t table_entry(const ExponentMatrix& op, std::uint64_t i,
                          std::uint64_t j) {
  if (op.m[0][0] != 0)
    throw std::invalid_argument("table_entry: op(0,0) must be 0 for unbounded arguments");
  std::uint64_t r = 0;
  const int bits = 64 - std::countl_zero(i | j);
  for (int k = 0; k < bits; ++k)
    r |= static_cast<std::uint64_t>(op.m[(i >> k) & 1][(j >> k) & 1]) << k;
  return r;
}

int hypercube_digit_sum(const SigmaSequence& seq, const PVector& p) {
  if (p.empty())
    throw std::invalid_argument("hypercube_digit_sum: p must be non-empty");
  return static_cast<int>(digit_sum_s2(decode_dyadic(seq, p).code()));
}

}  // namespace qkernel
