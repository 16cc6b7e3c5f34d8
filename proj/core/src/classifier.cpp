#include "qkernel/classifier.hpp"

namespace qkernel {

QKernel build_q_kernel(const InteractionKernel& k) {
  QKernel q;
  q.L = k.L;
  const int n = k.matrix.rows();
  q.rows_as_codes.reserve(n);
  for (int i = 0; i < n; ++i) q.rows_as_codes.push_back(k.matrix.row_code(i));
  return q;
}

std::uint64_t quadratic_form(const InteractionKernel& k, const BoardConfig& s) {
  if (s.size() != k.L)
    throw std::invalid_argument("quadratic_form: board size does not match kernel");
  const std::vector<int> p = s.positions().pos;
  std::uint64_t pairs = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (k.matrix.get(p[i], p[j])) ++pairs;
  return 2 * pairs;
}

ClassifierVerdict power_of_two_classify(const QKernel& q, const BoardConfig& s) {
  if (s.size() != q.L)
    throw std::invalid_argument("power_of_two_classify: board size does not match kernel");
  ClassifierVerdict v;
  std::uint64_t overlap_bits = 0;
  bool clean = true;
  for (int p : s.positions().pos) {
    BigUint overlap = q.rows_as_codes[p] & s.code();
    overlap_bits += qkernel::popcount(overlap);
    if (overlap != 0) clean = false;
    v.per_queen_codes.push_back(
        QueenCode{p, overlap + pow2(static_cast<unsigned long>(p))});
  }
  // Each attacking pair contributes one bit to each member's overlap.
  v.quadratic_value = overlap_bits;
  v.attacking_pairs = overlap_bits / 2;
  v.is_nonattacking = clean;
  v.is_full_solution = clean && s.queen_count() == s.size();
  return v;
}

}  // namespace qkernel
