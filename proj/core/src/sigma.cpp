#include "qkernel/sigma.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "qkernel/oracle.hpp"

namespace qkernel {

SigmaSequence sigma_sequences(const InteractionKernel& k) {
  SigmaSequence s;
  s.L = k.L;
  const int n = k.matrix.rows();
  const BigUint mask = low_mask(static_cast<unsigned long>(n));
  s.sigma.reserve(n);
  s.sigma_bar.reserve(n);
  for (int i = 0; i < n; ++i) {
    BigUint row = k.matrix.row_code(i);
    s.sigma_bar.push_back(row ^ mask);
    s.sigma.push_back(std::move(row));
  }
  return s;
}

BoardConfig decode_dyadic(const SigmaSequence& seq, const PVector& p) {
  if (p.empty()) throw std::invalid_argument("decode_dyadic: p must be non-empty");
  const int cells = seq.L * seq.L;
  for (int q : p.pos)
    if (q < 0 || q >= cells)
      throw std::invalid_argument("decode_dyadic: position out of range");
  BigUint acc = seq.sigma_bar[p.pos[0]];
  for (std::size_t i = 1; i < p.pos.size(); ++i) acc &= seq.sigma_bar[p.pos[i]];
  return BoardConfig::from_code(seq.L, std::move(acc));
}

namespace {

void dyadic_dfs(const SigmaSequence& seq, int row, const BigUint& mask,
                std::vector<int>& chosen, std::vector<PVector>& out) {
  const int L = seq.L;
  if (row == L) {
    // Acceptance: the mask restricted to the chosen cells must keep all L
    // bits alive. The incremental pruning makes this hold by construction,
    // but it is the defining predicate, so apply it rather than assume it.
    BigUint nu;
    for (int c : chosen) set_bit(nu, static_cast<unsigned long>(c));
    if (digit_sum_s2(mask & nu) == static_cast<std::size_t>(L))
      out.push_back(PVector{chosen});
    return;
  }
  for (int col = 0; col < L; ++col) {
    const int cell = row * L + col;
    if (!test_bit(mask, static_cast<unsigned long>(cell))) continue;
    chosen.push_back(cell);
    dyadic_dfs(seq, row + 1, mask & seq.sigma_bar[cell], chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

SolutionSet solve(const SigmaSequence& seq, int workers) {
  const int L = seq.L;
  SolutionSet s;
  s.L = L;
  const BigUint all = low_mask(static_cast<unsigned long>(L) * L);

  if (workers <= 0) workers = 1;
  workers = std::min(workers, L);

  if (workers == 1) {
    std::vector<int> chosen;
    dyadic_dfs(seq, 0, all, chosen, s.solutions);
  } else {
    // Partition by first-row column; merge preserves determinism because
    // the final ordering is by nu regardless of worker interleaving.
    std::vector<std::vector<PVector>> parts(L);
    std::vector<std::thread> pool;
    std::atomic<int> next_col{0};
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int col = next_col.fetch_add(1); col < L;
             col = next_col.fetch_add(1)) {
          std::vector<int> chosen{col};
          dyadic_dfs(seq, 1, all & seq.sigma_bar[col], chosen, parts[col]);
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& part : parts)
      for (auto& sol : part) s.solutions.push_back(std::move(sol));
  }

  std::sort(s.solutions.begin(), s.solutions.end(), nu_less);
  oracle::extract_fundamentals(s);
  return s;
}

DyadicClosure dyadic_closure(const SolutionSet& solutions) {
  const int L = solutions.L;
  DyadicClosure c;
  c.L = L;
  c.matrix = BitMatrix(L * L, L * L);
  for (const PVector& s : solutions.solutions)
    for (int i : s.pos)
      for (int j : s.pos) c.matrix.set(i, j);
  return c;
}

}  // namespace qkernel
