#include "qkernel/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <set>

namespace qkernel::oracle {

bool attacks(Cell a, Cell b) {
  if (a.row == b.row && a.col == b.col)
    throw std::domain_error("attacks: cells must differ");
  return a.row == b.row || a.col == b.col ||
         std::abs(a.row - b.row) == std::abs(a.col - b.col);
}

bool attacks(int a, int b, int L) {
  return attacks(Cell{a / L, a % L}, Cell{b / L, b % L});
}

long long attacking_pairs(const PVector& p, int L) {
  long long n = 0;
  for (std::size_t i = 0; i < p.pos.size(); ++i)
    for (std::size_t j = i + 1; j < p.pos.size(); ++j)
      if (attacks(p.pos[i], p.pos[j], L)) ++n;
  return n;
}

namespace {

constexpr int kMaxEnumerate = 12;

void backtrack(int L, int row, std::uint32_t cols, std::uint32_t diag1,
               std::uint32_t diag2, std::vector<int>& stack,
               std::vector<PVector>& out) {
  if (row == L) {
    out.push_back(PVector{stack});
    return;
  }
  const std::uint32_t free_cols = ~(cols | diag1 | diag2) & ((1u << L) - 1);
  for (std::uint32_t m = free_cols; m; m &= m - 1) {
    const int col = std::countr_zero(m);
    const std::uint32_t bit = 1u << col;
    stack.push_back(row * L + col);
    backtrack(L, row + 1, cols | bit, (diag1 | bit) << 1, (diag2 | bit) >> 1,
              stack, out);
    stack.pop_back();
  }
}

}  // namespace

std::vector<PVector> symmetry_orbit(const PVector& p, int L) {
  // The 8 maps of the square: 4 rotations, each with and without a mirror.
  auto transform = [L](int cell, int t) {
    int r = cell / L, c = cell % L;
    if (t & 4) c = L - 1 - c;  // mirror
    for (int k = 0; k < (t & 3); ++k) {
      const int nr = c, nc = L - 1 - r;  // quarter turn
      r = nr;
      c = nc;
    }
    return r * L + c;
  };
  std::set<std::vector<int>> seen;
  for (int t = 0; t < 8; ++t) {
    std::vector<int> q;
    q.reserve(p.pos.size());
    for (int cell : p.pos) q.push_back(transform(cell, t));
    std::sort(q.begin(), q.end());
    seen.insert(std::move(q));
  }
  std::vector<PVector> orbit;
  for (const auto& q : seen) orbit.push_back(PVector{q});
  std::sort(orbit.begin(), orbit.end(), nu_less);
  return orbit;
}

void extract_fundamentals(SolutionSet& s) {
  // Walking solutions in ascending nu order, the first member of an
  // unclaimed orbit is that orbit's minimal representative.
  s.fundamental.clear();
  std::set<std::vector<int>> claimed;
  for (const PVector& sol : s.solutions) {
    if (claimed.count(sol.pos)) continue;
    for (const PVector& member : symmetry_orbit(sol, s.L))
      claimed.insert(member.pos);
    s.fundamental.push_back(sol);
  }
}

SolutionSet enumerate(int L) {
  if (L < 1 || L > kMaxEnumerate)
    throw std::invalid_argument("oracle::enumerate: L must be in [1, " +
                                std::to_string(kMaxEnumerate) + "]");
  SolutionSet s;
  s.L = L;
  std::vector<int> stack;
  backtrack(L, 0, 0, 0, 0, stack, s.solutions);
  std::sort(s.solutions.begin(), s.solutions.end(), nu_less);
  extract_fundamentals(s);
  return s;
}

}  // namespace qkernel::oracle
