#pragma once

// Shared fixtures for the test suites.  Everything here recomputes expected
// values through a route independent of the code under test: dense matrix
// products, pairwise geometry, pivot counting.

#include <qkernel/bits.hpp>
#include <qkernel/board.hpp>
#include <qkernel/kernel.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace testutil {

// Uniform random N-subset of [0, cells).
inline qkernel::PVector random_pattern(std::mt19937_64& rng, int cells, int n) {
  std::vector<int> all(cells);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(n);
  std::sort(all.begin(), all.end());
  return qkernel::make_pvector(all, cells);
}

// S^T K S evaluated as a full double-sum over the dense matrix.  Slow and
// deliberately naive; used only to cross-check the pair-walk evaluation.
inline std::uint64_t dense_quadratic(const qkernel::InteractionKernel& k,
                                     const qkernel::PVector& p) {
  std::uint64_t acc = 0;
  for (int i : p.pos)
    for (int j : p.pos)
      if (k.matrix.get(i, j)) ++acc;
  return acc;
}

// Number of eigenvalues of the symmetric matrix `a` (n x n, row-major) that
// are strictly below `shift`, via the inertia of the LDL^T factorization of
// (a - shift*I).  A vanishing pivot signals a singular leading minor, not a
// nearby eigenvalue; nudging it by an amount far below the caller's gap
// leaves the inertia unchanged.
inline int eigenvalues_below(std::vector<double> a, int n, double shift) {
  for (int i = 0; i < n; ++i) a[i * n + i] -= shift;
  const double tiny = 1e-9;
  int negatives = 0;
  for (int k = 0; k < n; ++k) {
    double pivot = a[k * n + k];
    if (std::abs(pivot) < tiny) pivot = (pivot < 0.0 ? -tiny : tiny);
    if (pivot < 0.0) ++negatives;
    for (int i = k + 1; i < n; ++i) {
      double f = a[i * n + k] / pivot;
      for (int j = k; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
    }
  }
  return negatives;
}

}  // namespace testutil
