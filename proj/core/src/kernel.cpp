#include "qkernel/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace qkernel {

BitMatrix decimating_matrix(int L, int d) {
  if (L < 1) throw std::invalid_argument("decimating_matrix: L must be positive");
  if (d < 1 || d > L - 1)
    throw std::invalid_argument("decimating_matrix: d must be in [1, L-1]");
  BitMatrix m(L, L);
  for (int i = 0; i + d < L; ++i) {
    m.set(i, i + d);
    m.set(i + d, i);
  }
  return m;
}

BitMatrix cross_kernel(int L) {
  if (L < 1) throw std::invalid_argument("cross_kernel: L must be positive");
  const BitMatrix id = BitMatrix::identity(L);
  const BitMatrix ibar = BitMatrix::complement_identity(L);
  return kron(id, ibar) | kron(ibar, id);
}

BitMatrix diag_kernel(int L) {
  if (L < 1) throw std::invalid_argument("diag_kernel: L must be positive");
  BitMatrix k(L * L, L * L);
  for (int d = 1; d < L; ++d) {
    const BitMatrix kd = decimating_matrix(L, d);
    k = k | kron(kd, kd);
  }
  return k;
}

InteractionKernel build_kernel(int L) {
  InteractionKernel k;
  k.L = L;
  k.cross_part = cross_kernel(L);
  k.diag_part = diag_kernel(L);
  k.matrix = k.cross_part | k.diag_part;
  return k;
}

InteractionKernel build_kernel_direct(int L) {
  if (L < 1) throw std::invalid_argument("build_kernel_direct: L must be positive");
  const int n = L * L;
  InteractionKernel k;
  k.L = L;
  k.cross_part = BitMatrix(n, n);
  k.diag_part = BitMatrix(n, n);
  for (int i = 0; i < L; ++i) {
    for (int j = 0; j < L; ++j) {
      const int cell = i * L + j;
      for (int c = 0; c < L; ++c)
        if (c != j) k.cross_part.set(cell, i * L + c);
      for (int r = 0; r < L; ++r)
        if (r != i) k.cross_part.set(cell, r * L + j);
      for (int r = 0; r < L; ++r) {
        if (r == i) continue;
        const int dj = r - i;
        if (j + dj >= 0 && j + dj < L) k.diag_part.set(cell, r * L + j + dj);
        if (j - dj >= 0 && j - dj < L) k.diag_part.set(cell, r * L + j - dj);
      }
    }
  }
  k.matrix = k.cross_part | k.diag_part;
  return k;
}

bool verify_decomposition(int L) {
  if (L < 2) throw std::invalid_argument("verify_decomposition: L must be >= 2");
  BitMatrix acc(L, L);
  for (int d = 1; d < L; ++d) acc = acc | decimating_matrix(L, d);
  if (!(acc == BitMatrix::complement_identity(L))) return false;
  return diag_kernel(L) == build_kernel_direct(L).diag_part;
}

RowBitsums row_bitsums(const InteractionKernel& k) {
  RowBitsums r;
  const int n = k.matrix.rows();
  r.sums.reserve(n);
  for (int i = 0; i < n; ++i) r.sums.push_back(k.matrix.row_popcount(i));
  r.min = r.sums.empty() ? 0 : *std::min_element(r.sums.begin(), r.sums.end());
  r.max = r.sums.empty() ? 0 : *std::max_element(r.sums.begin(), r.sums.end());
  return r;
}

EigenResult kernel_eigensystem(const InteractionKernel& k, double tol) {
  const int n = k.matrix.rows();
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (k.matrix.get(i, j)) a[static_cast<std::size_t>(i) * n + j] = 1.0;
  if (tol <= 0.0) {
    const double frob = std::sqrt(static_cast<double>(k.matrix.popcount()));
    tol = 1e-10 * frob;
  }
  return jacobi_symmetric(std::move(a), n, tol);
}

SpectrumReport spectrum(const InteractionKernel& k, double tol) {
  EigenResult e = kernel_eigensystem(k, tol);
  return SpectrumReport{std::move(e.values), e.offdiag_residual};
}

}  // namespace qkernel
