#pragma once

#include <utility>
#include <vector>

#include "qkernel/bits.hpp"
#include "qkernel/jacobi.hpp"

namespace qkernel {

// The interaction kernel K of an L x L board: the symmetric traceless
// boolean L^2 x L^2 matrix whose row i marks every cell a queen at
// flattened cell i attacks. K splits into the row/column part (cross_part)
// and the diagonal/anti-diagonal part (diag_part), with disjoint supports.
struct InteractionKernel {
  int L = 0;
  BitMatrix matrix;
  BitMatrix cross_part;
  BitMatrix diag_part;
};

// L x L boolean matrix with ones exactly where |i - j| = d, 1 <= d <= L-1.
BitMatrix decimating_matrix(int L, int d);

// Row/column component via the Kronecker sum rule: I (x) Ibar + Ibar (x) I.
BitMatrix cross_kernel(int L);

// Diagonal component as the union over d of k_d (x) k_d.
BitMatrix diag_kernel(int L);

// Kernel assembled by the tensor-algebra route. The two parts have
// provably disjoint supports, so boolean OR coincides with the sum.
InteractionKernel build_kernel(int L);

// Kernel assembled by per-cell neighborhood stamping: for each cell mark
// its row, column and both diagonals, clear the cell itself, flatten.
InteractionKernel build_kernel_direct(int L);

// Checks that the decimating set unions to Ibar_L and that the Kronecker
// route for the diagonal part agrees with the stamped construction.
bool verify_decomposition(int L);

struct RowBitsums {
  std::vector<int> sums;  // per-row popcounts
  int min = 0;
  int max = 0;
};
RowBitsums row_bitsums(const InteractionKernel& k);

struct SpectrumReport {
  std::vector<double> eigenvalues;  // descending
  double max_offdiag_residual = 0.0;
};

// Eigenvalues of K as a real symmetric matrix via cyclic Jacobi sweeps.
// tol <= 0 selects the default 1e-10 * ||K||_F. Throws ConvergenceError
// if the sweep cap is reached first.
SpectrumReport spectrum(const InteractionKernel& k, double tol = 0.0);

// Full eigensystem of the kernel, for diagnostics that need eigenvectors.
EigenResult kernel_eigensystem(const InteractionKernel& k, double tol = 0.0);

}  // namespace qkernel
