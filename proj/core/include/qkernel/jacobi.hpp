#pragma once

#include <stdexcept>
#include <vector>

namespace qkernel {

struct ConvergenceError : std::runtime_error {
  double residual;
  explicit ConvergenceError(double r)
      : std::runtime_error("jacobi: off-diagonal residual " + std::to_string(r) +
                           " did not reach tolerance within the sweep cap"),
        residual(r) {}
};

struct EigenResult {
  int n = 0;
  std::vector<double> values;   // descending
  std::vector<double> vectors;  // column-major; column k pairs with values[k]
  double offdiag_residual = 0.0;
  int sweeps = 0;
};

// Cyclic Jacobi sweeps on a dense symmetric matrix (row-major, n*n).
// Converges when the off-diagonal Frobenius norm drops below tol.
// Throws ConvergenceError if the sweep cap is exhausted first.
EigenResult jacobi_symmetric(std::vector<double> a, int n, double tol,
                             int max_sweeps = 100);

}  // namespace qkernel
