#pragma once

#include <vector>

#include "qkernel/board.hpp"
#include "qkernel/kernel.hpp"
#include "qkernel/solutions.hpp"

namespace qkernel {

// Characteristic integer sequences of a kernel: sigma_i has bit j set iff
// K_ij = 1; sigma_bar_i is the L^2-bit ones complement 2^(L^2) - sigma_i - 1.
struct SigmaSequence {
  int L = 0;
  std::vector<BigUint> sigma;
  std::vector<BigUint> sigma_bar;
};

SigmaSequence sigma_sequences(const InteractionKernel& k);

// Bitwise AND of the complemented rows selected by p. For a valid full
// solution this reproduces the solution's own bit vector exactly; in
// general it is the set of cells unattacked from every position in p,
// restricted by the positions' mutual visibility.
BoardConfig decode_dyadic(const SigmaSequence& seq, const PVector& p);

// Complete L-queens enumeration by AND-propagation over complemented rows:
// one queen per board row, running mask M = AND of chosen sigma_bar, a
// candidate cell must have its bit alive in M. A complete choice is
// accepted when the digit sum of M restricted to the chosen cells is L.
// Output is sorted by code nu and is deterministic for any worker count.
SolutionSet solve(const SigmaSequence& seq, int workers = 1);

// Union over all solutions S of the rank-one dyadic S S^T.
struct DyadicClosure {
  int L = 0;
  BitMatrix matrix;
};
DyadicClosure dyadic_closure(const SolutionSet& solutions);

}  // namespace qkernel
