#pragma once

#include <cstdint>
#include <vector>

#include "qkernel/board.hpp"
#include "qkernel/kernel.hpp"

namespace qkernel {

// Integer-coded kernel: row i stored as the code with bit j set iff
// K_ij = 1. The diagonal is zero by construction, so bit i of row i is 0.
// Never materialized as a dense big-integer matrix.
struct QKernel {
  int L = 0;
  std::vector<BigUint> rows_as_codes;
};

QKernel build_q_kernel(const InteractionKernel& k);

// S^T K S over the integers, computed as pair lookups over the queens.
// Equals twice the number of mutually attacking queen pairs.
std::uint64_t quadratic_form(const InteractionKernel& k, const BoardConfig& s);

struct QueenCode {
  int position;
  BigUint code;  // closed-neighborhood code: (row_p AND S) + 2^p
};

struct ClassifierVerdict {
  std::uint64_t attacking_pairs = 0;
  std::uint64_t quadratic_value = 0;  // always 2 * attacking_pairs
  bool is_nonattacking = false;
  bool is_full_solution = false;
  std::vector<QueenCode> per_queen_codes;
};

// Per-queen power-of-two test: a placement is non-attacking iff every
// closed code equals exactly 2^p, i.e. every open-neighborhood overlap
// with the placement is empty. Agrees with quadratic_form == 0.
// An empty board yields is_nonattacking = true by convention.
ClassifierVerdict power_of_two_classify(const QKernel& q, const BoardConfig& s);

}  // namespace qkernel
