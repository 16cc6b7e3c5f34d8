#pragma once

#include <vector>

#include "qkernel/board.hpp"

namespace qkernel {

// Canonical ordered set of full L-queens placements.
struct SolutionSet {
  int L = 0;
  std::vector<PVector> solutions;    // ascending by code nu
  std::vector<PVector> fundamental;  // min-nu representative per D4 orbit
};

}  // namespace qkernel
