#pragma once

#include "qkernel/board.hpp"
#include "qkernel/solutions.hpp"

// Independent ground truth for everything the kernel machinery derives.
// Deliberately built on (row, col) geometry and classic backtracking only,
// so agreement with the kernel route is evidence rather than tautology.
namespace qkernel::oracle {

struct Cell {
  int row;
  int col;
};

// True iff queens at a and b attack each other: same row, same column, or
// |drow| == |dcol|. Throws std::domain_error when a == b.
bool attacks(Cell a, Cell b);
bool attacks(int a, int b, int L);  // flattened-index overload

// Number of mutually attacking pairs in a placement.
long long attacking_pairs(const PVector& p, int L);

// All full L-queens solutions via row-by-row backtracking with
// column/diagonal occupancy masks. 1 <= L <= 12.
SolutionSet enumerate(int L);

// The distinct images of p under the 8 D4 board transforms.
std::vector<PVector> symmetry_orbit(const PVector& p, int L);

// Fills s.fundamental with one minimal representative per symmetry orbit.
// Requires s.solutions sorted ascending by code.
void extract_fundamentals(SolutionSet& s);

}  // namespace qkernel::oracle
