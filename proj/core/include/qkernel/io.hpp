#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qkernel/board.hpp"
#include "qkernel/classifier.hpp"
#include "qkernel/kernel.hpp"
#include "qkernel/sigma.hpp"
#include "qkernel/solutions.hpp"

namespace qkernel {

// Plain portable bitmap (P1), 1 = black = set entry.
std::string to_pbm(const BitMatrix& m);

// Binary portable graymap (P5), maxval <= 255.
std::string to_pgm(const std::vector<std::uint8_t>& gray, int width, int height,
                   int maxval);

std::string matrix_csv(const BitMatrix& m);
std::string kernel_json(const InteractionKernel& k);
std::string bitsums_csv(const RowBitsums& r);
std::string spectrum_json(int L, const SpectrumReport& s);
std::string spectrum_csv(const SpectrumReport& s);

// i,sigma_decimal,sigma_hex,popcount
std::string sigma_csv(const SigmaSequence& s);

std::string solutions_json(const SolutionSet& s, bool one_based = false);
std::string counts_json(const SolutionSet& s);
std::string verdict_json(const BoardConfig& board, const ClassifierVerdict& v);

}  // namespace qkernel
