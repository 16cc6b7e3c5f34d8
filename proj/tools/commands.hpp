#pragma once

#include <string>

namespace qkcli {

struct KernelOptions {
  int L = 8;
  std::string format = "pbm";
  std::string out;
  bool spectrum = false;
  bool bitsums = false;
};

struct ClassifyOptions {
  std::string input;  // file path; empty or "-" reads stdin
  int L = 0;          // optional cross-check against the parsed board
  bool one_based = false;
  std::string out;
};

struct SolveOptions {
  int L = 0;
  std::string method = "dyadic";
  bool one_based = false;
  std::string out;
};

struct SigmaOptions {
  int L = 0;
  std::string format = "csv";
  std::string out;
};

struct FractalOptions {
  std::string op = "and";
  int bits = 0;
  std::string out;
};

struct OracleOptions {
  int L = 0;
  bool counts = false;
  bool one_based = false;
  std::string out;
};

int cmd_kernel(const KernelOptions& opt);
int cmd_classify(const ClassifyOptions& opt);
int cmd_solve(const SolveOptions& opt);
int cmd_sigma(const SigmaOptions& opt);
int cmd_fractal(const FractalOptions& opt);
int cmd_oracle(const OracleOptions& opt);
int cmd_figures(const std::string& outdir);

// Worker budget: hardware concurrency, capped by QKERNEL_THREADS.
int worker_count();

}  // namespace qkcli
