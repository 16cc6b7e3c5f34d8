// Acceptance gate: nine release criteria, one verdict line each.
// Exit 0 iff every criterion passes inside its runtime budget.

#include <json.hpp>
#include <qkernel/classifier.hpp>
#include <qkernel/fractal.hpp>
#include <qkernel/io.hpp>
#include <qkernel/kernel.hpp>
#include <qkernel/oracle.hpp>
#include <qkernel/sigma.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "subprocess.hpp"

using namespace qkernel;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int g_failures = 0;

void criterion(int id, const std::string& name, double budget_s,
               const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome result;
  try {
    result = body();
  } catch (const std::exception& e) {
    result = {false, std::string("exception: ") + e.what()};
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (budget_s > 0 && elapsed > budget_s) {
    result.pass = false;
    result.detail += (result.detail.empty() ? "" : "; ") + std::string("over budget ") +
                     std::to_string(budget_s) + "s";
  }
  if (!result.pass) ++g_failures;
  std::printf("%s  criterion %d: %s (%.2fs)%s%s\n",
              result.pass ? "PASS" : "FAIL", id, name.c_str(), elapsed,
              result.detail.empty() ? "" : " -- ", result.detail.c_str());
  std::fflush(stdout);
}

bool kernels_equal(const InteractionKernel& a, const InteractionKernel& b) {
  return a.matrix == b.matrix && a.cross_part == b.cross_part &&
         a.diag_part == b.diag_part;
}

// The two reference placements published with the six- and seven-queens
// dyadic figures, as 1-based flattened indices.
const std::vector<int> kSix1Based = {4, 7, 17, 20, 30, 33};
const std::vector<int> kSeven1Based = {2, 11, 15, 28, 33, 38, 48};

PVector shift_down(const std::vector<int>& one_based, int cells) {
  std::vector<int> v;
  for (int q : one_based) v.push_back(q - 1);
  return make_pvector(v, cells);
}

Outcome dual_route_equality() {
  for (int L = 1; L <= 16; ++L)
    if (!kernels_equal(build_kernel(L), build_kernel_direct(L)))
      return {false, "mismatch at L=" + std::to_string(L)};
  return {true, ""};
}

Outcome quadratic_form_exact() {
  // Exhaustive: all 1820 four-queen patterns on the 4x4 board.
  InteractionKernel k4 = build_kernel(4);
  PatternStream stream(4, 4);
  PVector p;
  long long seen = 0;
  while (stream.next(p)) {
    std::uint64_t qf = quadratic_form(k4, BoardConfig::from_positions(4, p));
    if (qf != 2 * static_cast<std::uint64_t>(oracle::attacking_pairs(p, 4)))
      return {false, "exhaustive mismatch"};
    ++seen;
  }
  if (seen != 1820) return {false, "pattern stream short"};

  // Randomized: 1e5 seeded patterns on the 8x8 board, any queen count.
  std::mt19937_64 rng(20250817);
  InteractionKernel k8 = build_kernel(8);
  for (int trial = 0; trial < 100000; ++trial) {
    PVector q = testutil::random_pattern(rng, 64, static_cast<int>(rng() % 17));
    std::uint64_t qf = quadratic_form(k8, BoardConfig::from_positions(8, q));
    if (qf != 2 * static_cast<std::uint64_t>(oracle::attacking_pairs(q, 8)))
      return {false, "random mismatch at trial " + std::to_string(trial)};
  }
  return {true, "1820 exhaustive + 100000 random"};
}

Outcome classifier_equivalence() {
  InteractionKernel k4 = build_kernel(4);
  QKernel q4 = build_q_kernel(k4);
  PatternStream stream(4, 4);
  PVector p;
  while (stream.next(p)) {
    BoardConfig b = BoardConfig::from_positions(4, p);
    ClassifierVerdict v = power_of_two_classify(q4, b);
    if (v.is_nonattacking != (quadratic_form(k4, b) == 0))
      return {false, "exhaustive 4x4 disagreement"};
  }

  // All 7^7 one-queen-per-row placements on the 7x7 board.
  InteractionKernel k7 = build_kernel(7);
  QKernel q7 = build_q_kernel(k7);
  std::vector<int> cols(7, 0);
  long long tuples = 0;
  while (true) {
    std::vector<int> cells(7);
    for (int r = 0; r < 7; ++r) cells[r] = r * 7 + cols[r];
    BoardConfig b = BoardConfig::from_positions(7, make_pvector(cells, 49));
    ClassifierVerdict v = power_of_two_classify(q7, b);
    if (v.is_nonattacking != (quadratic_form(k7, b) == 0))
      return {false, "7x7 disagreement"};
    ++tuples;
    int r = 6;
    while (r >= 0 && ++cols[r] == 7) cols[r--] = 0;
    if (r < 0) break;
  }
  if (tuples != 823543) return {false, "tuple sweep short"};
  return {true, "1820 + 823543 placements"};
}

Outcome dyadic_identity() {
  long long checked = 0;
  for (int L = 4; L <= 8; ++L) {
    SigmaSequence seq = sigma_sequences(build_kernel(L));
    for (const PVector& sol : oracle::enumerate(L).solutions) {
      if (decode_dyadic(seq, sol).positions() != sol)
        return {false, "decode mismatch at L=" + std::to_string(L)};
      ++checked;
    }
  }
  if (checked != 148)
    return {false, "expected 148 solutions, saw " + std::to_string(checked)};
  return {true, "148 solutions reproduced"};
}

Outcome published_placements() {
  struct Case {
    int L;
    const std::vector<int>& one_based;
  };
  for (const Case& c : {Case{6, kSix1Based}, Case{7, kSeven1Based}}) {
    PVector p = shift_down(c.one_based, c.L * c.L);
    if (oracle::attacking_pairs(p, c.L) != 0)
      return {false, "not a valid placement at L=" + std::to_string(c.L)};

    InteractionKernel k = build_kernel(c.L);
    BoardConfig b = BoardConfig::from_positions(c.L, p);
    if (quadratic_form(k, b) != 0) return {false, "quadratic form nonzero"};

    ClassifierVerdict v = power_of_two_classify(build_q_kernel(k), b);
    if (!v.is_full_solution) return {false, "verdict rejects the placement"};
    for (const QueenCode& qc : v.per_queen_codes)
      if (qc.code != pow2(static_cast<unsigned long>(qc.position)))
        return {false, "per-queen code is not a power of two"};

    SigmaSequence seq = sigma_sequences(k);
    if (decode_dyadic(seq, p).positions() != p)
      return {false, "dyadic decode does not reproduce the placement"};

    SolutionSet all = solve(seq);
    if (!std::binary_search(all.solutions.begin(), all.solutions.end(), p,
                            nu_less))
      return {false, "missing from solver output at L=" + std::to_string(c.L)};
  }
  return {true, "both reference placements verified"};
}

Outcome solver_completeness() {
  const long long expected[] = {1, 0, 0, 2, 10, 4, 40, 92, 352};
  for (int L = 1; L <= 9; ++L) {
    SolutionSet mine = solve(sigma_sequences(build_kernel(L)));
    SolutionSet ref = oracle::enumerate(L);
    if (mine.solutions != ref.solutions)
      return {false, "set mismatch at L=" + std::to_string(L)};
    if (static_cast<long long>(mine.solutions.size()) != expected[L - 1])
      return {false, "count mismatch at L=" + std::to_string(L)};
  }
  return {true, "counts 1,0,0,2,10,4,40,92,352"};
}

Outcome fractal_tables() {
  const ExponentMatrix ops[] = {kOpAnd, kOpOr, kOpXor};
  const char* names[] = {"and", "or", "xor"};
  for (int o = 0; o < 3; ++o) {
    for (int n = 1; n <= 10; ++n) {
      FractalTable t = build_table(ops[o], n);
      for (int i = 0; i < t.dim; ++i)
        for (int j = 0; j < t.dim; ++j) {
          std::uint32_t direct = o == 0 ? (i & j) : o == 1 ? (i | j) : (i ^ j);
          if (t.at(i, j) != direct)
            return {false, std::string(names[o]) + " entry mismatch at n=" +
                               std::to_string(n)};
          if (t.s2_at(i, j) !=
              static_cast<std::uint8_t>(__builtin_popcount(direct)))
            return {false, std::string(names[o]) + " digit-sum mismatch"};
        }
      // Quadrant recursion of the digit-sum companion.
      if (n >= 2) {
        FractalTable prev = build_table(ops[o], n - 1);
        const int h = prev.dim;
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b)
            for (int i = 0; i < h; ++i)
              for (int j = 0; j < h; ++j)
                if (t.s2_at(a * h + i, b * h + j) !=
                    prev.s2_at(i, j) + ops[o].m[a][b])
                  return {false, "digit-sum quadrant recursion broken"};
      }
    }
  }
  const bool or_matrix = kOpOr.m[0][0] == 0 && kOpOr.m[0][1] == 1 &&
                         kOpOr.m[1][0] == 1 && kOpOr.m[1][1] == 1;
  if (!or_matrix) return {false, "disjunction exponent matrix wrong"};
  return {true, "and/or/xor, n <= 10 exhaustive"};
}

Outcome spectral_sanity() {
  for (int L = 1; L <= 16; ++L) {
    InteractionKernel k = build_kernel(L);
    SpectrumReport s = spectrum(k);
    double trace = 0.0;
    for (double v : s.eigenvalues) trace += v;
    if (std::abs(trace) > 1e-9 * L * L)
      return {false, "trace too large at L=" + std::to_string(L)};
    double frob = std::sqrt(static_cast<double>(k.matrix.popcount()));
    if (s.max_offdiag_residual > 1e-10 * frob)
      return {false, "residual too large at L=" + std::to_string(L)};
  }
  SpectrumReport two = spectrum(build_kernel(2));
  if (std::abs(two.eigenvalues[0] - 3.0) > 1e-12)
    return {false, "leading eigenvalue off at L=2"};
  for (int i = 1; i < 4; ++i)
    if (std::abs(two.eigenvalues[i] + 1.0) > 1e-12)
      return {false, "degenerate eigenvalue off at L=2"};
  return {true, "L <= 16, plus exact L=2 spectrum"};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Outcome figure_regeneration() {
  fs::path dir = fs::temp_directory_path() / "qkernel_acceptance_figs";
  fs::remove_all(dir);

  auto run = testutil::run_cli("figures --out " + dir.string());
  if (run.exit_code != 0)
    return {false, "figures exited " + std::to_string(run.exit_code)};

  nlohmann::json report = nlohmann::json::parse(run.out);
  if (report["outputs"].size() != 11)
    return {false, "expected 11 artifacts, saw " +
                       std::to_string(report["outputs"].size())};
  for (const auto& out : report["outputs"]) {
    fs::path p = out.get<std::string>();
    if (!fs::exists(p) || fs::file_size(p) == 0)
      return {false, "missing artifact " + p.string()};
  }
  for (const auto& check : report["checks_passed"])
    if (check["passed"] != true)
      return {false, "failed check " + check["name"].get<std::string>()};

  if (slurp(dir / "fig1_kernel_L8.pbm").substr(0, 9) != "P1\n64 64\n")
    return {false, "kernel bitmap header wrong"};
  if (slurp(dir / "fig4_dyadic_L6_L7.pbm").substr(0, 9) != "P1\n85 85\n")
    return {false, "dyadic composite header wrong"};

  std::istringstream logcsv(slurp(dir / "fig5_sigma_L7.csv"));
  std::string line;
  std::getline(logcsv, line);
  int points = 0;
  while (std::getline(logcsv, line)) {
    double lg = std::stod(line.substr(line.find(',') + 1));
    if (!(lg > 0.0 && lg < 49.0)) return {false, "sigma log point out of range"};
    ++points;
  }
  if (points != 49) return {false, "sigma csv point count wrong"};

  // Row bitsums at L=8 through the CLI surface.
  fs::path bdir = fs::temp_directory_path() / "qkernel_acceptance_bitsums";
  fs::remove_all(bdir);
  auto bs = testutil::run_cli("kernel --size 8 --bitsums --out " + bdir.string());
  if (bs.exit_code != 0) return {false, "kernel --bitsums failed"};
  std::istringstream csv(slurp(bdir / "kernel_L8_bitsums.csv"));
  std::getline(csv, line);
  int mn = 1 << 30, mx = 0, rows = 0;
  while (std::getline(csv, line)) {
    int v = std::stoi(line.substr(line.find(',') + 1));
    mn = std::min(mn, v);
    mx = std::max(mx, v);
    ++rows;
  }
  if (rows != 64 || mn != 21 || mx != 27)
    return {false, "L=8 bitsums min/max " + std::to_string(mn) + "/" +
                       std::to_string(mx)};
  return {true, "11 artifacts, all checks, bitsums 21/27"};
}

}  // namespace

int main() {
  criterion(1, "tensor and stamped kernels agree entrywise, L in [1,16]", 10,
            dual_route_equality);
  criterion(2, "quadratic form doubles the attacking-pair count", 30,
            quadratic_form_exact);
  criterion(3, "power-of-two verdict matches the quadratic zero set", 120,
            classifier_equivalence);
  criterion(4, "complement-AND decode reproduces every solution, L in [4,8]", 0,
            dyadic_identity);
  criterion(5, "published six- and seven-queens placements verify end to end",
            0, published_placements);
  criterion(6, "solver set-equals the independent enumeration, L in [1,9]", 60,
            solver_completeness);
  criterion(7, "operator tables match direct bitwise evaluation, n <= 10", 0,
            fractal_tables);
  criterion(8, "spectra are traceless and converged, L <= 16", 0,
            spectral_sanity);
  criterion(9, "figures command regenerates all artifacts with valid checks", 0,
            figure_regeneration);

  if (g_failures == 0) {
    std::printf("ACCEPTANCE: 9/9 criteria passed\n");
    return 0;
  }
  std::printf("ACCEPTANCE: %d/9 criteria FAILED\n", g_failures);
  return 1;
}
