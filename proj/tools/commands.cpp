#include "commands.hpp"

#include <qkernel/classifier.hpp>
#include <qkernel/fractal.hpp>
#include <qkernel/io.hpp>
#include <qkernel/kernel.hpp>
#include <qkernel/oracle.hpp>
#include <qkernel/sigma.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include "plot.hpp"
#include "report.hpp"

namespace qkcli {

namespace fs = std::filesystem;
using namespace qkernel;

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t ms_since(Clock::time_point start) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
          .count());
}

// Named artifact queue: flushed either to files under --out (recorded in
// the report) or concatenated to stdout when no --out was given.
struct Artifacts {
  std::vector<std::pair<std::string, std::string>> items;

  void add(std::string name, std::string content) {
    items.emplace_back(std::move(name), std::move(content));
  }
  void flush(const std::string& out, RunReport& report) const {
    if (out.empty()) {
      for (const auto& [name, content] : items) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << '\n';
      }
      return;
    }
    for (const auto& [name, content] : items) {
      fs::path path = fs::path(out) / name;
      write_file(path, content);
      report.outputs.push_back(path.string());
    }
  }
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input: " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

double frobenius(const InteractionKernel& k) {
  return std::sqrt(static_cast<double>(k.matrix.popcount()));
}

bool kernels_equal(const InteractionKernel& a, const InteractionKernel& b) {
  return a.matrix == b.matrix && a.cross_part == b.cross_part &&
         a.diag_part == b.diag_part;
}

std::string bounds_csv(int max_L) {
  std::string out = "L,min,max\n";
  for (int l = 4; l <= max_L; ++l) {
    RowBitsums r = row_bitsums(build_kernel(l));
    out += std::to_string(l) + "," + std::to_string(r.min) + "," +
           std::to_string(r.max) + "\n";
  }
  return out;
}

nlohmann::json pvector_json(const PVector& p, bool one_based) {
  nlohmann::json row = nlohmann::json::array();
  for (int q : p.pos) row.push_back(one_based ? q + 1 : q);
  return row;
}

}  // namespace

int worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  int workers = hw ? static_cast<int>(hw) : 1;
  if (const char* env = std::getenv("QKERNEL_THREADS")) {
    char* end = nullptr;
    long cap = std::strtol(env, &end, 10);
    if (end && *end == '\0' && cap >= 1)
      workers = std::min(workers, static_cast<int>(cap));
  }
  return workers;
}

int cmd_kernel(const KernelOptions& opt) {
  const auto start = Clock::now();
  RunReport report;
  report.command = "kernel";
  report.parameters = {{"size", std::to_string(opt.L)}, {"format", opt.format}};
  try {
    if (opt.L < 1 || opt.L > 64)
      return fail("kernel", "size must be in [1, 64]");
    if (opt.spectrum && opt.L > 16)
      return fail("kernel", "spectrum is limited to size <= 16");
    if (opt.format != "pbm" && opt.format != "csv" && opt.format != "json")
      return fail("kernel", "format must be pbm, csv or json");

    InteractionKernel k = build_kernel(opt.L);
    report.check("dual_route_equal", kernels_equal(k, build_kernel_direct(opt.L)));
    report.check("symmetric", k.matrix.symmetric());
    report.check("traceless", k.matrix.zero_diagonal());
    report.check("parts_disjoint", k.cross_part.disjoint(k.diag_part));

    Artifacts artifacts;
    const std::string stem = "kernel_L" + std::to_string(opt.L);
    if (opt.format == "pbm")
      artifacts.add(stem + ".pbm", to_pbm(k.matrix));
    else if (opt.format == "csv")
      artifacts.add(stem + ".csv", matrix_csv(k.matrix));
    else
      artifacts.add(stem + ".json", kernel_json(k));

    if (opt.spectrum) {
      SpectrumReport s = spectrum(k);
      double trace = 0.0;
      for (double v : s.eigenvalues) trace += v;
      report.check("spectrum_traceless",
                   std::abs(trace) <= 1e-9 * opt.L * opt.L);
      report.check("spectrum_converged",
                   s.max_offdiag_residual <= 1e-10 * frobenius(k));
      artifacts.add(stem + "_spectrum.json", spectrum_json(opt.L, s));
      artifacts.add(stem + "_spectrum.csv", spectrum_csv(s));
    }

    if (opt.bitsums) {
      RowBitsums r = row_bitsums(k);
      bool heavy = true;
      for (int s : r.sums) heavy = heavy && (opt.L < 2 || s > opt.L);
      report.check("rows_outweigh_solutions", heavy);
      artifacts.add(stem + "_bitsums.csv", bitsums_csv(r));
      if (opt.L >= 4)
        artifacts.add(stem + "_bitsum_bounds.csv",
                      bounds_csv(std::min(opt.L, 16)));
    }

    artifacts.flush(opt.out, report);
  } catch (const std::exception& e) {
    return fail("kernel", e.what());
  }
  return finish(report, ms_since(start));
}

int cmd_classify(const ClassifyOptions& opt) {
  const auto start = Clock::now();
  RunReport report;
  report.command = "classify";
  try {
    std::string text = read_input(opt.input);
    const auto head = text.find_first_not_of(" \t\r\n");
    if (head == std::string::npos) return fail("classify", "empty input");

    BoardConfig board = text[head] == '{'
                            ? parse_board_json(text, opt.one_based)
                            : parse_board_text(text);
    if (opt.L > 0 && opt.L != board.size())
      return fail("classify", "--size " + std::to_string(opt.L) +
                                  " does not match the board size " +
                                  std::to_string(board.size()));

    InteractionKernel k = build_kernel(board.size());
    ClassifierVerdict v = power_of_two_classify(build_q_kernel(k), board);
    report.check("quadratic_form_agrees",
                 v.quadratic_value == quadratic_form(k, board));
    report.parameters = {{"L", std::to_string(board.size())},
                         {"queens", std::to_string(board.queen_count())}};

    Artifacts artifacts;
    artifacts.add("verdict_L" + std::to_string(board.size()) + ".json",
                  verdict_json(board, v));
    artifacts.flush(opt.out, report);
  } catch (const std::exception& e) {
    return fail("classify", e.what());
  }
  return finish(report, ms_since(start));
}

int cmd_solve(const SolveOptions& opt) {
  const auto start = Clock::now();
  RunReport report;
  report.command = "solve";
  report.parameters = {{"size", std::to_string(opt.L)}, {"method", opt.method}};
  try {
    if (opt.method != "dyadic" && opt.method != "oracle" && opt.method != "both")
      return fail("solve", "method must be dyadic, oracle or both");
    if (opt.L < 1) return fail("solve", "size must be positive");
    const int cap = opt.method == "both" ? 10 : 12;
    if (opt.L > cap)
      return fail("solve", "method " + opt.method + " is limited to size <= " +
                               std::to_string(cap));

    SolutionSet result;
    if (opt.method == "oracle") {
      result = oracle::enumerate(opt.L);
    } else {
      SigmaSequence seq = sigma_sequences(build_kernel(opt.L));
      result = solve(seq, worker_count());
      if (opt.method == "both") {
        SolutionSet ref = oracle::enumerate(opt.L);
        if (result.solutions != ref.solutions) {
          nlohmann::json only_dyadic = nlohmann::json::array();
          nlohmann::json only_oracle = nlohmann::json::array();
          for (const PVector& p : result.solutions)
            if (!std::binary_search(ref.solutions.begin(), ref.solutions.end(),
                                    p, nu_less))
              only_dyadic.push_back(pvector_json(p, opt.one_based));
          for (const PVector& p : ref.solutions)
            if (!std::binary_search(result.solutions.begin(),
                                    result.solutions.end(), p, nu_less))
              only_oracle.push_back(pvector_json(p, opt.one_based));
          return fail("solve", "solution sets differ",
                      {{"only_dyadic", only_dyadic},
                       {"only_oracle", only_oracle}});
        }
        report.check("sets_equal", true);
      }
    }

    bool valid = true, ordered = true;
    for (std::size_t i = 0; i < result.solutions.size(); ++i) {
      const PVector& p = result.solutions[i];
      valid = valid && p.count() == opt.L &&
              oracle::attacking_pairs(p, opt.L) == 0;
      if (i > 0) ordered = ordered && nu_less(result.solutions[i - 1], p);
    }
    report.check("solutions_valid", valid);
    report.check("ordered_by_code", ordered);

    Artifacts artifacts;
    artifacts.add("solutions_L" + std::to_string(opt.L) + ".json",
                  solutions_json(result, opt.one_based));
    artifacts.flush(opt.out, report);
  } catch (const std::exception& e) {
    return fail("solve", e.what());
  }
  return finish(report, ms_since(start));
}

int cmd_sigma(const SigmaOptions& opt) {
  const auto start = Clock::now();
  RunReport report;
  report.command = "sigma";
  report.parameters = {{"size", std::to_string(opt.L)}, {"format", opt.format}};
  try {
    if (opt.L < 1 || opt.L > 64) return fail("sigma", "size must be in [1, 64]");
    if (opt.format != "csv") return fail("sigma", "format must be csv");

    SigmaSequence s = sigma_sequences(build_kernel(opt.L));
    const BigUint full = low_mask(static_cast<unsigned long>(opt.L) * opt.L);
    bool complements = true;
    for (std::size_t i = 0; i < s.sigma.size(); ++i)
      complements = complements && (s.sigma[i] + s.sigma_bar[i] == full);
    report.check("complement_identity", complements);
    report.check("row_count",
                 s.sigma.size() == static_cast<std::size_t>(opt.L) * opt.L);

    Artifacts artifacts;
    artifacts.add("sigma_L" + std::to_string(opt.L) + ".csv", sigma_csv(s));
    artifacts.flush(opt.out, report);
  } catch (const std::exception& e) {
    return fail("sigma", e.what());
  }
  return finish(report, ms_since(start));
}

int cmd_fractal(const FractalOptions& opt) {
  const auto start = Clock::now();
  RunReport report;
  report.command = "fractal";
  report.parameters = {{"op", opt.op}, {"bits", std::to_string(opt.bits)}};
  try {
    const ExponentMatrix* op = nullptr;
    if (opt.op == "and") op = &kOpAnd;
    else if (opt.op == "or") op = &kOpOr;
    else if (opt.op == "xor") op = &kOpXor;
    else return fail("fractal", "op must be and, or or xor");
    if (opt.bits < 1 || opt.bits > 13)
      return fail("fractal", "bits must be in [1, 13]");
    if (opt.out.empty())
      return fail("fractal", "--out is required (image file path)");

    FractalTable t = build_table(*op, opt.bits);
    report.check("digit_sums_match_direct", t.digit_sums == digit_sum_table(t));

    std::vector<std::uint8_t> gray(t.digit_sums.begin(), t.digit_sums.end());
    write_file(opt.out, to_pgm(gray, t.dim, t.dim, opt.bits));
    report.outputs.push_back(opt.out);

    std::string csv;
    csv.reserve(static_cast<std::size_t>(t.dim) * t.dim * 3);
    for (int i = 0; i < t.dim; ++i) {
      for (int j = 0; j < t.dim; ++j) {
        if (j) csv.push_back(',');
        csv += std::to_string(t.at(i, j));
      }
      csv.push_back('\n');
    }
    fs::path csv_path = fs::path(opt.out).replace_extension(".csv");
    write_file(csv_path, csv);
    report.outputs.push_back(csv_path.string());
  } catch (const std::exception& e) {
    return fail("fractal", e.what());
  }
  return finish(report, ms_since(start));
}

int cmd_oracle(const OracleOptions& opt) {
  const auto start = Clock::now();
  RunReport report;
  report.command = "oracle";
  report.parameters = {{"size", std::to_string(opt.L)}};
  try {
    if (opt.L < 1 || opt.L > 12) return fail("oracle", "size must be in [1, 12]");
    SolutionSet s = oracle::enumerate(opt.L);

    bool valid = true;
    for (const PVector& p : s.solutions)
      valid = valid && oracle::attacking_pairs(p, opt.L) == 0;
    report.check("solutions_valid", valid);
    report.check("fundamental_subset",
                 s.fundamental.size() <= s.solutions.size());

    Artifacts artifacts;
    if (opt.counts)
      artifacts.add("counts_L" + std::to_string(opt.L) + ".json", counts_json(s));
    else
      artifacts.add("solutions_L" + std::to_string(opt.L) + ".json",
                    solutions_json(s, opt.one_based));
    artifacts.flush(opt.out, report);
  } catch (const std::exception& e) {
    return fail("oracle", e.what());
  }
  return finish(report, ms_since(start));
}

int cmd_figures(const std::string& outdir) {
  const auto start = Clock::now();
  RunReport report;
  report.command = "figures";
  report.parameters = {{"out", outdir}};
  try {
    nlohmann::json artifacts = nlohmann::json::array();
    auto emit = [&](const std::string& name, const std::string& image,
                    const std::string& image_data, const std::string& csv,
                    const std::string& csv_data) {
      write_file(fs::path(outdir) / image, image_data);
      write_file(fs::path(outdir) / csv, csv_data);
      report.outputs.push_back((fs::path(outdir) / image).string());
      report.outputs.push_back((fs::path(outdir) / csv).string());
      artifacts.push_back({{"name", name}, {"image", image}, {"csv", csv}});
    };

    // Band-pattern image of the full kernel at L = 8.
    InteractionKernel k8 = build_kernel(8);
    report.check("kernel_dual_route", kernels_equal(k8, build_kernel_direct(8)));
    emit("kernel_L8", "fig1_kernel_L8.pbm", to_pbm(k8.matrix),
         "fig1_kernel_L8.csv", matrix_csv(k8.matrix));

    // Eigenvalue bar chart of the same kernel.
    SpectrumReport sp = spectrum(k8);
    double trace = 0.0;
    for (double v : sp.eigenvalues) trace += v;
    report.check("spectrum_traceless", std::abs(trace) <= 1e-9 * 64);
    report.check("spectrum_converged",
                 sp.max_offdiag_residual <= 1e-10 * frobenius(k8));
    emit("spectrum_L8", "fig2_spectrum_L8.pgm",
         to_pgm(bar_chart(sp.eigenvalues, 400, 300), 400, 300, 255),
         "fig2_spectrum_L8.csv", spectrum_csv(sp));

    // Row-bitsum profile at L = 16 plus the min/max sweep over L = 4..16.
    RowBitsums r16 = row_bitsums(build_kernel(16));
    report.check("bitsum_bounds_L16", r16.min == 45 && r16.max == 59);
    std::string tidy = "series,x,y\n";
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < r16.sums.size(); ++i) {
      tidy += "profile," + std::to_string(i) + "," +
              std::to_string(r16.sums[i]) + "\n";
      xs.push_back(static_cast<double>(i));
      ys.push_back(r16.sums[i]);
    }
    for (int l = 4; l <= 16; ++l) {
      RowBitsums r = row_bitsums(build_kernel(l));
      tidy += "min," + std::to_string(l) + "," + std::to_string(r.min) + "\n";
      tidy += "max," + std::to_string(l) + "," + std::to_string(r.max) + "\n";
    }
    emit("bitsums_L16", "fig3_bitsums_L16.pgm",
         to_pgm(scatter_plot(xs, ys, 600, 300), 600, 300, 255),
         "fig3_bitsums_L16.csv", tidy);

    // Block-diagonal composite of the two dyadic closures. Solutions come
    // from the independent enumerator; the closure itself is the union of
    // the solutions' rank-one dyadics.
    SolutionSet s6 = oracle::enumerate(6);
    SolutionSet s7 = oracle::enumerate(7);
    DyadicClosure c6 = dyadic_closure(s6);
    DyadicClosure c7 = dyadic_closure(s7);
    InteractionKernel k6 = build_kernel(6);
    InteractionKernel k7 = build_kernel(7);
    report.check("closures_in_kernel_complement",
                 c6.matrix.disjoint(k6.matrix) && c7.matrix.disjoint(k7.matrix));

    BitMatrix composite(36 + 49, 36 + 49);
    std::string sparse = "panel,row,col\n";
    for (int i = 0; i < 36; ++i)
      for (int j = 0; j < 36; ++j)
        if (c6.matrix.get(i, j)) {
          composite.set(i, j);
          sparse += "L6," + std::to_string(i) + "," + std::to_string(j) + "\n";
        }
    for (int i = 0; i < 49; ++i)
      for (int j = 0; j < 49; ++j)
        if (c7.matrix.get(i, j)) {
          composite.set(36 + i, 36 + j);
          sparse += "L7," + std::to_string(i) + "," + std::to_string(j) + "\n";
        }
    emit("dyadic_L6_L7", "fig4_dyadic_L6_L7.pbm", to_pbm(composite),
         "fig4_dyadic_L6_L7.csv", sparse);

    // Log-scale profile of the characteristic sequence at L = 7.
    SigmaSequence seq7 = sigma_sequences(k7);
    std::string logcsv = "i,log2_sigma\n";
    std::vector<double> sx, sy;
    bool positive = true, bounded = true;
    for (std::size_t i = 0; i < seq7.sigma.size(); ++i) {
      positive = positive && seq7.sigma[i] > 0;
      double lg = log2_value(seq7.sigma[i]);
      bounded = bounded && lg < 49.0;
      logcsv += std::to_string(i) + "," + nlohmann::json(lg).dump() + "\n";
      sx.push_back(static_cast<double>(i));
      sy.push_back(lg);
    }
    report.check("sigma_points", seq7.sigma.size() == 49);
    report.check("sigma_positive", positive);
    report.check("sigma_log_bounded", bounded);
    emit("sigma_L7", "fig5_sigma_L7.pgm",
         to_pgm(scatter_plot(sx, sy, 400, 300), 400, 300, 255),
         "fig5_sigma_L7.csv", logcsv);

    nlohmann::json manifest;
    manifest["artifacts"] = std::move(artifacts);
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& [name, ok] : report.checks)
      checks.push_back({{"name", name}, {"passed", ok}});
    manifest["checks"] = std::move(checks);
    fs::path mpath = fs::path(outdir) / "manifest.json";
    write_file(mpath, manifest.dump(2) + "\n");
    report.outputs.push_back(mpath.string());
  } catch (const std::exception& e) {
    return fail("figures", e.what());
  }
  return finish(report, ms_since(start));
}

}  // namespace qkcli
