#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"N-queens interaction kernel toolkit"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;  // reserved for randomized sweeps; accepted everywhere
  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "Seed for randomized sweeps (reserved)");
  };

  qkcli::KernelOptions kopt;
  auto* kernel = app.add_subcommand(
      "kernel", "Build the interaction kernel and export image/CSV/JSON");
  kernel->add_option("--size,-L", kopt.L, "Board side length")->required();
  kernel->add_option("--format", kopt.format, "pbm, csv or json")
      ->default_val("pbm");
  kernel->add_option("--out", kopt.out, "Output directory (default: stdout)");
  kernel->add_flag("--spectrum", kopt.spectrum, "Add eigenvalue exports");
  kernel->add_flag("--bitsums", kopt.bitsums, "Add row bitsum exports");
  add_seed(kernel);

  qkcli::ClassifyOptions copt;
  auto* classify = app.add_subcommand(
      "classify", "Judge a placement (board text or JSON) and emit a verdict");
  classify->add_option("input", copt.input, "Board file; '-' or absent: stdin");
  classify->add_option("--size,-L", copt.L, "Expected board size (cross-check)");
  classify->add_flag("--one-based", copt.one_based,
                     "JSON positions are 1-based");
  classify->add_option("--out", copt.out, "Output directory (default: stdout)");
  add_seed(classify);

  qkcli::SolveOptions sopt;
  auto* solve = app.add_subcommand("solve", "Enumerate all full solutions");
  solve->add_option("--size,-L", sopt.L, "Board side length")->required();
  solve->add_option("--method", sopt.method, "dyadic, oracle or both")
      ->default_val("dyadic");
  solve->add_flag("--one-based", sopt.one_based, "Emit 1-based positions");
  solve->add_option("--out", sopt.out, "Output directory (default: stdout)");
  add_seed(solve);

  qkcli::SigmaOptions gopt;
  auto* sigma = app.add_subcommand(
      "sigma", "Emit the kernel's characteristic integer sequence");
  sigma->add_option("--size,-L", gopt.L, "Board side length")->required();
  sigma->add_option("--format", gopt.format, "csv")->default_val("csv");
  sigma->add_option("--out", gopt.out, "Output directory (default: stdout)");
  add_seed(sigma);

  qkcli::FractalOptions fopt;
  auto* fractal = app.add_subcommand(
      "fractal", "Render a bitwise-operator digit-sum table");
  fractal->add_option("--op", fopt.op, "and, or or xor")->default_val("and");
  fractal->add_option("--bits", fopt.bits, "Table order n, dimension 2^n")
      ->required();
  fractal->add_option("--out", fopt.out, "Image file path (.pgm)")->required();
  add_seed(fractal);

  qkcli::OracleOptions oopt;
  auto* oracle = app.add_subcommand(
      "oracle", "Independent backtracking enumeration (ground truth)");
  oracle->add_option("--size,-L", oopt.L, "Board side length")->required();
  oracle->add_flag("--counts", oopt.counts, "Emit counts instead of solutions");
  oracle->add_flag("--one-based", oopt.one_based, "Emit 1-based positions");
  oracle->add_option("--out", oopt.out, "Output directory (default: stdout)");
  add_seed(oracle);

  std::string figdir = "figures";
  auto* figures = app.add_subcommand(
      "figures", "Regenerate all five reference figures with CSV twins");
  figures->add_option("--out", figdir, "Output directory")
      ->default_val("figures");
  add_seed(figures);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    nlohmann::json j{{"command", "parse"}, {"error", e.what()}};
    std::cerr << j.dump() << "\n";
    return e.get_exit_code() == 0 ? 1 : e.get_exit_code();
  }

  if (kernel->parsed()) return qkcli::cmd_kernel(kopt);
  if (classify->parsed()) return qkcli::cmd_classify(copt);
  if (solve->parsed()) return qkcli::cmd_solve(sopt);
  if (sigma->parsed()) return qkcli::cmd_sigma(gopt);
  if (fractal->parsed()) return qkcli::cmd_fractal(fopt);
  if (oracle->parsed()) return qkcli::cmd_oracle(oopt);
  if (figures->parsed()) return qkcli::cmd_figures(figdir);
  return 1;
}
