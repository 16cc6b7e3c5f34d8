#include "qkernel/io.hpp"

#include <json.hpp>

namespace qkernel {

std::string to_pbm(const BitMatrix& m) {
  std::string out = "P1\n" + std::to_string(m.cols()) + " " +
                    std::to_string(m.rows()) + "\n";
  for (int r = 0; r < m.rows(); ++r) {
    int line = 0;
    for (int c = 0; c < m.cols(); ++c) {
      out.push_back(m.get(r, c) ? '1' : '0');
      if (++line == 70 && c + 1 < m.cols()) {
        out.push_back('\n');
        line = 0;
      }
    }
    out.push_back('\n');
  }
  return out;
}

std::string to_pgm(const std::vector<std::uint8_t>& gray, int width, int height,
                   int maxval) {
  if (maxval < 1 || maxval > 255)
    throw std::invalid_argument("to_pgm: maxval must be in [1, 255]");
  if (gray.size() != static_cast<std::size_t>(width) * height)
    throw std::invalid_argument("to_pgm: buffer size mismatch");
  std::string out = "P5\n" + std::to_string(width) + " " +
                    std::to_string(height) + "\n" + std::to_string(maxval) + "\n";
  out.append(reinterpret_cast<const char*>(gray.data()), gray.size());
  return out;
}

std::string matrix_csv(const BitMatrix& m) {
  std::string out;
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (c) out.push_back(',');
      out.push_back(m.get(r, c) ? '1' : '0');
    }
    out.push_back('\n');
  }
  return out;
}

std::string kernel_json(const InteractionKernel& k) {
  nlohmann::json j;
  j["L"] = k.L;
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < k.matrix.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < k.matrix.cols(); ++c) row.push_back(k.matrix.get(r, c) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j.dump();
}

std::string bitsums_csv(const RowBitsums& r) {
  std::string out = "row,bitsum\n";
  for (std::size_t i = 0; i < r.sums.size(); ++i)
    out += std::to_string(i) + "," + std::to_string(r.sums[i]) + "\n";
  return out;
}

std::string spectrum_json(int L, const SpectrumReport& s) {
  nlohmann::json j;
  j["L"] = L;
  j["eigenvalues"] = s.eigenvalues;
  return j.dump();
}

std::string spectrum_csv(const SpectrumReport& s) {
  std::string out = "index,eigenvalue\n";
  for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
    out += std::to_string(i) + "," +
           nlohmann::json(s.eigenvalues[i]).dump() + "\n";
  }
  return out;
}

std::string sigma_csv(const SigmaSequence& s) {
  std::string out = "i,sigma_decimal,sigma_hex,popcount\n";
  for (std::size_t i = 0; i < s.sigma.size(); ++i) {
    out += std::to_string(i) + "," + to_decimal(s.sigma[i]) + "," +
           to_hex(s.sigma[i]) + "," + std::to_string(popcount(s.sigma[i])) + "\n";
  }
  return out;
}

std::string solutions_json(const SolutionSet& s, bool one_based) {
  nlohmann::json arr = nlohmann::json::array();
  for (const PVector& p : s.solutions) {
    nlohmann::json row = nlohmann::json::array();
    for (int q : p.pos) row.push_back(one_based ? q + 1 : q);
    arr.push_back(std::move(row));
  }
  return arr.dump();
}

std::string counts_json(const SolutionSet& s) {
  nlohmann::json j;
  j["L"] = s.L;
  j["total"] = s.solutions.size();
  j["fundamental"] = s.fundamental.size();
  return j.dump();
}

std::string verdict_json(const BoardConfig& board, const ClassifierVerdict& v) {
  nlohmann::json j;
  j["L"] = board.size();
  j["queens"] = board.positions().pos;
  j["attacking_pairs"] = v.attacking_pairs;
  j["quadratic_value"] = v.quadratic_value;
  j["is_nonattacking"] = v.is_nonattacking;
  j["is_full_solution"] = v.is_full_solution;
  nlohmann::json codes = nlohmann::json::array();
  for (const QueenCode& qc : v.per_queen_codes) {
    nlohmann::json c;
    c["position"] = qc.position;
    c["code"] = to_decimal(qc.code);
    c["is_power_of_two"] = (qc.code == pow2(static_cast<unsigned long>(qc.position)));
    codes.push_back(std::move(c));
  }
  j["per_queen_codes"] = std::move(codes);
  return j.dump();
}

}  // namespace qkernel
