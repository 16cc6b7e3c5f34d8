#include "qkernel/board.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include <json.hpp>

namespace qkernel {

PVector make_pvector(std::vector<int> positions, int cells) {
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (positions[i] < 0 || positions[i] >= cells)
      throw std::invalid_argument("PVector: position out of range");
    if (i > 0 && positions[i] <= positions[i - 1])
      throw std::invalid_argument("PVector: positions must be strictly increasing");
  }
  return PVector{std::move(positions)};
}

bool nu_less(const PVector& a, const PVector& b) {
  // Positions are distinct bit indices, so comparing from the top bit down
  // is exactly integer comparison of the codes.
  auto ia = a.pos.rbegin(), ib = b.pos.rbegin();
  for (; ia != a.pos.rend() && ib != b.pos.rend(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return ia == a.pos.rend() && ib != b.pos.rend();
}

BoardConfig::BoardConfig(int L) : L_(L) {
  if (L < 1) throw std::invalid_argument("BoardConfig: L must be positive");
}

BoardConfig BoardConfig::from_positions(int L, const PVector& p) {
  BoardConfig b(L);
  const int cells = L * L;
  int prev = -1;
  for (int q : p.pos) {
    if (q < 0 || q >= cells)
      throw std::invalid_argument("BoardConfig: position out of range");
    if (q <= prev)
      throw std::invalid_argument("BoardConfig: positions must be strictly increasing");
    prev = q;
    set_bit(b.nu_, static_cast<unsigned long>(q));
  }
  return b;
}

BoardConfig BoardConfig::from_code(int L, BigUint nu) {
  BoardConfig b(L);
  if (nu < 0) throw std::invalid_argument("BoardConfig: code must be nonnegative");
  if (bit_length(nu) > static_cast<std::size_t>(L) * L)
    throw std::invalid_argument("BoardConfig: code exceeds L^2 bits");
  b.nu_ = std::move(nu);
  return b;
}

PVector BoardConfig::positions() const {
  PVector p;
  unsigned long i = mpz_scan1(nu_.get_mpz_t(), 0);
  while (i != ULONG_MAX) {
    p.pos.push_back(static_cast<int>(i));
    i = mpz_scan1(nu_.get_mpz_t(), i + 1);
  }
  return p;
}

BoardConfig flatten(const BoardGrid& board) {
  const int L = static_cast<int>(board.size());
  if (L == 0) throw std::invalid_argument("flatten: empty board");
  BoardConfig b(L);
  BigUint nu;
  for (int r = 0; r < L; ++r) {
    if (static_cast<int>(board[r].size()) != L)
      throw std::invalid_argument("flatten: board is not square");
    for (int c = 0; c < L; ++c)
      if (board[r][c]) set_bit(nu, static_cast<unsigned long>(r) * L + c);
  }
  return BoardConfig::from_code(L, nu);
}

BoardGrid unflatten(const BoardConfig& b) {
  const int L = b.size();
  BoardGrid g(L, std::vector<int>(L, 0));
  for (int q : b.positions().pos) g[q / L][q % L] = 1;
  return g;
}

PatternSet pattern_set(int L, int N) {
  if (L < 1) throw std::invalid_argument("pattern_set: L must be positive");
  if (N < 0) throw std::invalid_argument("pattern_set: N must be nonnegative");
  BigUint card;
  mpz_bin_uiui(card.get_mpz_t(), static_cast<unsigned long>(L) * L,
               static_cast<unsigned long>(N));
  return PatternSet{L, N, card};
}

PatternStream::PatternStream(int L, int N) : cells_(L * L), n_(N) {
  if (L < 1) throw std::invalid_argument("PatternStream: L must be positive");
  if (N < 0) throw std::invalid_argument("PatternStream: N must be nonnegative");
  if (n_ > cells_) done_ = true;
}

bool PatternStream::next(PVector& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    cur_.resize(n_);
    for (int i = 0; i < n_; ++i) cur_[i] = i;
    out.pos = cur_;
    return true;
  }
  // Advance to the lexicographic successor.
  int i = n_ - 1;
  while (i >= 0 && cur_[i] == cells_ - n_ + i) --i;
  if (i < 0) {
    done_ = true;
    return false;
  }
  ++cur_[i];
  for (int j = i + 1; j < n_; ++j) cur_[j] = cur_[j - 1] + 1;
  out.pos = cur_;
  return true;
}

BoardConfig parse_board_text(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  const int L = static_cast<int>(lines.size());
  if (L == 0) throw std::invalid_argument("board text: empty input");
  BigUint nu;
  for (int r = 0; r < L; ++r) {
    if (static_cast<int>(lines[r].size()) != L)
      throw std::invalid_argument("board text: ragged line " + std::to_string(r + 1) +
                                  " (expected " + std::to_string(L) + " characters)");
    for (int c = 0; c < L; ++c) {
      const char ch = lines[r][c];
      if (ch == 'Q')
        set_bit(nu, static_cast<unsigned long>(r) * L + c);
      else if (ch != '.')
        throw std::invalid_argument(std::string("board text: invalid character '") +
                                    ch + "'");
    }
  }
  return BoardConfig::from_code(L, nu);
}

std::string board_to_text(const BoardConfig& b) {
  const int L = b.size();
  std::string out;
  out.reserve(static_cast<std::size_t>(L) * (L + 1));
  for (int r = 0; r < L; ++r) {
    for (int c = 0; c < L; ++c) out.push_back(b.bit(r * L + c) ? 'Q' : '.');
    out.push_back('\n');
  }
  return out;
}

BoardConfig parse_board_json(const std::string& json, bool one_based) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("board json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("L") || !j.contains("positions"))
    throw std::invalid_argument("board json: expected {\"L\": int, \"positions\": [...]}");
  const int L = j.at("L").get<int>();
  std::vector<int> pos = j.at("positions").get<std::vector<int>>();
  if (one_based)
    for (int& p : pos) --p;
  std::sort(pos.begin(), pos.end());
  return BoardConfig::from_positions(L, make_pvector(std::move(pos), L * L));
}

std::string board_to_json(const BoardConfig& b, bool one_based) {
  nlohmann::json j;
  j["L"] = b.size();
  std::vector<int> pos = b.positions().pos;
  if (one_based)
    for (int& p : pos) ++p;
  j["positions"] = pos;
  return j.dump();
}

}  // namespace qkernel
