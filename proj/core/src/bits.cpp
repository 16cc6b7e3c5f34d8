#include "qkernel/bits.hpp"

#include <bit>
#include <cmath>

namespace qkernel {

std::string to_decimal(const BigUint& v) { return v.get_str(10); }

std::string to_hex(const BigUint& v) { return v.get_str(16); }

double log2_value(const BigUint& v) {
  if (v <= 0) throw std::domain_error("log2_value: value must be positive");
  long exp = 0;
  double d = mpz_get_d_2exp(&exp, v.get_mpz_t());  // v = d * 2^exp, d in [0.5, 1)
  return static_cast<double>(exp) + std::log2(d);
}

BitMatrix::BitMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("BitMatrix: negative shape");
  wpr_ = (cols + 63) / 64;
  words_.assign(static_cast<std::size_t>(rows) * wpr_, 0);
}

BitMatrix BitMatrix::identity(int n) {
  BitMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::complement_identity(int n) {
  BitMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) m.set(i, j);
  return m;
}

void BitMatrix::set(int r, int c, bool v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("BitMatrix::set: index out of range");
  std::uint64_t& w = words_[static_cast<std::size_t>(r) * wpr_ + (c >> 6)];
  const std::uint64_t bit = std::uint64_t{1} << (c & 63);
  if (v)
    w |= bit;
  else
    w &= ~bit;
}

int BitMatrix::row_popcount(int r) const {
  int s = 0;
  const std::size_t base = static_cast<std::size_t>(r) * wpr_;
  for (int w = 0; w < wpr_; ++w) s += std::popcount(words_[base + w]);
  return s;
}

long long BitMatrix::popcount() const {
  long long s = 0;
  for (std::uint64_t w : words_) s += std::popcount(w);
  return s;
}

bool BitMatrix::any() const {
  for (std::uint64_t w : words_)
    if (w) return true;
  return false;
}

bool BitMatrix::symmetric() const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = r + 1; c < cols_; ++c)
      if (get(r, c) != get(c, r)) return false;
  return true;
}

bool BitMatrix::zero_diagonal() const {
  const int n = rows_ < cols_ ? rows_ : cols_;
  for (int i = 0; i < n; ++i)
    if (get(i, i)) return false;
  return true;
}

BigUint BitMatrix::row_code(int r) const {
  BigUint v;
  mpz_import(v.get_mpz_t(), wpr_, -1, sizeof(std::uint64_t), 0, 0,
             words_.data() + static_cast<std::size_t>(r) * wpr_);
  return v;
}

void BitMatrix::check_same_shape(const BitMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("BitMatrix: shape mismatch");
}

BitMatrix BitMatrix::operator|(const BitMatrix& o) const {
  check_same_shape(o);
  BitMatrix r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= o.words_[i];
  return r;
}

BitMatrix BitMatrix::operator&(const BitMatrix& o) const {
  check_same_shape(o);
  BitMatrix r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
  return r;
}

BitMatrix BitMatrix::operator^(const BitMatrix& o) const {
  check_same_shape(o);
  BitMatrix r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] ^= o.words_[i];
  return r;
}

bool BitMatrix::operator==(const BitMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && words_ == o.words_;
}

bool BitMatrix::disjoint(const BitMatrix& o) const {
  check_same_shape(o);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & o.words_[i]) return false;
  return true;
}

BitMatrix kron(const BitMatrix& a, const BitMatrix& b) {
  BitMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (!a.get(i, j)) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          if (b.get(k, l)) r.set(i * b.rows() + k, j * b.cols() + l);
    }
  return r;
}

}  // namespace qkernel
