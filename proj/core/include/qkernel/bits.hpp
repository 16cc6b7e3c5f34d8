#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qkernel {

// Unbounded nonnegative integer. Board codes and kernel row encodings need
// L^2 bits, which exceeds any machine word already at L = 9.
using BigUint = mpz_class;

inline std::size_t popcount(const BigUint& v) {
  if (v < 0) throw std::domain_error("popcount: negative value");
  return mpz_popcount(v.get_mpz_t());
}

inline bool test_bit(const BigUint& v, unsigned long i) {
  return mpz_tstbit(v.get_mpz_t(), i) != 0;
}

inline void set_bit(BigUint& v, unsigned long i) {
  mpz_setbit(v.get_mpz_t(), i);
}

inline BigUint pow2(unsigned long e) {
  BigUint r;
  mpz_setbit(r.get_mpz_t(), e);
  return r;
}

// 2^n - 1
inline BigUint low_mask(unsigned long n) {
  BigUint r = pow2(n);
  return r - 1;
}

inline std::size_t bit_length(const BigUint& v) {
  if (v == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

std::string to_decimal(const BigUint& v);
std::string to_hex(const BigUint& v);
double log2_value(const BigUint& v);  // v > 0

// Dense boolean matrix with bit-packed rows. Rows double as bit masks:
// row_code(r) gives the row as an integer with bit j = entry (r, j).
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols);

  static BitMatrix identity(int n);
  // All-ones matrix minus the identity.
  static BitMatrix complement_identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool get(int r, int c) const {
    return (words_[static_cast<std::size_t>(r) * wpr_ + (c >> 6)] >>
            (c & 63)) & 1u;
  }
  void set(int r, int c, bool v = true);

  int row_popcount(int r) const;
  long long popcount() const;
  bool any() const;

  bool symmetric() const;
  bool zero_diagonal() const;

  BigUint row_code(int r) const;

  BitMatrix operator|(const BitMatrix& o) const;
  BitMatrix operator&(const BitMatrix& o) const;
  BitMatrix operator^(const BitMatrix& o) const;
  bool operator==(const BitMatrix& o) const;
  bool disjoint(const BitMatrix& o) const;  // (A & B) == 0

 private:
  void check_same_shape(const BitMatrix& o) const;

  int rows_ = 0, cols_ = 0;
  int wpr_ = 0;  // 64-bit words per row
  std::vector<std::uint64_t> words_;
};

// Boolean Kronecker product: entry ((i*rb + k), (j*cb + l)) = A(i,j) & B(k,l).
BitMatrix kron(const BitMatrix& a, const BitMatrix& b);

}  // namespace qkernel
