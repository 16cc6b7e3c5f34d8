#include <doctest.h>

#include <qkernel/bits.hpp>

#include <random>
#include <stdexcept>

using namespace qkernel;

TEST_CASE("big integer helpers") {
  CHECK(popcount(BigUint(0)) == 0);
  CHECK(popcount(BigUint(7)) == 3);
  CHECK(popcount(pow2(100)) == 1);
  CHECK_THROWS_AS(popcount(BigUint(-1)), std::domain_error);

  CHECK(pow2(0) == 1);
  CHECK(pow2(10) == 1024);
  CHECK(low_mask(0) == 0);
  CHECK(low_mask(4) == 15);
  CHECK(bit_length(BigUint(0)) == 0);
  CHECK(bit_length(BigUint(1)) == 1);
  CHECK(bit_length(pow2(100)) == 101);

  BigUint v = 0;
  set_bit(v, 3);
  set_bit(v, 0);
  CHECK(v == 9);
  CHECK(test_bit(v, 0));
  CHECK(!test_bit(v, 1));
  CHECK(test_bit(v, 3));

  CHECK(to_decimal(pow2(100)) == "1267650600228229401496703205376");
  CHECK(to_hex(BigUint(255)) == "ff");
  CHECK(log2_value(pow2(64)) == doctest::Approx(64.0).epsilon(1e-12));
  CHECK(log2_value(BigUint(6)) == doctest::Approx(2.584962500721156).epsilon(1e-12));
}

TEST_CASE("bit matrix basics") {
  BitMatrix m(3, 5);
  CHECK(m.rows() == 3);
  CHECK(m.cols() == 5);
  CHECK(!m.any());
  m.set(1, 4);
  CHECK(m.get(1, 4));
  CHECK(m.any());
  CHECK(m.popcount() == 1);
  m.set(1, 4, false);
  CHECK(!m.any());

  BitMatrix id = BitMatrix::identity(4);
  CHECK(id.popcount() == 4);
  CHECK(id.symmetric());
  CHECK(!id.zero_diagonal());

  BitMatrix comp = BitMatrix::complement_identity(4);
  CHECK(comp.popcount() == 12);
  CHECK(comp.symmetric());
  CHECK(comp.zero_diagonal());
  CHECK(comp.row_code(0) == 14);
  CHECK(comp.row_code(1) == 13);
  CHECK(comp.row_code(2) == 11);
  CHECK(comp.row_code(3) == 7);
  CHECK(id.disjoint(comp));
  CHECK((id | comp).popcount() == 16);
  CHECK((id & comp).popcount() == 0);
  CHECK((id ^ comp) == (id | comp));
}

TEST_CASE("row codes survive the word boundary") {
  // Rows wider than 64 columns exercise the multi-word export path.
  BitMatrix m(1, 130);
  m.set(0, 0);
  m.set(0, 64);
  m.set(0, 129);
  BigUint expect = pow2(0) + pow2(64) + pow2(129);
  CHECK(m.row_code(0) == expect);
  CHECK(m.row_popcount(0) == 3);
}

TEST_CASE("kronecker product agrees with the entry rule") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    int ra = 1 + static_cast<int>(rng() % 4), ca = 1 + static_cast<int>(rng() % 4);
    int rb = 1 + static_cast<int>(rng() % 4), cb = 1 + static_cast<int>(rng() % 4);
    BitMatrix a(ra, ca), b(rb, cb);
    for (int i = 0; i < ra; ++i)
      for (int j = 0; j < ca; ++j)
        if (rng() & 1) a.set(i, j);
    for (int i = 0; i < rb; ++i)
      for (int j = 0; j < cb; ++j)
        if (rng() & 1) b.set(i, j);

    BitMatrix k = kron(a, b);
    REQUIRE(k.rows() == ra * rb);
    REQUIRE(k.cols() == ca * cb);
    for (int i = 0; i < k.rows(); ++i)
      for (int j = 0; j < k.cols(); ++j) {
        bool expect = a.get(i / rb, j / cb) && b.get(i % rb, j % cb);
        CHECK(k.get(i, j) == expect);
      }
  }
}

TEST_CASE("kronecker identity block structure") {
  BitMatrix swap2(2, 2);
  swap2.set(0, 1);
  swap2.set(1, 0);
  BitMatrix k = kron(BitMatrix::identity(2), swap2);
  // Block-diagonal with two swap blocks.
  CHECK(k.popcount() == 4);
  CHECK(k.get(0, 1));
  CHECK(k.get(1, 0));
  CHECK(k.get(2, 3));
  CHECK(k.get(3, 2));
  CHECK(!k.get(0, 3));
}
