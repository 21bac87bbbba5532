#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "f2q/gf2.hpp"

using namespace f2q;

namespace {

const char* kFenwick7G =
    "1000000\n"
    "1100000\n"
    "0010000\n"
    "1111000\n"
    "0000100\n"
    "0000110\n"
    "1111111\n";

const char* kFenwick7Ginv =
    "1000000\n"
    "1100000\n"
    "0010000\n"
    "0111000\n"
    "0000100\n"
    "0000110\n"
    "0001011\n";

BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  BitMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (rng() & 1) m.set(i, j, true);
  return m;
}

BitMatrix random_invertible(std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    BitMatrix m = random_matrix(n, n, rng);
    try {
      gf2_invert(m);
      return m;
    } catch (const NotInvertible&) {
    }
  }
}

BitVector random_vector(std::size_t n, std::mt19937_64& rng) {
  BitVector v(n);
  for (std::size_t i = 0; i < n; ++i)
    if (rng() & 1) v.set(i, true);
  return v;
}

}  // namespace

TEST_CASE("inverting the identity") {
  CHECK(gf2_invert(BitMatrix::identity(3)) == BitMatrix::identity(3));
}

TEST_CASE("fenwick-7 matrix inverts to the published inverse") {
  BitMatrix g = BitMatrix::parse(kFenwick7G);
  BitMatrix ginv = gf2_invert(g);
  CHECK(ginv == BitMatrix::parse(kFenwick7Ginv));
  CHECK(ginv.row_vector(3).str() == "0111000");
  CHECK(ginv.row_vector(6).str() == "0001011");
}

TEST_CASE("multiply-back oracle on random invertible matrices") {
  std::mt19937_64 rng(20240901);
  for (int t = 0; t < 100; ++t) {
    BitMatrix m = random_invertible(64, rng);
    BitMatrix inv = gf2_invert(m);
    CHECK(gf2_matmul(m, inv) == BitMatrix::identity(64));
    CHECK(gf2_matmul(inv, m) == BitMatrix::identity(64));
    CHECK(gf2_invert(inv) == m);  // involution on its image
  }
}

TEST_CASE("singular matrix raises NotInvertible") {
  BitMatrix m(2, 2);
  m.set(0, 0, true);
  m.set(1, 0, true);
  CHECK_THROWS_AS(gf2_invert(m), NotInvertible);
  CHECK_THROWS_AS(gf2_invert(BitMatrix(2, 3)), DimensionMismatch);
}

TEST_CASE("matvec basics") {
  BitVector v{1, 0, 1, 1};
  CHECK(gf2_matvec(BitMatrix::identity(4), v) == v);

  BitMatrix g = BitMatrix::parse(kFenwick7G);
  BitVector e0(7);
  e0.set(0, true);
  CHECK(gf2_matvec(g, e0) == BitVector{1, 1, 0, 1, 0, 0, 1});

  // Inclusive prefix sums via the all-ones lower triangle.
  BitMatrix pb(5, 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j <= i; ++j) pb.set(i, j, true);
  CHECK(gf2_matvec(pb, BitVector{1, 0, 0, 1, 1}) == BitVector{1, 1, 1, 0, 1});

  CHECK_THROWS_AS(gf2_matvec(g, BitVector(6)), DimensionMismatch);
}

TEST_CASE("matvec is linear") {
  std::mt19937_64 rng(7);
  BitMatrix m = random_matrix(24, 24, rng);
  for (int t = 0; t < 50; ++t) {
    BitVector u = random_vector(24, rng), v = random_vector(24, rng);
    CHECK(gf2_matvec(m, u ^ v) == (gf2_matvec(m, u) ^ gf2_matvec(m, v)));
  }
}

TEST_CASE("matmul basics") {
  std::mt19937_64 rng(11);
  BitMatrix a = random_matrix(9, 9, rng);
  CHECK(gf2_matmul(a, BitMatrix::identity(9)) == a);

  BitMatrix g = BitMatrix::parse(kFenwick7G);
  CHECK(gf2_matmul(gf2_invert(g), g) == BitMatrix::identity(7));

  BitMatrix pg = gf2_matmul(prefix_matrix(7), gf2_invert(g));
  CHECK(pg.row_vector(2) == BitVector{0, 1, 0, 0, 0, 0, 0});

  CHECK_THROWS_AS(gf2_matmul(BitMatrix(2, 3), BitMatrix(2, 3)), DimensionMismatch);
}

TEST_CASE("matmul parallel kernel matches the serial reference") {
  std::mt19937_64 rng(42);
  for (auto [r, k, c] : {std::tuple<int, int, int>{1, 1, 1}, {5, 9, 3}, {130, 70, 200}}) {
    BitMatrix a = random_matrix(r, k, rng);
    BitMatrix b = random_matrix(k, c, rng);
    CHECK(gf2_matmul(a, b) == gf2_matmul_serial(a, b));
  }
}

TEST_CASE("prefix matrix") {
  CHECK(prefix_matrix(1).str() == "0\n");
  BitMatrix p2 = prefix_matrix(2);
  CHECK(p2.row_vector(0) == BitVector{0, 0});
  CHECK(p2.row_vector(1) == BitVector{1, 0});

  std::mt19937_64 rng(3);
  BitMatrix p = prefix_matrix(16);
  for (int t = 0; t < 20; ++t) {
    BitVector x = random_vector(16, rng);
    BitVector px = gf2_matvec(p, x);
    for (std::size_t i = 0; i < 16; ++i) {
      bool expect = false;
      for (std::size_t j = 0; j < i; ++j) expect ^= x.get(j);
      CHECK(px.get(i) == expect);
    }
  }
}

TEST_CASE("matrix text round-trip") {
  std::mt19937_64 rng(5);
  BitMatrix m = random_matrix(13, 70, rng);
  CHECK(BitMatrix::parse(m.str()) == m);
  CHECK(transpose(transpose(m)) == m);
}
