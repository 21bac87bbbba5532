#include "f2q/gf2.hpp"

#include <sstream>

namespace f2q {

BitMatrix BitMatrix::parse(const std::string& text) {
  std::istringstream in(text);
  std::vector<BitVector> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    rows.push_back(BitVector::parse(line));
  }
  if (rows.empty()) throw Error("BitMatrix::parse: no rows");
  BitMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw DimensionMismatch("BitMatrix::parse: ragged rows");
    m.set_row(i, rows[i]);
  }
  return m;
}

BitMatrix gf2_invert(const BitMatrix& m) {
  if (!m.square()) throw DimensionMismatch("gf2_invert: matrix not square");
  const std::size_t n = m.rows();
  BitMatrix a = m;
  BitMatrix inv = BitMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = n;
    for (std::size_t r = c; r < n; ++r) {
      if (a.get(r, c)) {
        pivot = r;
        break;
      }
    }
    if (pivot == n) throw NotInvertible("gf2_invert: zero pivot in column " + std::to_string(c));
    a.swap_rows(c, pivot);
    inv.swap_rows(c, pivot);
    for (std::size_t r = 0; r < n; ++r) {
      if (r != c && a.get(r, c)) {
        a.xor_row(r, c);
        inv.xor_row(r, c);
      }
    }
  }
  return inv;
}

BitVector gf2_matvec(const BitMatrix& m, const BitVector& v) {
  if (m.cols() != v.size()) throw DimensionMismatch("gf2_matvec: dimension mismatch");
  BitVector out(m.rows());
  const auto vw = v.words();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto rw = m.row(i);
    word_t acc = 0;
    for (std::size_t w = 0; w < rw.size(); ++w) acc ^= rw[w] & vw[w];
    out.set(i, std::popcount(acc) & 1u);
  }
  return out;
}

namespace {

inline void matmul_row(const BitMatrix& a, const BitMatrix& b, BitMatrix& c, std::size_t i) {
  auto arow = a.row(i);
  auto crow = c.row(i);
  for (std::size_t w = 0; w < arow.size(); ++w) {
    word_t bits = arow[w];
    while (bits) {
      std::size_t j = w * kWordBits + std::countr_zero(bits);
      bits &= bits - 1;
      auto brow = b.row(j);
      for (std::size_t u = 0; u < crow.size(); ++u) crow[u] ^= brow[u];
    }
  }
}

}  // namespace

BitMatrix gf2_matmul(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("gf2_matmul: dimension mismatch");
  BitMatrix c(a.rows(), b.cols());
  const std::int64_t rows = static_cast<std::int64_t>(a.rows());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < rows; ++i) matmul_row(a, b, c, static_cast<std::size_t>(i));
  return c;
}

BitMatrix gf2_matmul_serial(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("gf2_matmul: dimension mismatch");
  BitMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) matmul_row(a, b, c, i);
  return c;
}

BitMatrix prefix_matrix(std::size_t n) {
  if (n < 1) throw Error("prefix_matrix: n must be >= 1");
  BitMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) p.set(i, j, true);
  return p;
}

BitMatrix transpose(const BitMatrix& m) {
  BitMatrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto rw = m.row(i);
    for (std::size_t w = 0; w < rw.size(); ++w) {
      word_t bits = rw[w];
      while (bits) {
        std::size_t j = w * kWordBits + std::countr_zero(bits);
        bits &= bits - 1;
        t.set(j, i, true);
      }
    }
  }
  return t;
}

}  // namespace f2q
