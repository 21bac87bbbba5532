#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "f2q/errors.hpp"

namespace f2q {

using word_t = std::uint64_t;

constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

/// Vector over GF(2), bits packed into 64-bit words (bit j of word j/64).
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t n) : n_(n), words_(words_for(n), 0) {}
  BitVector(std::initializer_list<int> bits) : BitVector(bits.size()) {
    std::size_t i = 0;
    for (int b : bits) set(i++, b != 0);
  }

  std::size_t size() const { return n_; }

  bool get(std::size_t i) const {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
  }
  void set(std::size_t i, bool v) {
    word_t mask = word_t{1} << (i % kWordBits);
    if (v)
      words_[i / kWordBits] |= mask;
    else
      words_[i / kWordBits] &= ~mask;
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= word_t{1} << (i % kWordBits); }

  std::size_t popcount() const {
    std::size_t c = 0;
    for (word_t w : words_) c += std::popcount(w);
    return c;
  }
  bool none() const {
    for (word_t w : words_)
      if (w) return false;
    return true;
  }

  BitVector operator^(const BitVector& o) const {
    require_same_size(o);
    BitVector r(n_);
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] = words_[w] ^ o.words_[w];
    return r;
  }
  BitVector& operator^=(const BitVector& o) {
    require_same_size(o);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    return *this;
  }
  bool operator==(const BitVector& o) const = default;

  /// Parity of the AND with another vector, i.e. the GF(2) inner product.
  bool dot(const BitVector& o) const {
    require_same_size(o);
    word_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
    return std::popcount(acc) & 1u;
  }

  std::span<const word_t> words() const { return words_; }
  std::span<word_t> words() { return words_; }

  std::string str() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }
  static BitVector parse(const std::string& s) {
    BitVector v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1')
        v.set(i, true);
      else if (s[i] != '0')
        throw Error("BitVector::parse: invalid character '" + std::string(1, s[i]) + "'");
    }
    return v;
  }

 private:
  void require_same_size(const BitVector& o) const {
    if (n_ != o.n_) throw DimensionMismatch("BitVector size mismatch");
  }

  std::size_t n_ = 0;
  std::vector<word_t> words_;
};

/// Matrix over GF(2); entry (i, j) is row i, column j. Rows are packed words
/// so row XOR and row-vector products are word-parallel.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), wpr_(words_for(cols)), data_(rows * wpr_, 0) {}

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  bool get(std::size_t i, std::size_t j) const {
    return (data_[i * wpr_ + j / kWordBits] >> (j % kWordBits)) & 1u;
  }
  void set(std::size_t i, std::size_t j, bool v) {
    word_t mask = word_t{1} << (j % kWordBits);
    if (v)
      data_[i * wpr_ + j / kWordBits] |= mask;
    else
      data_[i * wpr_ + j / kWordBits] &= ~mask;
  }

  std::span<const word_t> row(std::size_t i) const { return {data_.data() + i * wpr_, wpr_}; }
  std::span<word_t> row(std::size_t i) { return {data_.data() + i * wpr_, wpr_}; }

  BitVector row_vector(std::size_t i) const {
    BitVector v(cols_);
    auto src = row(i);
    std::copy(src.begin(), src.end(), v.words().begin());
    return v;
  }
  void set_row(std::size_t i, const BitVector& v) {
    if (v.size() != cols_) throw DimensionMismatch("set_row: length mismatch");
    auto dst = row(i);
    std::copy(v.words().begin(), v.words().end(), dst.begin());
  }
  void xor_row(std::size_t dst, std::size_t src) {
    word_t* d = data_.data() + dst * wpr_;
    const word_t* s = data_.data() + src * wpr_;
    for (std::size_t w = 0; w < wpr_; ++w) d[w] ^= s[w];
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    word_t* pa = data_.data() + a * wpr_;
    word_t* pb = data_.data() + b * wpr_;
    for (std::size_t w = 0; w < wpr_; ++w) std::swap(pa[w], pb[w]);
  }

  bool operator==(const BitMatrix& o) const = default;

  /// One row per line, characters '0'/'1', no separators.
  std::string str() const {
    std::string s;
    s.reserve(rows_ * (cols_ + 1));
    for (std::size_t i = 0; i < rows_; ++i) {
      s += row_vector(i).str();
      s += '\n';
    }
    return s;
  }
  static BitMatrix parse(const std::string& text);

 private:
  std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<word_t> data_;
};

/// Gauss-Jordan inverse over GF(2); pivots on the first set bit in each
/// column. Throws NotInvertible on a zero pivot column.
BitMatrix gf2_invert(const BitMatrix& m);

BitVector gf2_matvec(const BitMatrix& m, const BitVector& v);

/// Matrix product mod 2, parallelized over result rows.
BitMatrix gf2_matmul(const BitMatrix& a, const BitMatrix& b);
/// Serial reference for gf2_matmul.
BitMatrix gf2_matmul_serial(const BitMatrix& a, const BitMatrix& b);

/// Strictly lower-triangular matrix of all ones: P[i][j] = 1 iff j < i.
BitMatrix prefix_matrix(std::size_t n);

BitMatrix transpose(const BitMatrix& m);

}  // namespace f2q
