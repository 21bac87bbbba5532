#include "f2q/index_sets.hpp"

#include <sstream>

namespace f2q {

namespace {

std::vector<std::size_t> mask_to_list(const BitVector& m) {
  std::vector<std::size_t> out;
  auto words = m.words();
  for (std::size_t w = 0; w < words.size(); ++w) {
    word_t bits = words[w];
    while (bits) {
      out.push_back(w * kWordBits + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

IndexSetQuad quad_from_masks(std::size_t i, BitVector u, BitVector f, BitVector p) {
  IndexSetQuad q;
  q.mode = i;
  q.remainder_mask = f ^ p;
  q.update = mask_to_list(u);
  q.flip = mask_to_list(f);
  q.parity = mask_to_list(p);
  q.remainder = mask_to_list(q.remainder_mask);
  q.update_mask = std::move(u);
  q.flip_mask = std::move(f);
  q.parity_mask = std::move(p);
  return q;
}

}  // namespace

IndexSetQuad compute_sets(const BitMatrix& g, const BitMatrix& ginv, std::size_t i) {
  const std::size_t n = g.rows();
  if (i >= n) throw IndexOutOfRange("compute_sets: mode index out of range");
  BitVector u(n);
  for (std::size_t j = 0; j < n; ++j)
    if (g.get(j, i)) u.set(j, true);
  BitVector f = ginv.row_vector(i);
  BitVector p(n);
  for (std::size_t k = 0; k < i; ++k) p ^= ginv.row_vector(k);
  return quad_from_masks(i, std::move(u), std::move(f), std::move(p));
}

std::vector<IndexSetQuad> all_sets(const BitMatrix& g) {
  const std::size_t n = g.rows();
  BitMatrix ginv = gf2_invert(g);
  std::vector<IndexSetQuad> out;
  out.reserve(n);
  BitVector p(n);
  for (std::size_t i = 0; i < n; ++i) {
    BitVector u(n);
    for (std::size_t j = 0; j < n; ++j)
      if (g.get(j, i)) u.set(j, true);
    BitVector f = ginv.row_vector(i);
    out.push_back(quad_from_masks(i, std::move(u), f, p));
    p ^= f;
  }
  return out;
}

namespace {

void render_set(std::ostringstream& out, const char* name, const std::vector<std::size_t>& s) {
  out << name << "={";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out << ',';
    out << s[i];
  }
  out << '}';
}

}  // namespace

std::string sets_line(const IndexSetQuad& q) {
  std::ostringstream out;
  out << q.mode << ": ";
  render_set(out, "U", q.update);
  out << ' ';
  render_set(out, "F", q.flip);
  out << ' ';
  render_set(out, "P", q.parity);
  out << ' ';
  render_set(out, "R", q.remainder);
  return out.str();
}

}  // namespace f2q
