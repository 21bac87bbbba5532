#include "f2q/pauli.hpp"

#include <algorithm>
#include <sstream>

namespace f2q {

Phase Phase::from_token(const std::string& s) {
  if (s == "+") return one();
  if (s == "+i") return plus_i();
  if (s == "-") return minus_one();
  if (s == "-i") return minus_i();
  throw Error("Phase::from_token: invalid token '" + s + "'");
}

char letter_char(Letter l) {
  static const char chars[4] = {'I', 'X', 'Y', 'Z'};
  return chars[static_cast<unsigned>(l)];
}

Letter letter_from_char(char c) {
  switch (c) {
    case 'I': return Letter::I;
    case 'X': return Letter::X;
    case 'Y': return Letter::Y;
    case 'Z': return Letter::Z;
  }
  throw Error("letter_from_char: invalid letter '" + std::string(1, c) + "'");
}

PauliString PauliString::from_z_x_masks(std::size_t n, const BitVector& zmask,
                                        const BitVector& xmask, Phase pre_phase) {
  if (zmask.size() != n || xmask.size() != n)
    throw DimensionMismatch("from_z_x_masks: mask length mismatch");
  PauliString p(n);
  p.x_ = xmask;
  p.z_ = zmask;
  // Each qubit carrying both Z and X contributes Z_j X_j = i Y_j.
  std::size_t overlap = 0;
  auto zw = zmask.words();
  auto xw = xmask.words();
  for (std::size_t w = 0; w < zw.size(); ++w) overlap += std::popcount(zw[w] & xw[w]);
  p.phase_ = pre_phase * Phase::i_pow(static_cast<unsigned>(overlap % 4));
  return p;
}

PauliString PauliString::from_z_x_sets(std::size_t n, const std::vector<std::size_t>& zset,
                                       const std::vector<std::size_t>& xset, Phase pre_phase) {
  BitVector z(n), x(n);
  for (std::size_t j : zset) {
    if (j >= n) throw IndexOutOfRange("from_z_x_sets: Z index out of range");
    z.set(j, true);
  }
  for (std::size_t j : xset) {
    if (j >= n) throw IndexOutOfRange("from_z_x_sets: X index out of range");
    x.set(j, true);
  }
  return from_z_x_masks(n, z, x, pre_phase);
}

Letter PauliString::letter(std::size_t j) const {
  if (j >= n_) throw IndexOutOfRange("PauliString::letter: index out of range");
  bool x = x_.get(j), z = z_.get(j);
  if (x && z) return Letter::Y;
  if (x) return Letter::X;
  if (z) return Letter::Z;
  return Letter::I;
}

void PauliString::set_letter(std::size_t j, Letter l) {
  if (j >= n_) throw IndexOutOfRange("PauliString::set_letter: index out of range");
  x_.set(j, l == Letter::X || l == Letter::Y);
  z_.set(j, l == Letter::Z || l == Letter::Y);
}

std::size_t PauliString::weight() const {
  std::size_t c = 0;
  auto xw = x_.words();
  auto zw = z_.words();
  for (std::size_t w = 0; w < xw.size(); ++w) c += std::popcount(xw[w] | zw[w]);
  return c;
}

namespace {

// Exponent of i in the single-qubit product, indexed by code (z<<1)|x:
// 0=I, 1=X, 2=Z, 3=Y. XY=iZ, YZ=iX, ZX=iY; reversed orders give -i.
constexpr unsigned kProductPhase[4][4] = {
    {0, 0, 0, 0},
    {0, 0, 3, 1},
    {0, 1, 0, 3},
    {0, 3, 1, 0},
};

}  // namespace

PauliString PauliString::operator*(const PauliString& o) const {
  if (n_ != o.n_) throw DimensionMismatch("PauliString multiply: size mismatch");
  PauliString r(n_);
  unsigned exp = phase_.exponent() + o.phase_.exponent();
  auto ax = x_.words(), az = z_.words(), bx = o.x_.words(), bz = o.z_.words();
  auto rx = r.x_.words(), rz = r.z_.words();
  for (std::size_t w = 0; w < ax.size(); ++w) {
    rx[w] = ax[w] ^ bx[w];
    rz[w] = az[w] ^ bz[w];
    word_t active = (ax[w] | az[w]) & (bx[w] | bz[w]);
    while (active) {
      unsigned b = static_cast<unsigned>(std::countr_zero(active));
      active &= active - 1;
      unsigned ca = (((az[w] >> b) & 1u) << 1) | ((ax[w] >> b) & 1u);
      unsigned cb = (((bz[w] >> b) & 1u) << 1) | ((bx[w] >> b) & 1u);
      exp += kProductPhase[ca][cb];
    }
  }
  r.phase_ = Phase::i_pow(exp);
  return r;
}

std::string PauliString::dense_str() const {
  std::string s = phase_.token();
  s.reserve(s.size() + n_);
  for (std::size_t j = 0; j < n_; ++j) s += letter_char(letter(j));
  return s;
}

std::string PauliString::sparse_str() const {
  std::string s = phase_.token();
  bool first = true;
  for (std::size_t j = 0; j < n_; ++j) {
    Letter l = letter(j);
    if (l == Letter::I) continue;
    if (!first) s += ' ';
    first = false;
    s += letter_char(l);
    s += std::to_string(j);
  }
  return s;
}

PauliString PauliString::parse_dense(const std::string& s) {
  std::size_t pos = 0;
  Phase ph;
  if (s.rfind("+i", 0) == 0 || s.rfind("-i", 0) == 0) {
    ph = Phase::from_token(s.substr(0, 2));
    pos = 2;
  } else if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    ph = Phase::from_token(s.substr(0, 1));
    pos = 1;
  }
  PauliString p(s.size() - pos);
  for (std::size_t j = 0; pos < s.size(); ++j, ++pos) p.set_letter(j, letter_from_char(s[pos]));
  p.set_phase(ph);
  return p;
}

SymplecticVector phi(const PauliString& p) { return {p.x_bits(), p.z_bits()}; }

bool anticommutes(const PauliString& p, const PauliString& q) {
  if (p.n() != q.n()) throw DimensionMismatch("anticommutes: size mismatch");
  return p.x_bits().dot(q.z_bits()) ^ p.z_bits().dot(q.x_bits());
}

CliffordTableau tableau_from_G(const BitMatrix& g) {
  if (!g.square()) throw DimensionMismatch("tableau_from_G: matrix not square");
  const std::size_t n = g.rows();
  BitMatrix ginv = gf2_invert(g);
  CliffordTableau t;
  t.n = n;
  t.columns = BitMatrix(2 * n, 2 * n);
  t.signs = BitVector(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < n; ++r) {
      if (g.get(r, i)) t.columns.set(r, i, true);           // C X_i C+ = X_{U(i)}
      if (ginv.get(i, r)) t.columns.set(n + r, n + i, true);  // C Z_i C+ = Z_{F(i)}
    }
    t.signs.set(i, true);
    t.signs.set(n + i, true);
  }
  return t;
}

bool is_symplectic(const BitMatrix& m) {
  if (!m.square() || m.rows() % 2 != 0) return false;
  const std::size_t n = m.rows() / 2;
  BitMatrix omega(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    omega.set(i, n + i, true);
    omega.set(n + i, i, true);
  }
  return gf2_matmul(transpose(m), gf2_matmul(omega, m)) == omega;
}

namespace {

using Pair = std::pair<std::size_t, std::size_t>;

std::optional<Pair> scan_row(const std::vector<PauliString>& strings, std::size_t j) {
  for (std::size_t k = j + 1; k < strings.size(); ++k)
    if (!anticommutes(strings[j], strings[k])) return Pair{j, k};
  return std::nullopt;
}

}  // namespace

std::optional<Pair> find_commuting_pair(const std::vector<PauliString>& strings) {
  const std::int64_t m = static_cast<std::int64_t>(strings.size());
  Pair best{strings.size(), strings.size()};
  bool found = false;
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t j = 0; j < m; ++j) {
    auto hit = scan_row(strings, static_cast<std::size_t>(j));
    if (hit) {
#pragma omp critical
      {
        if (!found || *hit < best) {
          best = *hit;
          found = true;
        }
      }
    }
  }
  if (found) return best;
  return std::nullopt;
}

std::optional<Pair> find_commuting_pair_serial(const std::vector<PauliString>& strings) {
  for (std::size_t j = 0; j < strings.size(); ++j)
    if (auto hit = scan_row(strings, j)) return hit;
  return std::nullopt;
}

}  // namespace f2q
