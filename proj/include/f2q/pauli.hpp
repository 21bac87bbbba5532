#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "f2q/gf2.hpp"

namespace f2q {

/// Exact phase in {+1, -1, +i, -i}, stored as the exponent k of i^k.
class Phase {
 public:
  constexpr Phase() = default;
  static constexpr Phase i_pow(unsigned k) { return Phase(k % 4); }
  static constexpr Phase one() { return Phase(0); }
  static constexpr Phase plus_i() { return Phase(1); }
  static constexpr Phase minus_one() { return Phase(2); }
  static constexpr Phase minus_i() { return Phase(3); }

  constexpr unsigned exponent() const { return exp_; }
  constexpr bool is_real() const { return exp_ % 2 == 0; }
  constexpr Phase operator*(Phase o) const { return Phase((exp_ + o.exp_) % 4); }
  constexpr Phase conj() const { return Phase((4 - exp_) % 4); }
  constexpr bool operator==(const Phase&) const = default;

  /// "+", "-", "+i" or "-i".
  std::string token() const {
    static const char* tok[4] = {"+", "+i", "-", "-i"};
    return tok[exp_];
  }
  static Phase from_token(const std::string& s);

 private:
  constexpr explicit Phase(unsigned e) : exp_(e) {}
  unsigned exp_ = 0;
};

enum class Letter : unsigned char { I = 0, X = 1, Y = 2, Z = 3 };

char letter_char(Letter l);
Letter letter_from_char(char c);

/// n-qubit Pauli string with exact global phase. Letters are stored as two
/// packed bit planes (x: letter in {X,Y}; z: letter in {Y,Z}).
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t n) : n_(n), x_(n), z_(n) {}

  /// prePhase * prod_{j in zset} Z_j * prod_{j in xset} X_j, evaluated left
  /// to right; a qubit in both sets yields letter Y and one factor +i.
  static PauliString from_z_x_sets(std::size_t n, const std::vector<std::size_t>& zset,
                                   const std::vector<std::size_t>& xset,
                                   Phase pre_phase = Phase::one());
  static PauliString from_z_x_masks(std::size_t n, const BitVector& zmask,
                                    const BitVector& xmask, Phase pre_phase = Phase::one());

  std::size_t n() const { return n_; }
  Phase phase() const { return phase_; }
  void set_phase(Phase p) { phase_ = p; }

  Letter letter(std::size_t j) const;
  void set_letter(std::size_t j, Letter l);

  /// Count of non-identity letters.
  std::size_t weight() const;
  bool is_identity_letters() const { return x_.none() && z_.none(); }

  /// Exact product including phase.
  PauliString operator*(const PauliString& o) const;
  bool operator==(const PauliString&) const = default;

  const BitVector& x_bits() const { return x_; }
  const BitVector& z_bits() const { return z_; }

  /// Phase token followed by n letters, e.g. "+iIZYXIIX".
  std::string dense_str() const;
  /// Phase token then space-separated letter-index tokens, e.g. "+Z1 Z2 X3 X6".
  std::string sparse_str() const;
  static PauliString parse_dense(const std::string& s);

 private:
  std::size_t n_ = 0;
  BitVector x_, z_;
  Phase phase_;
};

/// Binary symplectic image: x-part bit j set iff letter j in {X,Y}, z-part
/// bit j set iff letter j in {Y,Z}. Phase is discarded.
struct SymplecticVector {
  BitVector x, z;
  bool operator==(const SymplecticVector&) const = default;
};

SymplecticVector phi(const PauliString& p);

/// True iff <x_p, z_q> + <z_p, x_q> = 1 over GF(2).
bool anticommutes(const PauliString& p, const PauliString& q);

/// Tableau of the CNOT circuit C_G: column i (i < n) is phi(C_G X_i C_G+),
/// column n+i is phi(C_G Z_i C_G+); sign row bit 1 means '+'.
struct CliffordTableau {
  std::size_t n = 0;
  BitMatrix columns;  // 2n x 2n; rows 0..n-1 are x-parts, rows n..2n-1 z-parts
  BitVector signs;    // 2n bits
};

CliffordTableau tableau_from_G(const BitMatrix& g);

/// M^T * Omega * M == Omega with Omega = [[0, I], [I, 0]].
bool is_symplectic(const BitMatrix& m);

/// First pair (j, k), j < k, whose strings commute (i.e. violate pairwise
/// anticommutation), in lexicographic order; parallel over j.
std::optional<std::pair<std::size_t, std::size_t>> find_commuting_pair(
    const std::vector<PauliString>& strings);
/// Serial reference for find_commuting_pair.
std::optional<std::pair<std::size_t, std::size_t>> find_commuting_pair_serial(
    const std::vector<PauliString>& strings);

}  // namespace f2q
