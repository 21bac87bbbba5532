#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "f2q/dyadic.hpp"
#include "f2q/forest.hpp"
#include "f2q/gf2.hpp"
#include "f2q/index_sets.hpp"
#include "f2q/pauli.hpp"

namespace f2q {

enum class Scheme {
  jw,
  parity,
  fenwick,
  sierpinski,
  sierpinski_pruned,
  ternary,
  custom,
};

std::string scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& name);

/// A fully constructed fermion-to-qubit encoding. G-based schemes carry the
/// change-of-basis matrix, its inverse and the cached index sets; the ternary
/// scheme carries the tree and its root-to-leaf paths instead.
struct Encoding {
  std::size_t n = 0;
  Scheme scheme = Scheme::jw;
  std::optional<BitMatrix> G, Ginv;
  std::vector<IndexSetQuad> sets;
  std::optional<Forest> forest;
  std::optional<TernaryTree> tree;
  std::vector<TreePath> paths;

  bool g_based() const { return G.has_value(); }
};

Encoding make_encoding(Scheme scheme, std::size_t n);
Encoding encoding_from_matrix(BitMatrix g, Scheme tag = Scheme::custom);
Encoding encoding_from_forest(Forest f, Scheme tag = Scheme::custom);

/// k = 2i -> Z_{P(i)} X_{U(i)}; k = 2i+1 -> -i Z_{R(i)} X_{U(i)}. For the
/// ternary scheme, the k-th root-to-leaf path string (the last of the 2n+1
/// paths is dropped).
PauliString majorana(const Encoding& e, std::size_t k);
std::vector<PauliString> majoranas(const Encoding& e);

/// All 2n+1 path strings of a ternary encoding, upper/middle/lower mapping
/// to X/Y/Z, phase +1.
std::vector<PauliString> ternary_majoranas(const Encoding& e);

/// Exact complex-dyadic combination of Pauli strings. Stored strings carry
/// phase +1 (phases are folded into coefficients); terms are unique, sorted
/// by dense letter string, with nonzero coefficients.
class PauliPolynomial {
 public:
  PauliPolynomial() = default;
  explicit PauliPolynomial(std::size_t n) : n_(n) {}
  static PauliPolynomial from_terms(std::size_t n,
                                    std::vector<std::pair<Dyadic, PauliString>> terms);

  std::size_t n() const { return n_; }
  const std::vector<std::pair<Dyadic, PauliString>>& terms() const { return terms_; }

  PauliPolynomial operator+(const PauliPolynomial& o) const;
  PauliPolynomial operator*(const PauliPolynomial& o) const;
  PauliPolynomial adjoint() const;
  bool operator==(const PauliPolynomial&) const = default;

  /// "(1/2) Z1 Z2 X3 X6 + (-i/2) Y3 X6"; the identity string renders as "I".
  std::string str() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::pair<Dyadic, PauliString>> terms_;
};

/// a_j+ = (Gamma_{2j} - i Gamma_{2j+1}) / 2
PauliPolynomial creation(const Encoding& e, std::size_t j);
/// a_j = (Gamma_{2j} + i Gamma_{2j+1}) / 2
PauliPolynomial annihilation(const Encoding& e, std::size_t j);
/// a_j+ a_j, via polynomial multiplication.
PauliPolynomial number_op(const Encoding& e, std::size_t j);

/// q = G f and f = G^{-1} q. Unsupported for the ternary scheme.
BitVector encode_state(const Encoding& e, const BitVector& f);
BitVector decode_state(const Encoding& e, const BitVector& q);

/// JSON export: {n, scheme, G (row bitstrings, omitted for ternary),
/// majoranas: [{k, phase, string}], optional creation/annihilation:
/// [{j, terms: [{re_num, im_num, log2_den, string}]}]}.
nlohmann::ordered_json encoding_json(const Encoding& e, bool include_majoranas,
                                     bool include_ladder);

}  // namespace f2q
