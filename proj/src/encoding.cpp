#include "f2q/encoding.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace f2q {

std::string scheme_name(Scheme s) {
  switch (s) {
    case Scheme::jw: return "jw";
    case Scheme::parity: return "parity";
    case Scheme::fenwick: return "fenwick";
    case Scheme::sierpinski: return "sierpinski";
    case Scheme::sierpinski_pruned: return "sierpinski_pruned";
    case Scheme::ternary: return "ternary";
    case Scheme::custom: return "custom";
  }
  throw Error("scheme_name: invalid scheme");
}

Scheme scheme_from_name(const std::string& name) {
  if (name == "jw") return Scheme::jw;
  if (name == "parity") return Scheme::parity;
  if (name == "fenwick") return Scheme::fenwick;
  if (name == "sierpinski") return Scheme::sierpinski;
  if (name == "sierpinski_pruned") return Scheme::sierpinski_pruned;
  if (name == "ternary") return Scheme::ternary;
  if (name == "custom") return Scheme::custom;
  throw UnsupportedScheme("unknown scheme '" + name + "'");
}

namespace {

Encoding finish_g_based(Encoding e, BitMatrix g) {
  e.Ginv = gf2_invert(g);
  e.sets = all_sets(g);
  e.G = std::move(g);
  return e;
}

/// Average Pauli weight over the 2n Majoranas plus the 2n-string product
/// (the (2n+1)-th anticommuting operator), denominator 2n+1. This is the
/// pruning objective; it reproduces the published pruned trees.
Rational forest_extended_avg(const Forest& f) {
  BitMatrix g = completion_matrix(f);
  BitMatrix ginv = gf2_invert(g);
  const std::size_t n = f.n;
  long long total = 0;
  BitVector pmask(n), all_flips(n);
  for (std::size_t i = 0; i < n; ++i) {
    BitVector umask(n);
    for (std::size_t j = 0; j < n; ++j)
      if (g.get(j, i)) umask.set(j, true);
    BitVector fmask = ginv.row_vector(i);
    BitVector rmask = fmask ^ pmask;
    auto uw = umask.words();
    auto pw = pmask.words();
    auto rw = rmask.words();
    for (std::size_t w = 0; w < uw.size(); ++w) {
      total += std::popcount(uw[w] | pw[w]);
      total += std::popcount(uw[w] | rw[w]);
    }
    pmask ^= fmask;
    all_flips ^= fmask;
  }
  // prod_k Gamma_k is proportional to Z on the xor of all flip sets.
  total += static_cast<long long>(all_flips.popcount());
  return Rational(total, 2 * static_cast<long long>(n) + 1);
}

}  // namespace

Encoding make_encoding(Scheme scheme, std::size_t n) {
  if (n < 1) throw Error("make_encoding: n must be >= 1");
  Encoding e;
  e.n = n;
  e.scheme = scheme;
  switch (scheme) {
    case Scheme::jw:
      return finish_g_based(std::move(e), BitMatrix::identity(n));
    case Scheme::parity: {
      BitMatrix g(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) g.set(i, j, true);
      return finish_g_based(std::move(e), std::move(g));
    }
    case Scheme::fenwick:
      e.forest = build_fenwick(n);
      return finish_g_based(std::move(e), completion_matrix(*e.forest));
    case Scheme::sierpinski:
      e.forest = build_sierpinski(n);
      return finish_g_based(std::move(e), completion_matrix(*e.forest));
    case Scheme::sierpinski_pruned:
      e.forest = prune_sierpinski(build_sierpinski(n), forest_extended_avg);
      return finish_g_based(std::move(e), completion_matrix(*e.forest));
    case Scheme::ternary:
      e.tree = build_ternary_tree(n);
      e.paths = enumerate_paths(*e.tree);
      return e;
    case Scheme::custom:
      throw UnsupportedScheme("make_encoding: custom scheme needs a matrix or forest");
  }
  throw Error("make_encoding: invalid scheme");
}

Encoding encoding_from_matrix(BitMatrix g, Scheme tag) {
  if (!g.square()) throw DimensionMismatch("encoding_from_matrix: matrix not square");
  Encoding e;
  e.n = g.rows();
  e.scheme = tag;
  return finish_g_based(std::move(e), std::move(g));
}

Encoding encoding_from_forest(Forest f, Scheme tag) {
  Encoding e;
  e.n = f.n;
  e.scheme = tag;
  BitMatrix g = completion_matrix(f);
  e.forest = std::move(f);
  return finish_g_based(std::move(e), std::move(g));
}

namespace {

Letter branch_letter(Branch b) {
  switch (b) {
    case Branch::upper: return Letter::X;
    case Branch::middle: return Letter::Y;
    case Branch::lower: return Letter::Z;
  }
  throw Error("branch_letter: invalid branch");
}

PauliString path_string(std::size_t n, const TreePath& path) {
  PauliString p(n);
  for (const PathStep& step : path) p.set_letter(step.node, branch_letter(step.branch));
  return p;
}

}  // namespace

PauliString majorana(const Encoding& e, std::size_t k) {
  if (k >= 2 * e.n) throw IndexOutOfRange("majorana: k out of range");
  if (e.scheme == Scheme::ternary) return path_string(e.n, e.paths[k]);
  const IndexSetQuad& q = e.sets[k / 2];
  if (k % 2 == 0)
    return PauliString::from_z_x_masks(e.n, q.parity_mask, q.update_mask, Phase::one());
  return PauliString::from_z_x_masks(e.n, q.remainder_mask, q.update_mask, Phase::minus_i());
}

std::vector<PauliString> majoranas(const Encoding& e) {
  std::vector<PauliString> out;
  out.reserve(2 * e.n);
  for (std::size_t k = 0; k < 2 * e.n; ++k) out.push_back(majorana(e, k));
  return out;
}

std::vector<PauliString> ternary_majoranas(const Encoding& e) {
  if (e.scheme != Scheme::ternary)
    throw UnsupportedScheme("ternary_majoranas: encoding is not ternary");
  std::vector<PauliString> out;
  out.reserve(e.paths.size());
  for (const TreePath& path : e.paths) out.push_back(path_string(e.n, path));
  return out;
}

PauliPolynomial PauliPolynomial::from_terms(std::size_t n,
                                            std::vector<std::pair<Dyadic, PauliString>> terms) {
  std::map<std::string, std::pair<Dyadic, PauliString>> acc;
  for (auto& [coeff, str] : terms) {
    if (str.n() != n) throw DimensionMismatch("PauliPolynomial: string size mismatch");
    Dyadic c = coeff.times_phase(str.phase());
    PauliString bare = str;
    bare.set_phase(Phase::one());
    std::string key = bare.dense_str();
    auto it = acc.find(key);
    if (it == acc.end())
      acc.emplace(key, std::make_pair(c, std::move(bare)));
    else
      it->second.first = it->second.first + c;
  }
  PauliPolynomial p(n);
  for (auto& [key, term] : acc)
    if (!term.first.is_zero()) p.terms_.push_back(std::move(term));
  return p;
}

PauliPolynomial PauliPolynomial::operator+(const PauliPolynomial& o) const {
  if (n_ != o.n_) throw DimensionMismatch("PauliPolynomial add: size mismatch");
  auto merged = terms_;
  merged.insert(merged.end(), o.terms_.begin(), o.terms_.end());
  return from_terms(n_, std::move(merged));
}

PauliPolynomial PauliPolynomial::operator*(const PauliPolynomial& o) const {
  if (n_ != o.n_) throw DimensionMismatch("PauliPolynomial multiply: size mismatch");
  std::vector<std::pair<Dyadic, PauliString>> cross;
  cross.reserve(terms_.size() * o.terms_.size());
  for (const auto& [ca, sa] : terms_)
    for (const auto& [cb, sb] : o.terms_) cross.emplace_back(ca * cb, sa * sb);
  return from_terms(n_, std::move(cross));
}

PauliPolynomial PauliPolynomial::adjoint() const {
  PauliPolynomial p(n_);
  p.terms_ = terms_;
  for (auto& [coeff, str] : p.terms_) coeff = coeff.conj();
  return p;
}

std::string PauliPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [coeff, str] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << '(' << coeff.str() << ')';
    std::string sp = str.sparse_str();  // phase folded, token is always "+"
    out << ' ' << (sp.size() > 1 ? sp.substr(1) : "I");
  }
  return out.str();
}

PauliPolynomial creation(const Encoding& e, std::size_t j) {
  if (j >= e.n) throw IndexOutOfRange("creation: mode out of range");
  if (e.scheme == Scheme::ternary)
    throw UnsupportedScheme("creation: undefined for the ternary scheme");
  return PauliPolynomial::from_terms(
      e.n, {{Dyadic(1, 0, 1), majorana(e, 2 * j)}, {Dyadic(0, -1, 1), majorana(e, 2 * j + 1)}});
}

PauliPolynomial annihilation(const Encoding& e, std::size_t j) {
  if (j >= e.n) throw IndexOutOfRange("annihilation: mode out of range");
  if (e.scheme == Scheme::ternary)
    throw UnsupportedScheme("annihilation: undefined for the ternary scheme");
  return PauliPolynomial::from_terms(
      e.n, {{Dyadic(1, 0, 1), majorana(e, 2 * j)}, {Dyadic(0, 1, 1), majorana(e, 2 * j + 1)}});
}

PauliPolynomial number_op(const Encoding& e, std::size_t j) {
  return creation(e, j) * annihilation(e, j);
}

BitVector encode_state(const Encoding& e, const BitVector& f) {
  if (!e.g_based()) throw UnsupportedScheme("encode_state: ternary states are not basis states");
  return gf2_matvec(*e.G, f);
}

BitVector decode_state(const Encoding& e, const BitVector& q) {
  if (!e.g_based()) throw UnsupportedScheme("decode_state: ternary states are not basis states");
  return gf2_matvec(*e.Ginv, q);
}

nlohmann::ordered_json encoding_json(const Encoding& e, bool include_majoranas,
                                     bool include_ladder) {
  nlohmann::ordered_json j;
  j["n"] = e.n;
  j["scheme"] = scheme_name(e.scheme);
  if (e.g_based()) {
    std::vector<std::string> rows;
    rows.reserve(e.n);
    for (std::size_t i = 0; i < e.n; ++i) rows.push_back(e.G->row_vector(i).str());
    j["G"] = rows;
  }
  if (include_majoranas) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < 2 * e.n; ++k) {
      PauliString p = majorana(e, k);
      arr.push_back({{"k", k}, {"phase", p.phase().token()}, {"string", p.dense_str()}});
    }
    j["majoranas"] = arr;
  }
  if (include_ladder) {
    auto poly_json = [&](const PauliPolynomial& poly, std::size_t mode) {
      nlohmann::ordered_json terms = nlohmann::ordered_json::array();
      for (const auto& [coeff, str] : poly.terms())
        terms.push_back({{"re_num", coeff.re},
                         {"im_num", coeff.im},
                         {"log2_den", coeff.k},
                         {"string", str.dense_str()}});
      return nlohmann::ordered_json{{"j", mode}, {"terms", terms}};
    };
    nlohmann::ordered_json cre = nlohmann::ordered_json::array();
    nlohmann::ordered_json ann = nlohmann::ordered_json::array();
    for (std::size_t m = 0; m < e.n; ++m) {
      cre.push_back(poly_json(creation(e, m), m));
      ann.push_back(poly_json(annihilation(e, m), m));
    }
    j["creation"] = cre;
    j["annihilation"] = ann;
  }
  return j;
}

}  // namespace f2q
