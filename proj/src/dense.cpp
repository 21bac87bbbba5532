#include "f2q/dense.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <tuple>

namespace f2q {

std::optional<FermionBasisState> fermionic_apply(std::size_t j, bool dagger,
                                                 const FermionBasisState& s) {
  const std::size_t n = s.occupation.size();
  if (j >= n) throw IndexOutOfRange("fermionic_apply: mode out of range");
  const bool occupied = s.occupation.get(j);
  if (dagger == occupied) return std::nullopt;
  std::size_t parity = 0;
  for (std::size_t i = 0; i < j; ++i) parity += s.occupation.get(i);
  FermionBasisState out = s;
  out.occupation.flip(j);
  if (parity % 2 == 1) out.sign = -out.sign;
  return out;
}

StateVector StateVector::zero(std::size_t n) {
  StateVector v;
  v.n = n;
  v.amp.assign(std::uint64_t{1} << n, Dyadic::zero());
  return v;
}

StateVector StateVector::basis(std::size_t n, std::uint64_t index) {
  StateVector v = zero(n);
  v.amp[index] = Dyadic::one();
  return v;
}

std::uint64_t basis_index(const BitVector& bits) {
  const std::size_t n = bits.size();
  std::uint64_t idx = 0;
  for (std::size_t j = 0; j < n; ++j)
    if (bits.get(j)) idx |= std::uint64_t{1} << (n - 1 - j);  // qubit 0 is the MSB
  return idx;
}

BitVector bits_from_index(std::size_t n, std::uint64_t index) {
  BitVector v(n);
  for (std::size_t j = 0; j < n; ++j)
    if ((index >> (n - 1 - j)) & 1u) v.set(j, true);
  return v;
}

namespace {

/// Basis-permutation form of a Pauli string on n <= 64 qubits: |b> maps to
/// i^(base + 2*popcount(b & zmask)) |b ^ xmask>.
struct BasisAction {
  std::uint64_t xmask = 0, zmask = 0;
  unsigned base = 0;
};

BasisAction basis_action(const PauliString& p) {
  BasisAction a;
  const std::size_t n = p.n();
  unsigned ys = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint64_t bit = std::uint64_t{1} << (n - 1 - j);
    if (p.x_bits().get(j)) a.xmask |= bit;
    if (p.z_bits().get(j)) a.zmask |= bit;
    if (p.x_bits().get(j) && p.z_bits().get(j)) ++ys;
  }
  a.base = (p.phase().exponent() + ys) % 4;
  return a;
}

inline unsigned action_exp(const BasisAction& a, std::uint64_t b) {
  return (a.base + 2 * (std::popcount(b & a.zmask) & 1u)) % 4;
}

void accumulate_term(const BasisAction& a, const Dyadic& coeff, const StateVector& in,
                     StateVector& out, bool parallel) {
  const std::int64_t dim = static_cast<std::int64_t>(in.amp.size());
#pragma omp parallel for schedule(static) if (parallel)
  for (std::int64_t b = 0; b < dim; ++b) {
    const Dyadic& src = in.amp[static_cast<std::uint64_t>(b)];
    if (src.is_zero()) continue;
    unsigned e = action_exp(a, static_cast<std::uint64_t>(b));
    std::uint64_t dst = static_cast<std::uint64_t>(b) ^ a.xmask;
    out.amp[dst] = out.amp[dst] + (src * coeff).times_phase(Phase::i_pow(e));
  }
}

}  // namespace

StateVector apply_pauli(const PauliString& p, const StateVector& v) {
  if (p.n() != v.n) throw DimensionMismatch("apply_pauli: size mismatch");
  StateVector out = StateVector::zero(v.n);
  accumulate_term(basis_action(p), Dyadic::one(), v, out, true);
  return out;
}

StateVector apply_pauli_serial(const PauliString& p, const StateVector& v) {
  if (p.n() != v.n) throw DimensionMismatch("apply_pauli: size mismatch");
  StateVector out = StateVector::zero(v.n);
  accumulate_term(basis_action(p), Dyadic::one(), v, out, false);
  return out;
}

StateVector apply_polynomial(const PauliPolynomial& poly, const StateVector& v) {
  if (poly.n() != v.n) throw DimensionMismatch("apply_polynomial: size mismatch");
  StateVector out = StateVector::zero(v.n);
  for (const auto& [coeff, str] : poly.terms())
    accumulate_term(basis_action(str), coeff, v, out, true);
  return out;
}

std::string VerificationReport::text() const {
  std::string s = pass ? "PASS " : "FAIL ";
  s += check;
  s += " scheme=" + scheme_name(scheme) + " n=" + std::to_string(n);
  if (!pass) s += " " + first_violation;
  return s;
}

nlohmann::ordered_json VerificationReport::json() const {
  nlohmann::ordered_json j;
  j["check"] = check;
  j["scheme"] = scheme_name(scheme);
  j["n"] = n;
  j["pass"] = pass;
  if (pass)
    j["firstViolation"] = nullptr;
  else
    j["firstViolation"] = first_violation;
  return j;
}

namespace {

void require_limit(std::size_t n, std::size_t limit) {
  if (limit > kMaxDenseLimit)
    throw LimitExceeded("dense limit capped at " + std::to_string(kMaxDenseLimit));
  if (n > limit)
    throw LimitExceeded("n=" + std::to_string(n) + " exceeds dense limit " +
                        std::to_string(limit));
}

struct Violation {
  std::size_t j, k;
  std::uint64_t b;
  bool operator<(const Violation& o) const {
    return std::tie(j, k, b) < std::tie(o.j, o.k, o.b);
  }
};

}  // namespace

VerificationReport check_car(const std::vector<PauliString>& strings, Scheme scheme,
                             std::size_t limit) {
  const std::size_t n = strings.empty() ? 0 : strings[0].n();
  require_limit(n, limit);
  VerificationReport rep{"check_car", scheme, n, true, ""};
  if (strings.empty()) return rep;
  std::vector<BasisAction> acts;
  acts.reserve(strings.size());
  for (const PauliString& s : strings) acts.push_back(basis_action(s));
  const std::uint64_t dim = std::uint64_t{1} << n;
  const std::size_t m = strings.size();

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = j; k < m; ++k) pairs.emplace_back(j, k);

  bool found = false;
  Violation best{m, m, 0};
  const std::int64_t np = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t pi = 0; pi < np; ++pi) {
    auto [j, k] = pairs[static_cast<std::size_t>(pi)];
    const BasisAction &aj = acts[j], &ak = acts[k];
    for (std::uint64_t b = 0; b < dim; ++b) {
      bool ok;
      if (j == k) {
        // Gamma_j^2 |b> must be exactly |b>.
        std::uint64_t b1 = b ^ aj.xmask;
        unsigned e = (action_exp(aj, b) + action_exp(aj, b1)) % 4;
        ok = ((b1 ^ aj.xmask) == b) && e == 0;
      } else {
        std::uint64_t bk = b ^ ak.xmask;
        unsigned ejk = (action_exp(ak, b) + action_exp(aj, bk)) % 4;
        std::uint64_t bj = b ^ aj.xmask;
        unsigned ekj = (action_exp(aj, b) + action_exp(ak, bj)) % 4;
        // Same output index either way; the two phases must cancel.
        ok = (ejk + 2) % 4 == ekj;
      }
      if (!ok) {
        Violation v{j, k, b};
#pragma omp critical
        {
          if (!found || v < best) {
            best = v;
            found = true;
          }
        }
        break;
      }
    }
  }
  if (found) {
    rep.pass = false;
    std::ostringstream d;
    d << "k=" << best.j << " k'=" << best.k << " detail=anticommutator nonzero at basis "
      << best.b;
    rep.first_violation = d.str();
  }
  return rep;
}

VerificationReport check_car(const Encoding& e, std::size_t limit) {
  return check_car(majoranas(e), e.scheme, limit);
}

VerificationReport check_fock_action(const Encoding& e, std::size_t limit) {
  require_limit(e.n, limit);
  if (!e.g_based())
    throw UnsupportedScheme("check_fock_action: needs a G-based scheme");
  VerificationReport rep{"check_fock_action", e.scheme, e.n, true, ""};
  const std::uint64_t dim = std::uint64_t{1} << e.n;

  for (std::size_t j = 0; j < e.n && rep.pass; ++j) {
    for (int dagger = 1; dagger >= 0 && rep.pass; --dagger) {
      PauliPolynomial op = dagger ? creation(e, j) : annihilation(e, j);
      std::vector<std::pair<Dyadic, BasisAction>> terms;
      for (const auto& [coeff, str] : op.terms()) terms.emplace_back(coeff, basis_action(str));
      for (std::uint64_t fi = 0; fi < dim; ++fi) {
        BitVector f = bits_from_index(e.n, fi);
        std::uint64_t q = basis_index(gf2_matvec(*e.G, f));
        // Collect the exact polynomial action on |Gf>.
        std::vector<std::pair<std::uint64_t, Dyadic>> got;
        for (const auto& [coeff, act] : terms) {
          std::uint64_t dst = q ^ act.xmask;
          Dyadic c = coeff.times_phase(Phase::i_pow(action_exp(act, q)));
          bool merged = false;
          for (auto& [idx, acc] : got)
            if (idx == dst) {
              acc = acc + c;
              merged = true;
              break;
            }
          if (!merged) got.emplace_back(dst, c);
        }
        std::erase_if(got, [](const auto& p) { return p.second.is_zero(); });

        auto expected = fermionic_apply(j, dagger != 0, FermionBasisState{f, 1});
        bool ok;
        if (!expected) {
          ok = got.empty();
        } else {
          std::uint64_t q2 = basis_index(gf2_matvec(*e.G, expected->occupation));
          ok = got.size() == 1 && got[0].first == q2 &&
               got[0].second == Dyadic(expected->sign, 0, 0);
        }
        if (!ok) {
          rep.pass = false;
          std::ostringstream d;
          d << "k=" << (2 * j + (dagger ? 0 : 1)) << " detail=" << (dagger ? "creation" : "annihilation")
            << " j=" << j << " wrong action on f=" << f.str();
          rep.first_violation = d.str();
          break;
        }
      }
    }
  }

  // Number operators act as occupation projectors on encoded basis states.
  for (std::size_t j = 0; j < e.n && rep.pass; ++j) {
    PauliPolynomial num = number_op(e, j);
    std::vector<std::pair<Dyadic, BasisAction>> terms;
    for (const auto& [coeff, str] : num.terms()) terms.emplace_back(coeff, basis_action(str));
    for (std::uint64_t fi = 0; fi < dim; ++fi) {
      BitVector f = bits_from_index(e.n, fi);
      std::uint64_t q = basis_index(gf2_matvec(*e.G, f));
      Dyadic diag = Dyadic::zero();
      bool offdiag = false;
      for (const auto& [coeff, act] : terms) {
        Dyadic c = coeff.times_phase(Phase::i_pow(action_exp(act, q)));
        if ((q ^ act.xmask) == q)
          diag = diag + c;
        else if (!c.is_zero())
          offdiag = true;
      }
      bool want = f.get(j);
      if (offdiag || diag != Dyadic(want ? 1 : 0, 0, 0)) {
        rep.pass = false;
        std::ostringstream d;
        d << "k=" << j << " detail=number_op eigenvalue mismatch on f=" << f.str();
        rep.first_violation = d.str();
        break;
      }
    }
  }
  return rep;
}

VerificationReport check_conjugation(const Encoding& e, std::size_t limit) {
  require_limit(e.n, limit);
  if (!e.g_based())
    throw UnsupportedScheme("check_conjugation: needs a G-based scheme");
  VerificationReport rep{"check_conjugation", e.scheme, e.n, true, ""};
  const std::uint64_t dim = std::uint64_t{1} << e.n;

  std::vector<std::uint64_t> perm(dim), perm_inv(dim);
  for (std::uint64_t b = 0; b < dim; ++b) {
    BitVector f = bits_from_index(e.n, b);
    perm[b] = basis_index(gf2_matvec(*e.G, f));
    perm_inv[b] = basis_index(gf2_matvec(*e.Ginv, f));
  }

  Encoding jw = make_encoding(Scheme::jw, e.n);
  for (std::size_t k = 0; k < 2 * e.n; ++k) {
    BasisAction ajw = basis_action(majorana(jw, k));
    BasisAction aenc = basis_action(majorana(e, k));
    for (std::uint64_t b = 0; b < dim; ++b) {
      std::uint64_t b0 = perm_inv[b];
      std::uint64_t b1 = b0 ^ ajw.xmask;
      unsigned e1 = action_exp(ajw, b0);
      std::uint64_t lhs = perm[b1];
      std::uint64_t rhs = b ^ aenc.xmask;
      unsigned e2 = action_exp(aenc, b);
      if (lhs != rhs || e1 != e2) {
        rep.pass = false;
        std::ostringstream d;
        d << "k=" << k << " detail=conjugated operator differs at basis " << b;
        rep.first_violation = d.str();
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace f2q
