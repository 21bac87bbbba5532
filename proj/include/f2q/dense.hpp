#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "f2q/dyadic.hpp"
#include "f2q/encoding.hpp"

namespace f2q {

inline constexpr std::size_t kDefaultDenseLimit = 10;
inline constexpr std::size_t kMaxDenseLimit = 14;

/// Fock basis vector with a tracked fermionic sign.
struct FermionBasisState {
  BitVector occupation;
  int sign = 1;
  bool operator==(const FermionBasisState&) const = default;
};

/// Creation (dagger) or annihilation on mode j: flips the occupation and
/// multiplies the sign by (-1)^{p_j}, p_j = sum_{i<j} f_i; empty result when
/// the operator annihilates the state.
std::optional<FermionBasisState> fermionic_apply(std::size_t j, bool dagger,
                                                 const FermionBasisState& s);

/// 2^n exact amplitudes; basis index encodes |b_0 b_1 ... b_{n-1}> with
/// qubit 0 as the most significant bit.
struct StateVector {
  std::size_t n = 0;
  std::vector<Dyadic> amp;

  static StateVector zero(std::size_t n);
  static StateVector basis(std::size_t n, std::uint64_t index);
  bool operator==(const StateVector&) const = default;
};

std::uint64_t basis_index(const BitVector& bits);
BitVector bits_from_index(std::size_t n, std::uint64_t index);

/// Exact Pauli application as a phase-decorated basis permutation,
/// parallel over basis states.
StateVector apply_pauli(const PauliString& p, const StateVector& v);
/// Serial reference for apply_pauli.
StateVector apply_pauli_serial(const PauliString& p, const StateVector& v);

StateVector apply_polynomial(const PauliPolynomial& poly, const StateVector& v);

struct VerificationReport {
  std::string check;
  Scheme scheme = Scheme::jw;
  std::size_t n = 0;
  bool pass = false;
  std::string first_violation;

  std::string text() const;
  nlohmann::ordered_json json() const;
};

/// {Gamma_j, Gamma_k} = 2 delta_jk I, by applying both orderings to every
/// computational basis vector. First violation reported by lowest (j, k, b).
VerificationReport check_car(const Encoding& e, std::size_t limit = kDefaultDenseLimit);
/// Same check on an explicit string set (negative controls).
VerificationReport check_car(const std::vector<PauliString>& strings, Scheme scheme,
                             std::size_t limit = kDefaultDenseLimit);

/// Encoded ladder operators reproduce the fermionic action (phase and
/// occupation update, including the annihilated cases) on every basis
/// state, and number operators act as occupation projectors.
VerificationReport check_fock_action(const Encoding& e, std::size_t limit = kDefaultDenseLimit);

/// C_G Gamma_k^{JW} C_G+ = Gamma_k, with C_G the basis permutation
/// |f> -> |Gf>, verified by action on every basis vector.
VerificationReport check_conjugation(const Encoding& e, std::size_t limit = kDefaultDenseLimit);

}  // namespace f2q
