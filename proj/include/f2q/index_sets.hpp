#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "f2q/gf2.hpp"

namespace f2q {

/// Update, flip, parity and remainder sets of mode i for an invertible G.
/// Both sorted index lists and packed masks are kept: masks make symmetric
/// differences word-parallel, lists make rendering deterministic.
struct IndexSetQuad {
  std::size_t mode = 0;
  std::vector<std::size_t> update, flip, parity, remainder;
  BitVector update_mask, flip_mask, parity_mask, remainder_mask;
};

/// U = {j : G[j][i]=1}, F = {j : Ginv[i][j]=1}, P = {j : (Pi*Ginv)[i][j]=1},
/// R = F symmetric-difference P. Requires Ginv = gf2_invert(G).
IndexSetQuad compute_sets(const BitMatrix& g, const BitMatrix& ginv, std::size_t i);

/// Quads for every mode with one inversion; P accumulated as the cumulative
/// symmetric difference of F(0..i-1).
std::vector<IndexSetQuad> all_sets(const BitMatrix& g);

/// "i: U={...} F={...} P={...} R={...}"
std::string sets_line(const IndexSetQuad& q);

}  // namespace f2q
