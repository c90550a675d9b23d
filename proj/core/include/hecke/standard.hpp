#pragma once

#include "hecke/character.hpp"
#include "hecke/rep.hpp"

namespace hecke {

/// The seven valued units entering the rank-6 lattice of an ordinary integral
/// character: z and the rescaling ratios a, b, c with their q-complements
/// a' = q/a, b' = q/b, c' = q/c. All seven are integral, z has valuation 0.
struct LatticeEntries {
  VUnit z, a, b, c, ap, bp, cp;
};

/// Computes the entries from the q-factor table. Throws NotOrdinaryError /
/// NotIntegralError.
LatticeEntries lattice_entries(const Character& chi);

/// The 6-dimensional representation over the residue field obtained by
/// reducing the canonical lattice, on the basis
/// (g, Tg, T^2 g, h, T h, T^2 h) where g is the canonical generator and
/// h its S1-partner. Columns are images of basis vectors; q - 1 reduces
/// to -1 since q vanishes in the residue field.
Rep build_reduced_standard(const Character& chi);

}  // namespace hecke
