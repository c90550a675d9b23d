#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hecke/labels.hpp"
#include "hecke/rep.hpp"

namespace hecke {

/// Hard enumeration caps for the brute-force engine. Exhaustive submodule
/// search enumerates all projective points, so both are enforced with a
/// TooLargeError rather than sampled past.
constexpr long kMaxDecompFieldSize = 9;
constexpr int kMaxDecompDim = 6;

/// An invariant subspace in canonical form: the basis rows are the unique
/// reduced row echelon form, so equal subspaces compare equal.
struct Subspace {
  Matrix basis;
  std::vector<int> pivots;

  int dim() const { return basis.rows(); }
  int ambient_dim() const { return basis.cols(); }

  bool operator==(const Subspace& o) const { return basis == o.basis; }
  bool operator<(const Subspace& o) const;

  /// True if `o` is contained in this subspace.
  bool contains(const Subspace& o) const;
};

/// Smallest T- and S1-stable subspace containing v (raw element indices).
/// Breadth-first closure with row reduction; the closure terminates exactly
/// when every generator image reduces to zero against the basis, which is
/// the stability condition itself.
Subspace spin(const Rep& rep, const std::vector<uint16_t>& v);

/// All proper nonzero invariant subspaces: cyclic submodules from every
/// projective point, closed under pairwise sums, deduplicated, sorted by
/// (dimension, canonical form). Throws TooLargeError past the caps.
std::vector<Subspace> proper_submodules(const Rep& rep);

bool is_irreducible(const Rep& rep);

/// Action of the rep restricted to an invariant subspace, in the subspace's
/// canonical basis.
Rep restrict_to(const Rep& rep, const Subspace& sub);

/// Action on the quotient by an invariant subspace, in the basis of standard
/// coordinates complementary to the subspace's pivot columns.
Rep quotient_by(const Rep& rep, const Subspace& sub);

/// Minimal-submodule tie-breaking order; Reversed exists to demonstrate the
/// factor multiset does not depend on the choice.
enum class TieOrder { Canonical, Reversed };

struct DecompReport {
  /// Factors in extraction order (first entry is a minimal submodule).
  std::vector<SimpleLabel> series;
  /// Canonical multiset: sorted labels with multiplicities.
  std::vector<std::pair<SimpleLabel, int>> factors;
  Structure structure;
  /// (dimension, count) of proper nonzero submodules, ascending dimension.
  std::vector<std::pair<int, int>> lattice_dims;
};

/// Full analysis: composition series by repeated minimal-submodule
/// extraction, factor identification, structure tag from the lattice.
/// Throws IdentifyFailedError if some irreducible factor matches no label.
DecompReport composition_series(const Rep& rep,
                                TieOrder tie = TieOrder::Canonical);

/// Factor multiset only (no lattice or structure tag); cheaper for sweeps.
std::vector<SimpleLabel> composition_factors(const Rep& rep);

/// An invertible intertwiner X with X T_a = T_b X and X S1_a = S1_b X, or
/// nullopt. Searches the full solution space of the intertwining equations.
std::optional<Matrix> iso(const Rep& a, const Rep& b);

/// Names an irreducible representation: reconstructs the candidate labels
/// from dimension and central scalars, then confirms by intertwiner search.
/// Throws IdentifyFailedError / AmbiguousMatchError.
SimpleLabel identify(const Rep& rep);

/// Sum of all minimal submodules.
Subspace socle(const Rep& rep);

}  // namespace hecke
