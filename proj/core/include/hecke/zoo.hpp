#pragma once

#include <optional>

#include "hecke/labels.hpp"
#include "hecke/rep.hpp"

namespace hecke {

/// Builds the representation named by a label, on the standard basis for its
/// dimension: (v, Tv, T^2 v[, w, Tw, T^2 w]) with T acting as the cyclic
/// shift with T^3 = z on each 3-block; dimension 2 uses (w, Tw) with
/// T^2 = -y^2 - y T; dimension 1 is (T, S1) = (y, 0) or (y, -1).
/// Throws BadParamsError when a parameter that must be nonzero is zero.
Rep make_module(const SimpleLabel& label);

/// Reducibility metadata: the irreducibility criterion of the family, and
/// for reducible parameters the composition factors (with the unique
/// submodule/quotient when the module is uniserial of length 2).
struct ZooStructure {
  bool irreducible;
  std::vector<SimpleLabel> factors;
  std::optional<SimpleLabel> submodule;
  std::optional<SimpleLabel> quotient;
  Structure structure;
};

ZooStructure expected_structure(const SimpleLabel& label);

/// Convenience: the criterion alone.
bool expected_irreducible(const SimpleLabel& label);

/// All valid labels of one kind over a field (every choice of nonzero
/// parameters), for exhaustive sweeps.
std::vector<SimpleLabel> all_labels_of_kind(Kind k, const Field& f);

/// Every kind, in enum order.
std::vector<Kind> all_kinds();

}  // namespace hecke
