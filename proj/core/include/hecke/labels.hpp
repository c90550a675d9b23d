#pragma once

#include <string>
#include <vector>

#include "hecke/field.hpp"

namespace hecke {

/// The named simple-module families. Tilde-decorated family names are
/// spelled with a trailing 't'.
enum class Kind {
  M1_0,   // one-dimensional, S1 -> 0; parameter (y)
  M1_m1,  // one-dimensional, S1 -> -1; parameter (y)
  M2,     // dimension 2; parameter (y)
  M2t,    // dimension 2, twisted; parameter (y)
  M3,     // dimension 3; parameters (z, y)
  M3t,    // dimension 3, twisted; parameters (z, y)
  N3,     // dimension 3; parameters (z, y)
  N3t,    // dimension 3, twisted; parameters (z, y)
  P3,     // dimension 3, supersingular; parameter (z)
  P3t,    // dimension 3, supersingular, twisted; parameter (z)
  L6,     // dimension 6; parameters (z, y)
  L6t,    // dimension 6, twisted; parameters (z, y')
  K6,     // dimension 6; parameters (z, y, y')
};

const char* kind_name(Kind k);
int kind_dim(Kind k);
int kind_param_count(Kind k);
/// Kind from its JSON/CLI name ("M2t", "K6", ...); throws on unknown names.
Kind kind_from_name(const std::string& name);

/// A zoo module tag: the family plus its field parameters, in the per-kind
/// order documented on Kind.
struct SimpleLabel {
  Kind kind;
  std::vector<FieldElem> params;

  SimpleLabel(Kind k, std::vector<FieldElem> ps)
      : kind(k), params(std::move(ps)) {}

  int dim() const { return kind_dim(kind); }
  std::string to_string() const;

  bool operator==(const SimpleLabel& o) const;
  bool operator!=(const SimpleLabel& o) const { return !(*this == o); }
  /// Canonical order: by kind, then by parameter indices.
  bool operator<(const SimpleLabel& o) const;
};

/// Coarse shape of a module established by decomposition.
enum class Structure {
  Irreducible,
  Uniserial2,  // unique proper nonzero submodule; length 2
  DirectSum2,  // direct sum of two irreducibles
  Length4,     // indecomposable of length 4
  Other,
};

const char* structure_name(Structure s);

/// Sorted copy, for multiset comparison of factor lists.
std::vector<SimpleLabel> sorted_labels(std::vector<SimpleLabel> labels);

}  // namespace hecke
