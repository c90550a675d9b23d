#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hecke/character.hpp"
#include "hecke/decomp.hpp"

namespace hecke {

struct SweepResult {
  long checked = 0;
  std::vector<std::string> counterexamples;
  long passed() const {
    return checked - static_cast<long>(counterexamples.size());
  }
  bool ok() const { return counterexamples.empty(); }
  void merge(const SweepResult& o) {
    checked += o.checked;
    counterexamples.insert(counterexamples.end(), o.counterexamples.begin(),
                           o.counterexamples.end());
  }
};

/// Calls fn with every integral character over f with valuation of q equal
/// to e: all valuation triples summing to 0 with |v_i| <= e, all unit
/// triples.
void for_each_integral_character(const Field& f, int e,
                                 const std::function<void(const Character&)>& fn);

/// Constructs every zoo module with every choice of nonzero parameters; a
/// construction that trips the relation validator or a non-scalar central
/// element is a counterexample.
SweepResult sweep_zoo_relations(const Field& f);

/// Same, on `count` random labels (kinds and parameters uniform).
SweepResult sweep_zoo_relations_random(const Field& f, int count, uint64_t seed);

/// Exhaustive comparison of the stated irreducibility criteria against the
/// submodule engine, including the stated submodule/quotient (and factor
/// multiset) for reducible parameters, and identification of every
/// irreducible member.
SweepResult sweep_irreducibility(const Field& f);

/// Spot version: `count` random labels, engine vs criterion only.
SweepResult sweep_irreducibility_random(const Field& f, int count, uint64_t seed);

/// For every integral character with 1 <= val(q) <= e_max: classification
/// must match some case, and the composition series of the reduced standard
/// module must equal the predicted factors, structure tag, and stated
/// submodule/quotient.
SweepResult sweep_classification(const Field& f, int e_max);

/// For every classification witness: the central scalars of the reduced
/// standard module equal (r(y1y2y3), r(q y3), r(q y2 y3)); every factor
/// carries the same central triple; the stratum matches the case.
SweepResult sweep_central_characters(const Field& f, int e_max);

/// `count` random integral characters; the factor multisets of the reduced
/// standard modules of chi and w.chi agree for every w.
SweepResult sweep_s3_invariance(const Field& f, int count, uint64_t seed);

/// For all parameter choices: pairs of distinct equal-dimension labels
/// sharing a central triple admit no intertwiner.
SweepResult sweep_non_isomorphism(const Field& f);

}  // namespace hecke
