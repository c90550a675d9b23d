// Acceptance suite: one check per claim, exact arithmetic throughout, one
// pass/fail line per criterion. Exit code 0 only if every criterion holds.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "hecke/char0.hpp"
#include "hecke/decomp.hpp"
#include "hecke/standard.hpp"
#include "hecke/sweeps.hpp"
#include "hecke/zoo.hpp"

using namespace hecke;

namespace {

constexpr uint64_t kSeed = 20240817;

int failures = 0;

void report(int criterion, const std::string& what, bool ok,
            const std::string& detail, double seconds) {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": "
            << what << " (" << detail << ", " << seconds << "s)\n";
  if (!ok) ++failures;
}

void dump_counterexamples(const SweepResult& r, size_t limit = 5) {
  for (size_t i = 0; i < r.counterexamples.size() && i < limit; ++i)
    std::cout << "       counterexample: " << r.counterexamples[i] << "\n";
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

Field f2() { return Field(2, 1, {0, 1}); }
Field f3() { return Field(3, 1, {0, 1}); }
Field f5() { return Field(5, 1, {0, 1}); }
Field f9() { return Field(3, 2, {1, 0, 1}); }

int e_max_for(const Field& f) { return f.size() == 5 ? 2 : 3; }

}  // namespace

int main() {
  // 1. Relation suite: every zoo module over F_2, F_3, F_5 exhaustively and
  //    200 random parameter sets over F_9; every reduced standard module of
  //    every classified witness. Construction validates all four relation
  //    families exactly.
  {
    Timer t;
    SweepResult r;
    for (Field f : {f2(), f3(), f5()}) r.merge(sweep_zoo_relations(f));
    r.merge(sweep_zoo_relations_random(f9(), 200, kSeed));
    for (Field f : {f2(), f3(), f5()}) {
      for (int e = 1; e <= e_max_for(f); ++e) {
        for_each_integral_character(f, e, [&](const Character& chi) {
          ++r.checked;
          try {
            build_reduced_standard(ordinarize(chi).second);
          } catch (const Error& err) {
            r.counterexamples.push_back(chi.to_string() + ": " + err.what());
          }
        });
      }
    }
    report(1, "relation suite on zoo and reduced standard modules", r.ok(),
           std::to_string(r.checked) + " modules", t.seconds());
    dump_counterexamples(r);
  }

  // 2. Central-word validation over exact rationals; gates the q = 0
  //    specialization used everywhere else.
  {
    Timer t;
    auto oracle = char0::run_central_word_oracle(20, kSeed);
    bool ok = oracle.ok() && oracle.samples == 20;
    report(2, "characteristic-zero central-word oracle", ok,
           std::to_string(oracle.checks) + " exact matrix identities",
           t.seconds());
    for (const auto& f : oracle.failures) std::cout << "       " << f << "\n";
  }

  // 3. Irreducibility criteria, exhaustive over F_2, F_3, F_5, with spot
  //    checks over F_9: engine agrees with the stated criteria, and
  //    reducible members have exactly the stated submodule and quotient.
  {
    Timer t;
    SweepResult r;
    for (Field f : {f2(), f3(), f5()}) r.merge(sweep_irreducibility(f));
    r.merge(sweep_irreducibility_random(f9(), 12, kSeed));
    report(3, "irreducibility criteria vs submodule engine", r.ok(),
           std::to_string(r.checked) + " labels", t.seconds());
    dump_counterexamples(r);
  }

  // 4. Classification sweep: totality (no unmatched integral character) and
  //    composition series equal to the predicted factors with the predicted
  //    structure tag and stated submodule.
  {
    Timer t;
    SweepResult r;
    for (Field f : {f2(), f3(), f5()})
      r.merge(sweep_classification(f, e_max_for(f)));
    report(4, "classification totality and predicted decompositions", r.ok(),
           std::to_string(r.checked) + " characters", t.seconds());
    dump_counterexamples(r);
  }

  // 5. Orbit invariance: factor multisets of the reduced standard modules
  //    agree across the coordinate-permutation orbit, 500 random integral
  //    characters per field.
  {
    Timer t;
    SweepResult r;
    for (Field f : {f2(), f3(), f5()})
      r.merge(sweep_s3_invariance(f, 500, kSeed));
    report(5, "factor multisets constant on orbits", r.ok(),
           std::to_string(r.checked) + " characters x 6 translates",
           t.seconds());
    dump_counterexamples(r);
  }

  // 6. Central characters: scalars of the reduced module equal
  //    (r(y1y2y3), r(q y3), r(q y2 y3)), every factor carries the same
  //    triple, strata match the case.
  {
    Timer t;
    SweepResult r;
    for (Field f : {f2(), f3(), f5()})
      r.merge(sweep_central_characters(f, e_max_for(f)));
    report(6, "central characters and strata", r.ok(),
           std::to_string(r.checked) + " characters", t.seconds());
    dump_counterexamples(r);
  }

  // 7. Non-isomorphism over F_5: no intertwiner between distinct
  //    equal-dimension labels sharing a central triple (including the
  //    2-dimensional pair).
  {
    Timer t;
    SweepResult r = sweep_non_isomorphism(f5());
    bool m2_pair_checked = false;
    for (const auto& y : f5().units()) {
      Rep a = make_module(SimpleLabel(Kind::M2, {y}));
      Rep b = make_module(SimpleLabel(Kind::M2t, {y}));
      ++r.checked;
      m2_pair_checked = true;
      if (iso(a, b))
        r.counterexamples.push_back("M2/M2t pair at y=" + y.to_string());
    }
    report(7, "pairwise non-isomorphism of equal-dimension labels",
           r.ok() && m2_pair_checked, std::to_string(r.checked) + " pairs",
           t.seconds());
    dump_counterexamples(r);
  }

  // 8. Completeness at desk scale: every irreducible constituent that
  //    appeared in criteria 3-6 was identified with exactly one label.
  //    Identification failures or ambiguities surface as counterexamples or
  //    exceptions in those sweeps; rerun the identification load explicitly
  //    on every irreducible zoo member and every factor of every classified
  //    witness over F_3 and F_5.
  {
    Timer t;
    SweepResult r;
    try {
      for (Field f : {f3(), f5()}) {
        for (Kind k : all_kinds()) {
          for (const SimpleLabel& label : all_labels_of_kind(k, f)) {
            if (!expected_irreducible(label)) continue;
            ++r.checked;
            if (!(identify(make_module(label)) == label))
              r.counterexamples.push_back(label.to_string() +
                                          " identified as a different label");
          }
        }
        for (int e = 1; e <= e_max_for(f); ++e) {
          for_each_integral_character(f, e, [&](const Character& chi) {
            if (!is_ordinary(chi)) return;
            ++r.checked;
            composition_factors(build_reduced_standard(chi));  // throws on failure
          });
        }
      }
    } catch (const Error& err) {
      r.counterexamples.push_back(err.what());
    }
    report(8, "every irreducible constituent matches exactly one label",
           r.ok(), std::to_string(r.checked) + " identifications",
           t.seconds());
    dump_counterexamples(r);
  }

  // Informational: the shape of the length-four lattice, recorded from the
  // engine rather than assumed.
  {
    Field f = f5();
    PConfig cfg(f, 1);
    Character chi(cfg, VUnit(1, f.from_int(2)), VUnit(0, f.from_int(2)),
                  VUnit(-1, f.from_int(2)));
    Rep rep = build_reduced_standard(chi);
    DecompReport report9 = composition_series(rep);
    std::cout << "[info] length-four witness lattice (dim:count):";
    for (auto& [d, c] : report9.lattice_dims) std::cout << " " << d << ":" << c;
    Subspace soc = socle(rep);
    std::cout << "; socle = " << identify(restrict_to(rep, soc)).to_string()
              << " (two parallel maximal chains)\n";
  }

  if (failures == 0) {
    std::cout << "acceptance: all criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << failures << " criterion(s) FAILED\n";
  return 1;
}
