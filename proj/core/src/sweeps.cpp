#include "hecke/sweeps.hpp"

#include <array>
#include <map>
#include <random>
#include <sstream>

#include "hecke/standard.hpp"
#include "hecke/zoo.hpp"

namespace hecke {

namespace {

std::string label_list(const std::vector<SimpleLabel>& ls) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < ls.size(); ++i) {
    if (i) os << ", ";
    os << ls[i].to_string();
  }
  os << "}";
  return os.str();
}

// Memo key for a classified representative: e plus the three (val, unit) pairs.
using WitnessKey = std::array<int, 7>;

WitnessKey witness_key(const Character& chi) {
  return {chi.cfg.e,
          chi.y1().val(), static_cast<int>(chi.y1().unit().index()),
          chi.y2().val(), static_cast<int>(chi.y2().unit().index()),
          chi.y3().val(), static_cast<int>(chi.y3().unit().index())};
}

}  // namespace

void for_each_integral_character(
    const Field& f, int e, const std::function<void(const Character&)>& fn) {
  PConfig cfg(f, e);
  std::vector<FieldElem> units = f.units();
  for (int v1 = -e; v1 <= e; ++v1) {
    for (int v2 = -e; v2 <= e; ++v2) {
      int v3 = -v1 - v2;
      if (v3 < -e || v3 > e) continue;
      for (const auto& u1 : units) {
        for (const auto& u2 : units) {
          for (const auto& u3 : units) {
            Character chi(cfg, VUnit(v1, u1), VUnit(v2, u2), VUnit(v3, u3));
            if (!is_integral(chi)) continue;
            fn(chi);
          }
        }
      }
    }
  }
}

SweepResult sweep_zoo_relations(const Field& f) {
  SweepResult res;
  for (Kind k : all_kinds()) {
    for (const SimpleLabel& label : all_labels_of_kind(k, f)) {
      ++res.checked;
      try {
        Rep rep = make_module(label);
        central_scalars(rep);
      } catch (const Error& err) {
        res.counterexamples.push_back(label.to_string() + ": " + err.what());
      }
    }
  }
  return res;
}

SweepResult sweep_zoo_relations_random(const Field& f, int count,
                                       uint64_t seed) {
  SweepResult res;
  std::mt19937_64 rng(seed);
  std::vector<Kind> kinds = all_kinds();
  std::vector<FieldElem> units = f.units();
  auto random_unit = [&] { return units[rng() % units.size()]; };
  for (int i = 0; i < count; ++i) {
    Kind k = kinds[rng() % kinds.size()];
    std::vector<FieldElem> params;
    for (int j = 0; j < kind_param_count(k); ++j) params.push_back(random_unit());
    SimpleLabel label(k, std::move(params));
    ++res.checked;
    try {
      Rep rep = make_module(label);
      central_scalars(rep);
    } catch (const Error& err) {
      res.counterexamples.push_back(label.to_string() + ": " + err.what());
    }
  }
  return res;
}

namespace {

void check_label_structure(const SimpleLabel& label, SweepResult& res) {
  ++res.checked;
  try {
    Rep rep = make_module(label);
    ZooStructure expected = expected_structure(label);
    DecompReport report = composition_series(rep);
    bool actual_irr = report.structure == Structure::Irreducible;
    if (actual_irr != expected.irreducible) {
      res.counterexamples.push_back(
          label.to_string() + ": criterion says " +
          (expected.irreducible ? "irreducible" : "reducible") +
          " but engine found " + structure_name(report.structure));
      return;
    }
    if (expected.irreducible) {
      if (!(report.series.size() == 1 && report.series[0] == label)) {
        res.counterexamples.push_back(label.to_string() +
                                      ": identified as " +
                                      label_list(report.series));
      }
      return;
    }
    if (sorted_labels(report.series) != sorted_labels(expected.factors)) {
      res.counterexamples.push_back(
          label.to_string() + ": factors " + label_list(report.series) +
          " but expected " + label_list(expected.factors));
      return;
    }
    if (report.structure != expected.structure) {
      res.counterexamples.push_back(
          label.to_string() + ": structure " +
          structure_name(report.structure) + " but expected " +
          structure_name(expected.structure));
      return;
    }
    if (expected.submodule &&
        !(report.series.front() == *expected.submodule &&
          report.series.back() == *expected.quotient)) {
      res.counterexamples.push_back(
          label.to_string() + ": series " + label_list(report.series) +
          " but expected submodule " + expected.submodule->to_string() +
          " and quotient " + expected.quotient->to_string());
    }
  } catch (const TooLargeError&) {
    throw;
  } catch (const Error& err) {
    res.counterexamples.push_back(label.to_string() + ": " + err.what());
  }
}

}  // namespace

SweepResult sweep_irreducibility(const Field& f) {
  SweepResult res;
  for (Kind k : all_kinds())
    for (const SimpleLabel& label : all_labels_of_kind(k, f))
      check_label_structure(label, res);
  return res;
}

SweepResult sweep_irreducibility_random(const Field& f, int count,
                                        uint64_t seed) {
  SweepResult res;
  std::mt19937_64 rng(seed);
  std::vector<Kind> kinds = all_kinds();
  std::vector<FieldElem> units = f.units();
  for (int i = 0; i < count; ++i) {
    Kind k = kinds[rng() % kinds.size()];
    std::vector<FieldElem> params;
    for (int j = 0; j < kind_param_count(k); ++j)
      params.push_back(units[rng() % units.size()]);
    check_label_structure(SimpleLabel(k, std::move(params)), res);
  }
  return res;
}

SweepResult sweep_classification(const Field& f, int e_max) {
  SweepResult res;
  struct Outcome {
    bool ok;
    std::string msg;
  };
  std::map<WitnessKey, Outcome> memo;

  for (int e = 1; e <= e_max; ++e) {
    for_each_integral_character(f, e, [&](const Character& chi) {
      ++res.checked;
      std::optional<Classification> cls_opt;
      try {
        cls_opt = classify(chi);
      } catch (const NoCaseMatchedError&) {
        res.counterexamples.push_back("no case matched: " + chi.to_string());
        return;
      }
      const Classification& cls = *cls_opt;

      WitnessKey key = witness_key(cls.representative);
      auto it = memo.find(key);
      if (it == memo.end()) {
        Outcome out{true, ""};
        try {
          Prediction pred = predicted_factors(cls.label,
                                              central_params(cls.representative));
          Rep rep = build_reduced_standard(cls.representative);
          DecompReport report = composition_series(rep);
          DecompReport rev = composition_series(rep, TieOrder::Reversed);
          if (sorted_labels(report.series) != sorted_labels(pred.factors)) {
            out = {false, "factors " + label_list(report.series) +
                              " != predicted " + label_list(pred.factors)};
          } else if (report.structure != pred.structure) {
            out = {false, std::string("structure ") +
                              structure_name(report.structure) +
                              " != predicted " + structure_name(pred.structure)};
          } else if (pred.submodule &&
                     !(report.series.front() == *pred.submodule &&
                       report.series.back() == *pred.quotient)) {
            out = {false, "series " + label_list(report.series) +
                              " does not start with submodule " +
                              pred.submodule->to_string()};
          } else if (rev.factors != report.factors) {
            out = {false, "factor multiset depends on tie-breaking: " +
                              label_list(report.series) + " vs " +
                              label_list(rev.series)};
          }
        } catch (const TooLargeError&) {
          throw;
        } catch (const Error& err) {
          out = {false, err.what()};
        }
        it = memo.emplace(key, std::move(out)).first;
      }
      if (!it->second.ok) {
        res.counterexamples.push_back(
            chi.to_string() + " -> " + cls.label.to_string() +
            " via " + s3_name(cls.w) + ": " + it->second.msg);
      }
    });
  }
  return res;
}

SweepResult sweep_central_characters(const Field& f, int e_max) {
  SweepResult res;
  struct Outcome {
    bool ok;
    std::string msg;
  };
  std::map<WitnessKey, Outcome> memo;

  for (int e = 1; e <= e_max; ++e) {
    for_each_integral_character(f, e, [&](const Character& chi) {
      ++res.checked;
      std::optional<Classification> cls_opt;
      try {
        cls_opt = classify(chi);
      } catch (const NoCaseMatchedError&) {
        res.counterexamples.push_back("no case matched: " + chi.to_string());
        return;
      }
      const Classification& cls = *cls_opt;
      WitnessKey key = witness_key(cls.representative);
      auto it = memo.find(key);
      if (it == memo.end()) {
        Outcome out{true, ""};
        try {
          const Character& rep_chi = cls.representative;
          CentralParams cp = central_params(rep_chi);
          Rep rep = build_reduced_standard(rep_chi);
          CentralScalars cs = central_scalars(rep);
          if (!(cs.z == cp.z && cs.c1 == cp.y && cs.c2 == cp.yp)) {
            out = {false, "central scalars (" + cs.z.to_string() + "," +
                              cs.c1.to_string() + "," + cs.c2.to_string() +
                              ") != " + cp.to_string()};
          }
          // stratum per case
          if (out.ok) {
            int n = cls.label.number;
            bool y0 = cp.y.is_zero(), yp0 = cp.yp.is_zero();
            bool stratum_ok = true;
            if (n == 1) stratum_ok = !y0 && yp0;
            else if (n == 2) stratum_ok = y0 && !yp0;
            else if (n >= 6 && n <= 8) stratum_ok = y0 && yp0;
            else stratum_ok = !y0 && !yp0;  // cases 3, 4, 5, 9
            if (!stratum_ok)
              out = {false, "stratum of " + cp.to_string() +
                                " contradicts case " + std::to_string(n)};
          }
          // every factor carries the same central triple
          if (out.ok) {
            for (const SimpleLabel& l : composition_factors(rep)) {
              CentralScalars fc = central_scalars(make_module(l));
              if (!(fc.z == cp.z && fc.c1 == cp.y && fc.c2 == cp.yp)) {
                out = {false, "factor " + l.to_string() +
                                  " has central scalars (" + fc.z.to_string() +
                                  "," + fc.c1.to_string() + "," +
                                  fc.c2.to_string() + ") != " + cp.to_string()};
                break;
              }
            }
          }
        } catch (const TooLargeError&) {
          throw;
        } catch (const Error& err) {
          out = {false, err.what()};
        }
        it = memo.emplace(key, std::move(out)).first;
      }
      if (!it->second.ok)
        res.counterexamples.push_back(chi.to_string() + ": " + it->second.msg);
    });
  }
  return res;
}

SweepResult sweep_s3_invariance(const Field& f, int count, uint64_t seed) {
  SweepResult res;
  std::mt19937_64 rng(seed);
  std::vector<FieldElem> units = f.units();
  std::map<WitnessKey, std::vector<SimpleLabel>> memo;

  auto factors_of = [&](const Character& chi) {
    Character rep_chi = ordinarize(chi).second;
    WitnessKey key = witness_key(rep_chi);
    auto it = memo.find(key);
    if (it == memo.end()) {
      std::vector<SimpleLabel> fs =
          sorted_labels(composition_factors(build_reduced_standard(rep_chi)));
      it = memo.emplace(key, std::move(fs)).first;
    }
    return it->second;
  };

  for (int i = 0; i < count; ++i) {
    int e = 1 + static_cast<int>(rng() % 3);
    int v1, v2, v3;
    do {
      v1 = static_cast<int>(rng() % (2 * e + 1)) - e;
      v2 = static_cast<int>(rng() % (2 * e + 1)) - e;
      v3 = -v1 - v2;
    } while (v3 < -e || v3 > e);
    PConfig cfg(f, e);
    Character chi(cfg, VUnit(v1, units[rng() % units.size()]),
                  VUnit(v2, units[rng() % units.size()]),
                  VUnit(v3, units[rng() % units.size()]));
    ++res.checked;
    std::vector<SimpleLabel> base = factors_of(chi);
    for (S3 w : kS3All) {
      std::vector<SimpleLabel> other = factors_of(s3_act(w, chi));
      if (other != base) {
        res.counterexamples.push_back(
            chi.to_string() + " vs " + s3_name(w) + ": " + label_list(base) +
            " != " + label_list(other));
      }
    }
  }
  return res;
}

SweepResult sweep_non_isomorphism(const Field& f) {
  SweepResult res;
  struct Entry {
    SimpleLabel label;
    Rep rep;
  };
  // group by (dimension, central triple)
  std::map<std::array<long, 4>, std::vector<Entry>> groups;
  for (Kind k : all_kinds()) {
    for (const SimpleLabel& label : all_labels_of_kind(k, f)) {
      Rep rep = make_module(label);
      CentralScalars cs = central_scalars(rep);
      std::array<long, 4> key = {label.dim(), cs.z.index(), cs.c1.index(),
                                 cs.c2.index()};
      groups[key].push_back(Entry{label, std::move(rep)});
    }
  }
  for (auto& [key, entries] : groups) {
    for (size_t i = 0; i < entries.size(); ++i) {
      for (size_t j = i + 1; j < entries.size(); ++j) {
        ++res.checked;
        if (iso(entries[i].rep, entries[j].rep)) {
          res.counterexamples.push_back(
              entries[i].label.to_string() + " isomorphic to " +
              entries[j].label.to_string());
        }
      }
    }
  }
  return res;
}

}  // namespace hecke
