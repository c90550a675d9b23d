// Command-line front end: classify characters, build and decompose reduced
// standard modules, construct zoo modules, and run verification sweeps.
//
// Exit codes: 0 success, 1 bad input, 2 a verified claim failed
// (classification gap, disagreement, counterexample), 3 resource bound hit.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "hecke/char0.hpp"
#include "hecke/decomp.hpp"
#include "hecke/json_io.hpp"
#include "hecke/standard.hpp"
#include "hecke/sweeps.hpp"
#include "hecke/zoo.hpp"

namespace {

using hecke::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitFalsified = 2;
constexpr int kExitResource = 3;

struct OutputOptions {
  std::string out_path;
  bool pretty = false;
};

void emit(const json& j, const OutputOptions& opts) {
  std::string text = opts.pretty ? j.dump(2) : j.dump();
  if (opts.out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream os(opts.out_path);
    if (!os) throw hecke::Error("cannot open output file " + opts.out_path);
    os << text << "\n";
  }
}

json parse_json_arg(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw hecke::Error(std::string("malformed JSON for ") + what);
  return j;
}

// Accepts a full descriptor {"p":..,"k":..,"modulus":[..]} or a bare field
// size resolved through the built-in table (e.g. --field 9).
hecke::Field parse_field(const std::string& text) {
  json j = parse_json_arg(text, "--field");
  if (j.is_number_integer()) return hecke::builtin_field(j.get<long>());
  return hecke::field_from_json(j);
}

hecke::Character parse_character(const hecke::Field& f, const std::string& text,
                                 std::optional<int> e_override) {
  json j = parse_json_arg(text, "--char");
  if (e_override) j["e"] = *e_override;
  if (!j.contains("e"))
    throw hecke::Error("character needs e (in the JSON or via --e)");
  return hecke::character_from_json(f, j);
}

void check_bound(long bound) {
  if (bound > hecke::kMaxDecompFieldSize)
    throw hecke::Error("--bound above the supported limit " +
                       std::to_string(hecke::kMaxDecompFieldSize));
}

json sweep_result_json(const hecke::SweepResult& r) {
  return json{{"checked", r.checked},
              {"passed", r.passed()},
              {"counterexamples", r.counterexamples}};
}

int run_classify(const std::string& field_arg, const std::string& char_arg,
                 std::optional<int> e_override, bool all_cases,
                 const OutputOptions& opts) {
  hecke::Field f = parse_field(field_arg);
  hecke::Character chi = parse_character(f, char_arg, e_override);
  hecke::Classification cls = hecke::classify(chi);
  hecke::CentralParams cp = hecke::central_params(cls.representative);
  hecke::Prediction pred = hecke::predicted_factors(cls.label, cp);

  json out = hecke::classification_to_json(cls);
  out["central_params"] = hecke::central_params_to_json(cp);
  out["predicted_factors"] = hecke::prediction_to_json(pred);
  if (all_cases) {
    json all = json::array();
    for (const auto& c : hecke::classify_all(chi)) {
      all.push_back(json{{"case", c.label.number}, {"w", hecke::s3_name(c.w)}});
    }
    out["all_cases"] = std::move(all);
  }
  emit(out, opts);
  return kExitOk;
}

int run_standard(const std::string& field_arg, const std::string& char_arg,
                 std::optional<int> e_override, const OutputOptions& opts) {
  hecke::Field f = parse_field(field_arg);
  hecke::Character chi = parse_character(f, char_arg, e_override);
  auto [w, ordinary] = hecke::ordinarize(chi);
  hecke::Rep rep = hecke::build_reduced_standard(ordinary);
  hecke::Classification cls = hecke::classify(chi);
  hecke::CentralParams cp = hecke::central_params(ordinary);

  json out{{"ordinarized_by", hecke::s3_name(w)},
           {"character", hecke::character_to_json(ordinary)},
           {"t", hecke::matrix_to_json(rep.t())},
           {"s1", hecke::matrix_to_json(rep.s1())},
           {"central_params", hecke::central_params_to_json(cp)},
           {"classification", hecke::classification_to_json(cls)}};
  emit(out, opts);
  return kExitOk;
}

int run_zoo(const std::string& field_arg, const std::string& label_arg,
            const OutputOptions& opts) {
  hecke::Field f = parse_field(field_arg);
  hecke::SimpleLabel label =
      hecke::label_from_json(f, parse_json_arg(label_arg, "--label"));
  hecke::Rep rep = hecke::make_module(label);  // validates the relations
  hecke::CentralScalars cs = hecke::central_scalars(rep);
  hecke::ZooStructure zs = hecke::expected_structure(label);

  json expected{{"irreducible", zs.irreducible},
                {"structure", hecke::structure_name(zs.structure)}};
  json factors = json::array();
  for (const auto& l : zs.factors) factors.push_back(hecke::label_to_json(l));
  expected["factors"] = std::move(factors);
  if (zs.submodule) expected["submodule"] = hecke::label_to_json(*zs.submodule);
  if (zs.quotient) expected["quotient"] = hecke::label_to_json(*zs.quotient);

  json out{{"label", hecke::label_to_json(label)},
           {"rep", hecke::rep_to_json(rep)},
           {"relations", "ok"},
           {"central_scalars",
            json{{"z", hecke::elem_to_json(cs.z)},
                 {"c1", hecke::elem_to_json(cs.c1)},
                 {"c2", hecke::elem_to_json(cs.c2)}}},
           {"expected", std::move(expected)}};
  emit(out, opts);
  return kExitOk;
}

int run_decompose(const std::string& field_arg, const std::string& char_arg,
                  const std::string& label_arg, const std::string& rep_arg,
                  std::optional<int> e_override, long bound,
                  const OutputOptions& opts) {
  check_bound(bound);
  std::optional<hecke::Rep> rep;
  std::optional<hecke::Prediction> pred;

  if (!rep_arg.empty()) {
    rep = hecke::rep_from_json(parse_json_arg(rep_arg, "--rep"));
  } else if (!label_arg.empty()) {
    hecke::Field f = parse_field(field_arg);
    rep = hecke::make_module(
        hecke::label_from_json(f, parse_json_arg(label_arg, "--label")));
  } else if (!char_arg.empty()) {
    hecke::Field f = parse_field(field_arg);
    hecke::Character chi = parse_character(f, char_arg, e_override);
    hecke::Classification cls = hecke::classify(chi);
    pred = hecke::predicted_factors(cls.label,
                                    hecke::central_params(cls.representative));
    rep = hecke::build_reduced_standard(cls.representative);
  } else {
    throw hecke::Error("decompose needs one of --char, --label, --rep");
  }
  if (rep->field().size() > bound)
    throw hecke::TooLargeError("field size " +
                               std::to_string(rep->field().size()) +
                               " exceeds --bound " + std::to_string(bound));

  hecke::DecompReport report = hecke::composition_series(*rep);
  json out{{"report", hecke::report_to_json(report)}};
  bool ok = true;
  if (pred) {
    bool factors_match = hecke::sorted_labels(report.series) ==
                         hecke::sorted_labels(pred->factors);
    bool structure_match = report.structure == pred->structure;
    bool sub_match = !pred->submodule ||
                     (report.series.front() == *pred->submodule &&
                      report.series.back() == *pred->quotient);
    ok = factors_match && structure_match && sub_match;
    out["prediction"] = hecke::prediction_to_json(*pred);
    out["agreement"] = ok;
  }
  emit(out, opts);
  return ok ? kExitOk : kExitFalsified;
}

int run_sweep(const std::string& scope, const std::string& field_arg,
              int e_max, int count, uint64_t seed, long bound,
              const OutputOptions& opts) {
  check_bound(bound);
  hecke::Field f = parse_field(field_arg);
  if (f.size() > bound)
    throw hecke::TooLargeError("field size " + std::to_string(f.size()) +
                               " exceeds --bound " + std::to_string(bound));
  hecke::SweepResult r;
  if (scope == "irreducibility") {
    r = hecke::sweep_irreducibility(f);
  } else if (scope == "classification") {
    r = hecke::sweep_classification(f, e_max);
  } else if (scope == "s3-invariance") {
    r = hecke::sweep_s3_invariance(f, count, seed);
  } else if (scope == "central-characters") {
    r = hecke::sweep_central_characters(f, e_max);
  } else if (scope == "non-isomorphism") {
    r = hecke::sweep_non_isomorphism(f);
  } else {
    throw hecke::Error("unknown sweep scope: " + scope);
  }
  json out = sweep_result_json(r);
  out["scope"] = scope;
  emit(out, opts);
  return r.ok() ? kExitOk : kExitFalsified;
}

int run_selftest(uint64_t seed, const OutputOptions& opts) {
  hecke::char0::OracleReport oracle =
      hecke::char0::run_central_word_oracle(20, seed);

  json out{{"central_word_oracle",
            json{{"samples", oracle.samples},
                 {"checks", oracle.checks},
                 {"failures", oracle.failures}}}};

  hecke::SweepResult relations;
  for (const auto& [p, k, mod] :
       {std::tuple<long, int, std::vector<long>>{2, 1, {0, 1}},
        {3, 1, {0, 1}},
        {5, 1, {0, 1}}}) {
    relations.merge(hecke::sweep_zoo_relations(hecke::Field(p, k, mod)));
  }
  relations.merge(hecke::sweep_zoo_relations_random(
      hecke::Field(3, 2, {1, 0, 1}), 200, seed));
  out["relation_suite"] = sweep_result_json(relations);

  bool ok = oracle.ok() && relations.ok();
  out["ok"] = ok;
  emit(out, opts);
  return ok ? kExitOk : kExitFalsified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact-arithmetic tools for mod-p representations of the rank-two "
      "affine Hecke algebra: classification of integral characters, reduced "
      "standard modules, and brute-force decomposition over small finite "
      "fields."};
  app.require_subcommand(1);

  std::string field_arg, char_arg, label_arg, rep_arg, scope, out_path;
  std::optional<int> e_override;
  bool all_cases = false, pretty = false;
  int e_max = 2, count = 500;
  uint64_t seed = 20240817;
  long bound = hecke::kMaxDecompFieldSize;

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "write JSON to a file instead of stdout");
    cmd->add_flag("--pretty", pretty, "indent the JSON output");
  };

  CLI::App* classify = app.add_subcommand(
      "classify", "classify an integral character into one of the nine cases");
  classify->add_option("--field", field_arg, "field descriptor JSON")->required();
  classify->add_option("--char", char_arg, "character JSON")->required();
  classify->add_option("--e", e_override, "valuation of q (overrides the JSON)");
  classify->add_flag("--all-cases", all_cases, "report every matching orbit member");
  add_output(classify);

  CLI::App* standard = app.add_subcommand(
      "standard", "matrices of the reduced standard module of a character");
  standard->add_option("--field", field_arg, "field descriptor JSON")->required();
  standard->add_option("--char", char_arg, "character JSON")->required();
  standard->add_option("--e", e_override, "valuation of q (overrides the JSON)");
  add_output(standard);

  CLI::App* zoo = app.add_subcommand(
      "zoo", "construct a named module, print matrices and self-checks");
  zoo->add_option("--field", field_arg, "field descriptor JSON")->required();
  zoo->add_option("--label", label_arg, "module label JSON")->required();
  add_output(zoo);

  CLI::App* decompose = app.add_subcommand(
      "decompose", "composition series and submodule lattice of a module");
  decompose->add_option("--field", field_arg, "field descriptor JSON");
  decompose->add_option("--char", char_arg, "decompose the reduced standard module");
  decompose->add_option("--label", label_arg, "decompose a zoo module");
  decompose->add_option("--rep", rep_arg, "decompose an inline rep JSON");
  decompose->add_option("--e", e_override, "valuation of q (overrides the JSON)");
  decompose->add_option("--bound", bound, "field-size bound (at most 9)");
  add_output(decompose);

  CLI::App* sweep = app.add_subcommand(
      "sweep", "exhaustive or randomized verification over a parameter space");
  sweep->add_option("--scope", scope,
                    "irreducibility | classification | s3-invariance | "
                    "central-characters | non-isomorphism")
      ->required();
  sweep->add_option("--field", field_arg, "field descriptor JSON")->required();
  sweep->add_option("--e-max", e_max, "largest valuation of q (default 2)");
  sweep->add_option("--count", count, "sample count for randomized scopes");
  sweep->add_option("--seed", seed, "seed for randomized scopes");
  sweep->add_option("--bound", bound, "field-size bound (at most 9)");
  add_output(sweep);

  CLI::App* selftest = app.add_subcommand(
      "selftest",
      "exact-rational validation of the central words plus the relation suite");
  selftest->add_option("--seed", seed, "seed for the random parameter sets");
  add_output(selftest);

  CLI11_PARSE(app, argc, argv);
  OutputOptions opts{out_path, pretty};

  try {
    if (app.got_subcommand(classify))
      return run_classify(field_arg, char_arg, e_override, all_cases, opts);
    if (app.got_subcommand(standard))
      return run_standard(field_arg, char_arg, e_override, opts);
    if (app.got_subcommand(zoo)) return run_zoo(field_arg, label_arg, opts);
    if (app.got_subcommand(decompose))
      return run_decompose(field_arg, char_arg, label_arg, rep_arg, e_override,
                           bound, opts);
    if (app.got_subcommand(sweep))
      return run_sweep(scope, field_arg, e_max, count, seed, bound, opts);
    if (app.got_subcommand(selftest)) return run_selftest(seed, opts);
  } catch (const hecke::TooLargeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const hecke::NoCaseMatchedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFalsified;
  } catch (const hecke::IdentifyFailedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFalsified;
  } catch (const hecke::AmbiguousMatchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFalsified;
  } catch (const hecke::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
