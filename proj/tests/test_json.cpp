#include <doctest.h>

#include "hecke/json_io.hpp"
#include "hecke/standard.hpp"
#include "hecke/zoo.hpp"

using namespace hecke;

TEST_CASE("field descriptors round-trip") {
  json j = json::parse(R"({"p":5,"k":2,"modulus":[2,0,1]})");
  Field f = field_from_json(j);
  CHECK(f.p() == 5);
  CHECK(f.degree() == 2);
  CHECK(field_to_json(f) == j);
}

TEST_CASE("malformed field descriptors are rejected") {
  CHECK_THROWS_AS(field_from_json(json::parse(R"({"p":5})")), Error);
  CHECK_THROWS_AS(field_from_json(json::parse(R"({"p":4,"k":1,"modulus":[0,1]})")),
                  NonPrimeError);
}

TEST_CASE("valued units and characters round-trip") {
  Field f5(5, 1, {0, 1});
  json j = json::parse(R"({"v":-1,"u":[3]})");
  VUnit v = vunit_from_json(f5, j);
  CHECK(v.val() == -1);
  CHECK(v.unit() == f5.from_int(3));
  CHECK(vunit_to_json(v) == j);

  json cj = json::parse(
      R"({"e":1,"y":[{"v":1,"u":[2]},{"v":0,"u":[2]},{"v":-1,"u":[2]}]})");
  Character chi = character_from_json(f5, cj);
  CHECK(chi.cfg.e == 1);
  CHECK(chi.y1().val() == 1);
  CHECK(character_to_json(chi) == cj);
}

TEST_CASE("representations round-trip through JSON") {
  Field f5(5, 1, {0, 1});
  PConfig cfg(f5, 1);
  Character chi(cfg, VUnit(1, f5.from_int(2)), VUnit(0, f5.from_int(2)),
                VUnit(-1, f5.from_int(2)));
  Rep rep = build_reduced_standard(chi);
  json j = rep_to_json(rep);
  Rep back = rep_from_json(j);
  CHECK(back.t() == rep.t());
  CHECK(back.s1() == rep.s1());
}

TEST_CASE("labels round-trip") {
  Field f5(5, 1, {0, 1});
  SimpleLabel label(Kind::K6, {f5.from_int(2), f5.from_int(3), f5.from_int(4)});
  json j = label_to_json(label);
  CHECK(j.at("kind") == "K6");
  CHECK(label_from_json(f5, j) == label);
  CHECK_THROWS_AS(label_from_json(f5, json::parse(R"({"kind":"Q9","params":[]})")),
                  Error);
}

TEST_CASE("reports serialize with structure and lattice summary") {
  Field f5(5, 1, {0, 1});
  FieldElem y = f5.from_int(2);
  DecompReport report =
      composition_series(make_module(SimpleLabel(Kind::M3, {y * y * y, y})));
  json j = report_to_json(report);
  CHECK(j.at("structure") == "Uniserial2");
  CHECK(j.at("series").size() == 2);
  CHECK(j.at("proper_submodules_by_dim").at("1") == 1);
}
