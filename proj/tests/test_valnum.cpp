#include <doctest.h>

#include "hecke/valnum.hpp"

using namespace hecke;

TEST_CASE("valued-unit multiplication is componentwise") {
  Field f5(5, 1, {0, 1});
  VUnit a(0, f5.from_int(3));
  VUnit b(2, f5.from_int(2));
  VUnit p = a * b;
  CHECK(p.val() == 2);
  CHECK(p.unit() == f5.one());  // 3*2 = 6 = 1
}

TEST_CASE("inverse and powers") {
  Field f5(5, 1, {0, 1});
  VUnit x(-1, f5.from_int(4));
  CHECK(x.inv().val() == 1);
  CHECK(x.inv().unit() == f5.from_int(4));  // inv(4) = 4 in F_5

  VUnit y(1, f5.from_int(2));
  VUnit y3 = y.pow(3);
  CHECK(y3.val() == 3);
  CHECK(y3.unit() == f5.from_int(3));  // 2^3 = 8 = 3

  CHECK(y.pow(0).val() == 0);
  CHECK(y.pow(0).unit() == f5.one());
  CHECK(y.pow(-2).val() == -2);
}

TEST_CASE("reduction mod p") {
  Field f5(5, 1, {0, 1});
  CHECK(VUnit(1, f5.from_int(3)).reduce().is_zero());
  CHECK(VUnit(0, f5.from_int(3)).reduce() == f5.from_int(3));
  CHECK_THROWS_AS(VUnit(-1, f5.from_int(3)).reduce(), NotIntegralError);
}

TEST_CASE("congruence compares valuation and unit residue") {
  Field f5(5, 1, {0, 1});
  CHECK(VUnit(0, f5.from_int(2)).congruent(VUnit(0, f5.from_int(2))));
  CHECK_FALSE(VUnit(0, f5.from_int(2)).congruent(VUnit(0, f5.from_int(3))));
  CHECK_FALSE(VUnit(1, f5.from_int(2)).congruent(VUnit(0, f5.from_int(2))));
}

TEST_CASE("zero unit part is rejected") {
  Field f5(5, 1, {0, 1});
  CHECK_THROWS_AS(VUnit(0, f5.zero()), Error);
}

TEST_CASE("q reduces to zero in residue characteristic") {
  Field f5(5, 1, {0, 1});
  for (int e = 1; e <= 3; ++e) {
    PConfig cfg(f5, e);
    VUnit q = q_of(cfg);
    CHECK(q.val() == e);
    CHECK(q.unit() == f5.one());
    CHECK(q.reduce().is_zero());
  }
  CHECK_THROWS_AS(PConfig(f5, 0), Error);
}

TEST_CASE("exhaustive group laws over F_5 with valuations in [-3,3]") {
  Field f5(5, 1, {0, 1});
  std::vector<VUnit> all;
  for (int v = -3; v <= 3; ++v)
    for (const auto& u : f5.units()) all.emplace_back(v, u);

  for (const VUnit& x : all) {
    CHECK((x * x.inv()).val() == 0);
    CHECK((x * x.inv()).unit() == f5.one());
    CHECK((x.inv() * x).congruent(x * x.inv()));
    for (const VUnit& y : all) {
      CHECK((x * y).congruent(y * x));
      for (const VUnit& z : all) {
        CHECK(((x * y) * z).congruent(x * (y * z)));
      }
    }
  }
}

TEST_CASE("reduction is multiplicative on integral values") {
  Field f5(5, 1, {0, 1});
  std::vector<VUnit> integral;
  for (int v = 0; v <= 3; ++v)
    for (const auto& u : f5.units()) integral.emplace_back(v, u);
  for (const VUnit& x : integral)
    for (const VUnit& y : integral)
      CHECK((x * y).reduce() == x.reduce() * y.reduce());
}
