#include <doctest.h>

#include <random>
#include <set>

#include "hecke/field.hpp"

using namespace hecke;

TEST_CASE("field construction accepts valid descriptors") {
  Field f5(5, 1, {0, 1});
  CHECK(f5.p() == 5);
  CHECK(f5.size() == 5);

  Field f9(3, 2, {1, 0, 1});  // x^2 + 1, irreducible over F_3
  CHECK(f9.size() == 9);
  CHECK(f9.degree() == 2);
}

TEST_CASE("field construction rejects bad descriptors") {
  CHECK_THROWS_AS(Field(4, 1, {0, 1}), NonPrimeError);
  CHECK_THROWS_AS(Field(1, 1, {0, 1}), NonPrimeError);
  // x^2 + 2 = (x+1)(x+2) over F_3
  CHECK_THROWS_AS(Field(3, 2, {2, 0, 1}), ReducibleModulusError);
  CHECK_THROWS_AS(Field(3, 2, {1, 0}), DegreeMismatchError);
  CHECK_THROWS_AS(Field(3, 2, {1, 0, 2}), DegreeMismatchError);  // not monic
}

TEST_CASE("prime field arithmetic") {
  Field f5(5, 1, {0, 1});
  CHECK(f5.from_int(2) * f5.from_int(4) == f5.from_int(3));
  CHECK(f5.from_int(2) + f5.from_int(4) == f5.from_int(1));
  CHECK(-f5.from_int(2) == f5.from_int(3));
  CHECK(f5.from_int(3).inv() == f5.from_int(2));
  CHECK_THROWS_AS(f5.zero().inv(), DivisionByZeroError);
}

TEST_CASE("extension arithmetic: x * x = -1 in F_9 = F_3[x]/(x^2+1)") {
  Field f9(3, 2, {1, 0, 1});
  FieldElem x = f9.from_coeffs({0, 1});
  CHECK((x * x).coeffs() == std::vector<long>{2, 0});
  CHECK(x * x == f9.from_int(2));
  CHECK((x.inv() * x) == f9.one());
}

TEST_CASE("elements of different fields do not mix") {
  Field f5(5, 1, {0, 1});
  Field f7(7, 1, {0, 1});
  CHECK_THROWS_AS(f5.one() + f7.one(), FieldMismatchError);
  CHECK_THROWS_AS(f5.one() * f7.one(), FieldMismatchError);
}

TEST_CASE("equal descriptors give interoperable fields") {
  Field a(5, 1, {0, 1});
  Field b(5, 1, {0, 1});
  CHECK(a.same_as(b));
  CHECK(a.from_int(2) + b.from_int(2) == a.from_int(4));
}

TEST_CASE("enumeration: zero first, lexicographic, p^k distinct elements") {
  Field f2(2, 1, {0, 1});
  auto e2 = f2.enumerate();
  REQUIRE(e2.size() == 2);
  CHECK(e2[0].is_zero());
  CHECK(e2[1] == f2.one());

  Field f5(5, 1, {0, 1});
  auto e5 = f5.enumerate();
  REQUIRE(e5.size() == 5);
  for (long i = 0; i < 5; ++i) CHECK(e5[i] == f5.from_int(i));

  Field f9(3, 2, {1, 0, 1});
  auto e9 = f9.enumerate();
  REQUIRE(e9.size() == 9);
  CHECK(e9[0].is_zero());
  std::set<uint16_t> distinct;
  for (const auto& e : e9) distinct.insert(e.index());
  CHECK(distinct.size() == 9);
  // lexicographic on the coordinate lists
  for (size_t i = 1; i < e9.size(); ++i)
    CHECK(e9[i - 1].coeffs() < e9[i].coeffs());
}

TEST_CASE("built-in field table covers p in {2,3,5,7}, k in {1,2,3}") {
  for (long q : {2, 4, 8, 3, 9, 27, 5, 25, 125, 7, 49, 343}) {
    Field f = builtin_field(q);
    CHECK(f.size() == q);
  }
  CHECK(builtin_field(9).same_as(Field(3, 2, {1, 0, 1})));
  CHECK_THROWS_AS(builtin_field(11), Error);
  CHECK_THROWS_AS(builtin_field(6), Error);
}

TEST_CASE("powers, including negative exponents") {
  Field f5(5, 1, {0, 1});
  CHECK(f5.from_int(2).pow(3) == f5.from_int(3));
  CHECK(f5.from_int(2).pow(0) == f5.one());
  CHECK(f5.from_int(2).pow(-1) == f5.from_int(3));
  CHECK(f5.from_int(2).pow(-2) == f5.from_int(4));
}

namespace {

std::vector<Field> property_fields() {
  std::vector<Field> out;
  out.emplace_back(2, 1, std::vector<long>{0, 1});
  out.emplace_back(2, 2, std::vector<long>{1, 1, 1});
  out.emplace_back(2, 3, std::vector<long>{1, 1, 0, 1});
  out.emplace_back(3, 1, std::vector<long>{0, 1});
  out.emplace_back(3, 2, std::vector<long>{1, 0, 1});
  out.emplace_back(3, 3, std::vector<long>{1, 2, 0, 1});
  out.emplace_back(3, 4, std::vector<long>{2, 1, 0, 0, 1});  // F_81
  out.emplace_back(5, 1, std::vector<long>{0, 1});
  out.emplace_back(5, 2, std::vector<long>{2, 0, 1});
  out.emplace_back(7, 1, std::vector<long>{0, 1});
  out.emplace_back(7, 2, std::vector<long>{1, 0, 1});
  return out;
}

}  // namespace

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(20240817);
  for (const Field& f : property_fields()) {
    CAPTURE(f.to_string());
    auto elems = f.enumerate();
    auto pick = [&] { return elems[rng() % elems.size()]; };
    for (int i = 0; i < 1000; ++i) {
      FieldElem a = pick(), b = pick(), c = pick();
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      if (!a.is_zero()) CHECK(a * a.inv() == f.one());
    }
  }
}

TEST_CASE("multiplicative group has order p^k - 1 (fields up to 81)") {
  for (const Field& f : property_fields()) {
    if (f.size() > 81) continue;
    CAPTURE(f.to_string());
    for (const FieldElem& a : f.units()) CHECK(a.pow(f.size() - 1) == f.one());
  }
}
