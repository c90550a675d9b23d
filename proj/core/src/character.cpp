#include "hecke/character.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace hecke {

namespace {

// position i of the input lands at perm[i]
constexpr std::array<std::array<int, 3>, 6> kPerms = {{
    {0, 1, 2},  // 1
    {1, 0, 2},  // s1
    {0, 2, 1},  // s2
    {1, 2, 0},  // s1s2 = s1 after s2
    {2, 0, 1},  // s2s1 = s2 after s1
    {2, 1, 0},  // s1s2s1
}};

constexpr std::array<int, 6> kLengths = {0, 1, 1, 2, 2, 3};

constexpr std::array<const char*, 6> kNames = {"1",    "s1",   "s2",
                                               "s1s2", "s2s1", "s1s2s1"};

}  // namespace

int s3_length(S3 w) { return kLengths[static_cast<int>(w)]; }

const std::array<int, 3>& s3_perm(S3 w) { return kPerms[static_cast<int>(w)]; }

const char* s3_name(S3 w) { return kNames[static_cast<int>(w)]; }

S3 s3_compose(S3 u, S3 v) {
  const auto& pu = s3_perm(u);
  const auto& pv = s3_perm(v);
  std::array<int, 3> comp{};
  for (int i = 0; i < 3; ++i) comp[i] = pu[pv[i]];
  for (int w = 0; w < 6; ++w) {
    if (kPerms[w] == comp) return static_cast<S3>(w);
  }
  throw Error("unreachable: S3 composition table is closed");
}

std::string Character::to_string() const {
  std::ostringstream os;
  os << "(" << y[0].to_string() << ", " << y[1].to_string() << ", "
     << y[2].to_string() << "; e=" << cfg.e << ")";
  return os.str();
}

bool is_integral(const Character& chi) {
  int e = chi.cfg.e;
  int v1 = chi.y1().val(), v2 = chi.y2().val(), v3 = chi.y3().val();
  if (v1 + v2 + v3 != 0) return false;
  if (std::abs(v1) > e || std::abs(v2) > e || std::abs(v3) > e) return false;
  if (std::abs(v1 + v2) > e || std::abs(v1 + v3) > e || std::abs(v2 + v3) > e)
    return false;
  return true;
}

Character s3_act(S3 w, const Character& chi) {
  const auto& perm = s3_perm(w);
  std::array<const VUnit*, 3> out{};
  for (int i = 0; i < 3; ++i) out[perm[i]] = &chi.y[i];
  return Character(chi.cfg, *out[0], *out[1], *out[2]);
}

bool is_ordinary(const Character& chi) {
  return chi.y1().val() >= 0 && chi.y3().val() <= 0;
}

std::pair<S3, Character> ordinarize(const Character& chi) {
  if (!is_integral(chi)) throw NotIntegralError("character is not integral");
  for (S3 w : kS3All) {
    Character c = s3_act(w, chi);
    if (is_ordinary(c)) return {w, c};
  }
  throw Error("unreachable: every integral character has an ordinary translate");
}

VUnit q_factor(S3 w, const Character& chi) {
  if (!is_integral(chi) || !is_ordinary(chi))
    throw NotOrdinaryError("q-factors are defined for ordinary integral characters");
  const VUnit& y1 = chi.y1();
  const VUnit& y2 = chi.y2();
  VUnit qinv = q_of(chi.cfg).inv();
  bool y2_integral = y2.val() > 0;
  switch (w) {
    case S3::One:
      return vu_one(chi.cfg.field);
    case S3::S1:
      return y2_integral ? y2.inv() : vu_one(chi.cfg.field);
    case S3::S2:
      return y2_integral ? vu_one(chi.cfg.field) : y2;
    case S3::S1S2:
      return qinv * y1 * y2;
    case S3::S2S1:
      return qinv * y1;
    case S3::S1S2S1:
      return y2_integral ? qinv * y1 : qinv * y1 * y2;
  }
  throw Error("unreachable");
}

Structure CaseLabel::structure() const {
  if (number >= 1 && number <= 3) return Structure::Irreducible;
  if (number >= 4 && number <= 6) return Structure::Uniserial2;
  if (number == 7 || number == 8) return Structure::DirectSum2;
  if (number == 9) return Structure::Length4;
  return Structure::Other;
}

std::string CaseLabel::to_string() const {
  return "case " + std::to_string(number);
}

std::string CentralParams::to_string() const {
  return "(z=" + z.to_string() + ", y=" + y.to_string() +
         ", y'=" + yp.to_string() + ")";
}

namespace {

// Tests an ordinary integral character against one case pattern.
bool matches_case(int number, const Character& chi) {
  int e = chi.cfg.e;
  int v1 = chi.y1().val(), v2 = chi.y2().val(), v3 = chi.y3().val();
  VUnit q = q_of(chi.cfg);
  auto is_eov = [&] { return v1 == e && v2 == 0 && v3 == -e; };
  auto c_qy3_y2 = [&] { return (q * chi.y3()).congruent(chi.y2()); };
  auto c_qy2_y1 = [&] { return (q * chi.y2()).congruent(chi.y1()); };
  switch (number) {
    case 1:
      return 0 < v2 && v2 < e && v3 == -e;
    case 2:
      return -e < v2 && v2 < 0 && v1 == e;
    case 3:
      return is_eov() && !c_qy3_y2() && !c_qy2_y1();
    case 4:
      return is_eov() && !c_qy3_y2() && c_qy2_y1();
    case 5:
      return is_eov() && c_qy3_y2() && !c_qy2_y1();
    case 6:
      return v1 == 0 && v2 == 0 && v3 == 0;
    case 7:
      return 0 < v2 && v2 <= -v3 && -v3 < e;
    case 8:
      return -e < -v1 && -v1 <= v2 && v2 < 0;
    case 9:
      return is_eov() && c_qy3_y2() && c_qy2_y1();
  }
  return false;
}

}  // namespace

Classification classify(const Character& chi) {
  if (!is_integral(chi)) throw NotIntegralError("character is not integral");
  for (S3 w : kS3All) {
    Character c = s3_act(w, chi);
    if (!is_ordinary(c)) continue;
    for (int number = 1; number <= 9; ++number) {
      if (matches_case(number, c)) return {CaseLabel{number}, c, w};
    }
  }
  throw NoCaseMatchedError();
}

std::vector<Classification> classify_all(const Character& chi) {
  if (!is_integral(chi)) throw NotIntegralError("character is not integral");
  std::vector<Classification> out;
  for (S3 w : kS3All) {
    Character c = s3_act(w, chi);
    if (!is_ordinary(c)) continue;
    for (int number = 1; number <= 9; ++number) {
      if (matches_case(number, c)) out.push_back({CaseLabel{number}, c, w});
    }
  }
  return out;
}

CentralParams central_params(const Character& chi) {
  if (!is_integral(chi)) throw NotIntegralError("character is not integral");
  VUnit q = q_of(chi.cfg);
  FieldElem z = (chi.y1() * chi.y2() * chi.y3()).reduce();
  FieldElem y = (q * chi.y3()).reduce();
  FieldElem yp = (q * chi.y2() * chi.y3()).reduce();
  return CentralParams{z, y, yp};
}

Prediction predicted_factors(const CaseLabel& label, const CentralParams& cp) {
  const FieldElem& z = cp.z;
  const FieldElem& y = cp.y;
  const FieldElem& yp = cp.yp;
  auto bad = [&](const std::string& why) {
    throw InconsistentParamsError("case " + std::to_string(label.number) +
                                  ": " + why + " for " + cp.to_string());
  };
  auto require = [&](bool ok, const std::string& why) {
    if (!ok) bad(why);
  };
  switch (label.number) {
    case 1:
      require(!y.is_zero() && yp.is_zero(), "expected y != 0, y' = 0");
      return {{SimpleLabel(Kind::L6, {z, y})}, Structure::Irreducible, {}, {}};
    case 2:
      require(y.is_zero() && !yp.is_zero(), "expected y = 0, y' != 0");
      return {{SimpleLabel(Kind::L6t, {z, yp})}, Structure::Irreducible, {}, {}};
    case 3:
      require(!y.is_zero() && !yp.is_zero(), "expected y, y' != 0");
      require(y * y != yp && yp * yp != z * y, "regular non-degenerate stratum");
      return {{SimpleLabel(Kind::K6, {z, y, yp})}, Structure::Irreducible, {}, {}};
    case 4: {
      require(!y.is_zero() && !yp.is_zero(), "expected y, y' != 0");
      require(yp * yp == z * y && y * y != yp, "expected y'^2 = z y, y^2 != y'");
      FieldElem s = yp * y.inv();
      SimpleLabel sub(Kind::M3, {z, s}), quot(Kind::M3t, {z, s});
      return {{sub, quot}, Structure::Uniserial2, sub, quot};
    }
    case 5: {
      require(!y.is_zero() && !yp.is_zero(), "expected y, y' != 0");
      require(y * y == yp && yp * yp != z * y, "expected y' = y^2, y'^2 != z y");
      FieldElem s = yp * y.inv();
      SimpleLabel sub(Kind::N3t, {z, s}), quot(Kind::N3, {z, s});
      return {{sub, quot}, Structure::Uniserial2, sub, quot};
    }
    case 6: {
      require(y.is_zero() && yp.is_zero(), "expected supersingular stratum");
      SimpleLabel sub(Kind::P3t, {z}), quot(Kind::P3, {z});
      return {{sub, quot}, Structure::Uniserial2, sub, quot};
    }
    case 7:
    case 8: {
      require(y.is_zero() && yp.is_zero(), "expected supersingular stratum");
      return {{SimpleLabel(Kind::P3t, {z}), SimpleLabel(Kind::P3, {z})},
              Structure::DirectSum2,
              {},
              {}};
    }
    case 9: {
      require(!y.is_zero() && !yp.is_zero(), "expected y, y' != 0");
      require(y * y == yp && yp * yp == z * y,
              "expected y^2 = y' and y'^2 = z y");
      return {{SimpleLabel(Kind::M1_0, {y}), SimpleLabel(Kind::M1_m1, {y}),
               SimpleLabel(Kind::M2, {y}), SimpleLabel(Kind::M2t, {y})},
              Structure::Length4,
              {},
              {}};
    }
    default:
      bad("unknown case number");
  }
  throw Error("unreachable");
}

}  // namespace hecke
