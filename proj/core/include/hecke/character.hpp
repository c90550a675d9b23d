#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hecke/labels.hpp"
#include "hecke/valnum.hpp"

namespace hecke {

/// The six permutations of the coordinate triple, in the fixed enumeration
/// order 1, s1, s2, s1s2, s2s1, s1s2s1. s1 swaps the first two coordinates,
/// s2 the last two; a product acts right-to-left, so s1s2 applies s2 first.
enum class S3 : int { One = 0, S1 = 1, S2 = 2, S1S2 = 3, S2S1 = 4, S1S2S1 = 5 };

constexpr std::array<S3, 6> kS3All = {S3::One,  S3::S1,   S3::S2,
                                      S3::S1S2, S3::S2S1, S3::S1S2S1};

int s3_length(S3 w);
S3 s3_compose(S3 u, S3 v);  // u after v
const std::array<int, 3>& s3_perm(S3 w);
const char* s3_name(S3 w);

/// A character of the commutative subalgebra, given by the valued-unit
/// triple of its values on the three Bernstein generators.
struct Character {
  PConfig cfg;
  std::array<VUnit, 3> y;

  Character(PConfig c, VUnit y1, VUnit y2, VUnit y3)
      : cfg(std::move(c)), y{std::move(y1), std::move(y2), std::move(y3)} {}

  const VUnit& y1() const { return y[0]; }
  const VUnit& y2() const { return y[1]; }
  const VUnit& y3() const { return y[2]; }

  bool operator==(const Character& o) const {
    return cfg.same_as(o.cfg) && y[0] == o.y[0] && y[1] == o.y[1] &&
           y[2] == o.y[2];
  }
  std::string to_string() const;
};

/// Integrality: the valuations satisfy v1+v2+v3 = 0, |v_i| <= e and
/// |v_i + v_j| <= e for i != j.
bool is_integral(const Character& chi);

/// Coordinate permutation action; satisfies s3_act(u, s3_act(v, chi)) ==
/// s3_act(s3_compose(u, v), chi).
Character s3_act(S3 w, const Character& chi);

/// val(y1) >= 0 and val(y3) <= 0.
bool is_ordinary(const Character& chi);

/// The minimal-length w (ties broken by enumeration order) with w.chi
/// ordinary, together with w.chi. Requires is_integral.
std::pair<S3, Character> ordinarize(const Character& chi);

/// Lattice rescaling factor for T_w. Requires chi ordinary and integral.
/// For the rows that branch on y2, valuations > 0 select the "y2 integral"
/// row and valuations <= 0 the "y2 inverse-integral" row.
VUnit q_factor(S3 w, const Character& chi);

/// One of the nine classification cases and its coarse structure.
struct CaseLabel {
  int number;  // 1..9
  Structure structure() const;
  std::string to_string() const;
};

/// Scalars of the three central generators on the reduced module.
struct CentralParams {
  FieldElem z, y, yp;
  bool operator==(const CentralParams& o) const {
    return z == o.z && y == o.y && yp == o.yp;
  }
  std::string to_string() const;
};

struct Classification {
  CaseLabel label;
  Character representative;  // the ordinary orbit member that matched
  S3 w;                      // representative == s3_act(w, input)
};

/// Scans the orbit in enumeration order and returns the first ordinary
/// member matching one of the nine cases. Requires is_integral; throws
/// NoCaseMatchedError when nothing matches (a falsification signal).
Classification classify(const Character& chi);

/// Every (case, w) pair that matches across the orbit, in scan order.
std::vector<Classification> classify_all(const Character& chi);

/// z = r(y1 y2 y3), y = r(q y3), y' = r(q y2 y3). Requires is_integral.
CentralParams central_params(const Character& chi);

/// Predicted composition factors of the reduced module for a classified
/// case, with the stated structure; for uniserial cases `submodule` and
/// `quotient` name the unique constituents.
struct Prediction {
  std::vector<SimpleLabel> factors;
  Structure structure;
  std::optional<SimpleLabel> submodule;
  std::optional<SimpleLabel> quotient;
};

/// Throws InconsistentParamsError when `cp` contradicts the case's stratum
/// (e.g. case 9 requires y^2 = y' and y'^2 = z y).
Prediction predicted_factors(const CaseLabel& label, const CentralParams& cp);

}  // namespace hecke
