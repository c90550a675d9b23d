#pragma once

#include <string>

#include "hecke/field.hpp"

namespace hecke {

/// Ambient parameters for valued-unit arithmetic: the residue field and the
/// valuation e of q (in uniformizer units). By convention q itself is the
/// valued unit (v = e, u = 1).
struct PConfig {
  Field field;
  int e;

  PConfig(Field f, int e_) : field(std::move(f)), e(e_) {
    if (e < 1) throw Error("valuation of q must be >= 1");
  }
  bool same_as(const PConfig& o) const {
    return e == o.e && field.same_as(o.field);
  }
};

/// Leading-term model of a nonzero p-adic number: integer valuation plus the
/// residue of the unit part. Closed under multiplication, inverse and integer
/// powers; zero is not representable.
class VUnit {
 public:
  VUnit(int v, FieldElem u) : v_(v), u_(std::move(u)) {
    if (u_.is_zero()) throw Error("unit part of a valued unit must be nonzero");
  }

  int val() const { return v_; }
  const FieldElem& unit() const { return u_; }

  VUnit operator*(const VUnit& o) const { return VUnit(v_ + o.v_, u_ * o.u_); }
  VUnit inv() const { return VUnit(-v_, u_.inv()); }
  VUnit pow(long n) const { return VUnit(static_cast<int>(v_ * n), u_.pow(n)); }

  /// Reduction mod p: 0 for positive valuation, the unit residue for
  /// valuation 0; NotIntegralError for negative valuation.
  FieldElem reduce() const {
    if (v_ < 0) throw NotIntegralError("cannot reduce: valuation " +
                                       std::to_string(v_) + " < 0");
    if (v_ > 0) return u_.field().zero();
    return u_;
  }

  /// Congruence: equal valuation and equal unit residue.
  bool congruent(const VUnit& o) const { return v_ == o.v_ && u_ == o.u_; }
  bool operator==(const VUnit& o) const { return congruent(o); }

  std::string to_string() const {
    return "(v=" + std::to_string(v_) + ", u=" + u_.to_string() + ")";
  }

 private:
  int v_;
  FieldElem u_;
};

/// The element q of the configuration: valuation e, unit residue 1.
VUnit q_of(const PConfig& cfg);

/// One in the valued-unit model: valuation 0, unit residue 1.
VUnit vu_one(const Field& f);

}  // namespace hecke
