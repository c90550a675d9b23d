#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hecke/errors.hpp"

namespace hecke {

class FieldElem;

namespace detail {

// Immutable backing data of a finite field F_{p^k}. Elements are identified
// by their rank in lexicographic coordinate order (coefficients of the power
// basis, low degree first), so index 0 is always the zero element.
struct FieldData {
  long p = 0;
  int k = 0;
  long q = 0;  // p^k
  uint16_t one_idx = 0;  // index of the multiplicative identity
  std::vector<long> modulus;  // k+1 coefficients, low degree first, monic

  std::vector<uint16_t> coeff_of;   // q*k, unpacked coordinates per index
  std::vector<uint16_t> mul_table;  // q*q when q <= kMulTableCap, else empty
  std::vector<uint16_t> add_table;  // q*q when q <= kMulTableCap, else empty
  std::vector<uint16_t> neg_table;  // q
  std::vector<uint16_t> inv_table;  // q, entry 0 unused
  std::vector<uint16_t> xpow;       // (k-1)*k rows: x^(k+i) mod modulus

  static constexpr long kMulTableCap = 256;
  static constexpr long kSizeCap = 1 << 16;

  uint16_t mul(uint16_t a, uint16_t b) const;
  uint16_t add(uint16_t a, uint16_t b) const;
  uint16_t neg(uint16_t a) const { return neg_table[a]; }
  uint16_t inv(uint16_t a) const;
  uint16_t sub(uint16_t a, uint16_t b) const { return add(a, neg(b)); }
  uint16_t pow(uint16_t a, long n) const;

  uint16_t mul_slow(uint16_t a, uint16_t b) const;
  uint16_t add_slow(uint16_t a, uint16_t b) const;

  uint16_t pack(const std::vector<long>& coeffs) const;
};

}  // namespace detail

/// Descriptor of a finite field F_{p^k}, validated at construction:
/// p must be prime and the modulus a monic irreducible polynomial of
/// degree k over F_p (irreducibility is checked by trial division
/// against all monic polynomials of degree <= k/2).
class Field {
 public:
  /// `modulus` lists coefficients low degree first; for k == 1 any monic
  /// [c, 1] works and arithmetic is plain mod-p.
  Field(long p, int k, std::vector<long> modulus);

  long p() const { return data_->p; }
  int degree() const { return data_->k; }
  long size() const { return data_->q; }
  const std::vector<long>& modulus() const { return data_->modulus; }

  FieldElem zero() const;
  FieldElem one() const;
  /// Element with the given power-basis coordinates (low degree first,
  /// values reduced mod p).
  FieldElem from_coeffs(const std::vector<long>& coeffs) const;
  /// Image of an integer under Z -> F_p -> F_{p^k}.
  FieldElem from_int(long n) const;
  /// Element by enumeration index (0 = zero, lexicographic coordinate order).
  FieldElem elem(long index) const;

  /// All p^k elements, zero first, in lexicographic coordinate order.
  std::vector<FieldElem> enumerate() const;
  /// The p^k - 1 nonzero elements, in enumeration order.
  std::vector<FieldElem> units() const;

  bool same_as(const Field& other) const;

  const detail::FieldData& data() const { return *data_; }
  const detail::FieldData* raw() const { return data_.get(); }

  std::string to_string() const;

 private:
  std::shared_ptr<const detail::FieldData> data_;
};

/// Built-in field table for p in {2,3,5,7} and k in {1,2,3}, so common
/// fields can be requested by size alone. Unknown sizes raise an Error.
Field builtin_field(long size);

/// An element of a fixed F_{p^k}; a value type carrying its field.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(Field field, uint16_t index) : field_(std::move(field)), idx_(index) {}

  const Field& field() const { return field_; }
  uint16_t index() const { return idx_; }
  bool is_zero() const { return idx_ == 0; }

  /// Power-basis coordinates, low degree first (k entries in [0, p)).
  std::vector<long> coeffs() const;

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator-() const;
  /// Multiplicative inverse; DivisionByZeroError on zero.
  FieldElem inv() const;
  /// Integer power, negative exponents via inv.
  FieldElem pow(long n) const;

  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void check_same(const FieldElem& o) const;
  Field field_;
  uint16_t idx_ = 0;
};

}  // namespace hecke
