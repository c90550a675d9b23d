#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hecke::char0 {

using Rational = boost::multiprecision::cpp_rational;

/// Dense matrix over exact rationals; just enough linear algebra for the
/// characteristic-zero validation of the central-element words.
class RatMatrix {
 public:
  RatMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const {
    return e_[static_cast<size_t>(i) * cols_ + j];
  }

  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix plus_scalar_identity(const Rational& c) const;
  RatMatrix scaled(const Rational& c) const;
  std::optional<RatMatrix> inverse() const;

  bool operator==(const RatMatrix& o) const { return e_ == o.e_; }
  bool is_zero() const;
  std::optional<Rational> as_scalar() const;

 private:
  int rows_, cols_;
  std::vector<Rational> e_;
};

/// The 6-dimensional standard module over the rationals for generic nonzero
/// parameters (q, y1, y2, y3), on the rescaled-lattice basis. Entry layout
/// matches the residue-field construction exactly, with generic q in place
/// of 0.
struct StandardModuleQ {
  Rational q, y1, y2, y3;
  RatMatrix t, t_inv, s1, s2;
};

StandardModuleQ build_standard_q(const Rational& q, const Rational& y1,
                                 const Rational& y2, const Rational& y3);

struct OracleReport {
  int samples = 0;
  int checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Validates, over `samples` random nonzero rational parameter sets:
///   - the defining relations of the algebra at generic q,
///   - the basis-convention identities tying the two 3-blocks together,
///   - that the central words evaluate to q-scaled elementary symmetric
///     functions of (y1, y2, y3) times the identity.
/// This is the gate for the q = 0 words used over the residue fields.
OracleReport run_central_word_oracle(int samples, uint64_t seed);

}  // namespace hecke::char0
