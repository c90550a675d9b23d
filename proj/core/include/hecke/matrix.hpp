#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hecke/field.hpp"

namespace hecke {

/// Dense matrix over a fixed F_{p^k}. Entries are stored as element indices;
/// matrices act on column vectors, so column j holds the image of the j-th
/// basis vector.
class Matrix {
 public:
  Matrix(Field f, int rows, int cols)
      : field_(std::move(f)), rows_(rows), cols_(cols),
        e_(static_cast<size_t>(rows) * cols, 0) {}

  static Matrix identity(const Field& f, int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  FieldElem at(int i, int j) const { return FieldElem(field_, idx(i, j)); }
  void set(int i, int j, const FieldElem& v);

  uint16_t idx(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }
  void set_idx(int i, int j, uint16_t v) { e_[static_cast<size_t>(i) * cols_ + j] = v; }
  const std::vector<uint16_t>& raw() const { return e_; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const FieldElem& c) const;
  /// this + c * I (square only).
  Matrix plus_scalar_identity(const FieldElem& c) const;

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_zero() const;
  /// The scalar c if this == c * I, otherwise nullopt.
  std::optional<FieldElem> as_scalar() const;

  FieldElem trace() const;

  /// Gauss-Jordan inverse; nullopt when singular.
  std::optional<Matrix> inverse() const;

  /// In-place reduced row echelon form. Returns the pivot columns. Zero rows
  /// are moved to the bottom; `drop_zero_rows` removes them.
  std::vector<int> rref();
  void drop_zero_rows();

  /// Row-space basis of the homogeneous solutions of (this) * x = 0,
  /// one solution per row, in a canonical order.
  Matrix kernel() const;

  int rank() const;

  /// Matrix-vector product on raw element indices.
  std::vector<uint16_t> apply(const std::vector<uint16_t>& v) const;

  /// Vertical concatenation (same column count).
  static Matrix vstack(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  Field field_;
  int rows_, cols_;
  std::vector<uint16_t> e_;
};

}  // namespace hecke
