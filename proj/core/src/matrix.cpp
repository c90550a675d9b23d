#include "hecke/matrix.hpp"

#include <sstream>

namespace hecke {

Matrix Matrix::identity(const Field& f, int n) {
  Matrix m(f, n, n);
  uint16_t one = f.data().one_idx;
  for (int i = 0; i < n; ++i) m.set_idx(i, i, one);
  return m;
}

void Matrix::set(int i, int j, const FieldElem& v) {
  if (!v.field().same_as(field_)) throw FieldMismatchError();
  set_idx(i, j, v.index());
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (!field_.same_as(o.field_)) throw FieldMismatchError();
  if (cols_ != o.rows_) throw Error("matrix dimensions do not match");
  const auto& d = field_.data();
  Matrix out(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int l = 0; l < cols_; ++l) {
      uint16_t a = idx(i, l);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        uint16_t b = o.idx(l, j);
        if (b == 0) continue;
        out.set_idx(i, j, d.add(out.idx(i, j), d.mul(a, b)));
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (!field_.same_as(o.field_)) throw FieldMismatchError();
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error("matrix dimensions do not match");
  const auto& d = field_.data();
  Matrix out(field_, rows_, cols_);
  for (size_t t = 0; t < e_.size(); ++t) out.e_[t] = d.add(e_[t], o.e_[t]);
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (!field_.same_as(o.field_)) throw FieldMismatchError();
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error("matrix dimensions do not match");
  const auto& d = field_.data();
  Matrix out(field_, rows_, cols_);
  for (size_t t = 0; t < e_.size(); ++t) out.e_[t] = d.sub(e_[t], o.e_[t]);
  return out;
}

Matrix Matrix::scaled(const FieldElem& c) const {
  if (!c.field().same_as(field_)) throw FieldMismatchError();
  const auto& d = field_.data();
  Matrix out(field_, rows_, cols_);
  for (size_t t = 0; t < e_.size(); ++t) out.e_[t] = d.mul(e_[t], c.index());
  return out;
}

Matrix Matrix::plus_scalar_identity(const FieldElem& c) const {
  if (rows_ != cols_) throw Error("square matrix required");
  const auto& d = field_.data();
  Matrix out = *this;
  for (int i = 0; i < rows_; ++i)
    out.set_idx(i, i, d.add(out.idx(i, i), c.index()));
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && field_.same_as(o.field_) &&
         e_ == o.e_;
}

bool Matrix::is_zero() const {
  for (uint16_t v : e_)
    if (v != 0) return false;
  return true;
}

std::optional<FieldElem> Matrix::as_scalar() const {
  if (rows_ != cols_ || rows_ == 0) return std::nullopt;
  uint16_t c = idx(0, 0);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (i == j ? idx(i, j) != c : idx(i, j) != 0) return std::nullopt;
    }
  }
  return FieldElem(field_, c);
}

FieldElem Matrix::trace() const {
  const auto& d = field_.data();
  uint16_t t = 0;
  for (int i = 0; i < rows_; ++i) t = d.add(t, idx(i, i));
  return FieldElem(field_, t);
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const auto& d = field_.data();
  int n = rows_;
  Matrix a = *this;
  Matrix inv = identity(field_, n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r) {
      if (a.idx(r, col) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return std::nullopt;
    if (piv != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(a.e_[static_cast<size_t>(piv) * n + j], a.e_[static_cast<size_t>(col) * n + j]);
        std::swap(inv.e_[static_cast<size_t>(piv) * n + j], inv.e_[static_cast<size_t>(col) * n + j]);
      }
    }
    uint16_t s = d.inv(a.idx(col, col));
    for (int j = 0; j < n; ++j) {
      a.set_idx(col, j, d.mul(a.idx(col, j), s));
      inv.set_idx(col, j, d.mul(inv.idx(col, j), s));
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      uint16_t f = a.idx(r, col);
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) {
        a.set_idx(r, j, d.sub(a.idx(r, j), d.mul(f, a.idx(col, j))));
        inv.set_idx(r, j, d.sub(inv.idx(r, j), d.mul(f, inv.idx(col, j))));
      }
    }
  }
  return inv;
}

std::vector<int> Matrix::rref() {
  const auto& d = field_.data();
  std::vector<int> pivots;
  int r = 0;
  for (int col = 0; col < cols_ && r < rows_; ++col) {
    int piv = -1;
    for (int i = r; i < rows_; ++i) {
      if (idx(i, col) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r) {
      for (int j = 0; j < cols_; ++j)
        std::swap(e_[static_cast<size_t>(piv) * cols_ + j],
                  e_[static_cast<size_t>(r) * cols_ + j]);
    }
    uint16_t s = d.inv(idx(r, col));
    if (s != d.one_idx) {
      for (int j = 0; j < cols_; ++j) set_idx(r, j, d.mul(idx(r, j), s));
    }
    for (int i = 0; i < rows_; ++i) {
      if (i == r) continue;
      uint16_t f = idx(i, col);
      if (f == 0) continue;
      for (int j = 0; j < cols_; ++j)
        set_idx(i, j, d.sub(idx(i, j), d.mul(f, idx(r, j))));
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

void Matrix::drop_zero_rows() {
  int keep = 0;
  for (int i = 0; i < rows_; ++i) {
    bool nz = false;
    for (int j = 0; j < cols_; ++j)
      if (idx(i, j) != 0) {
        nz = true;
        break;
      }
    if (nz) {
      if (keep != i) {
        for (int j = 0; j < cols_; ++j) set_idx(keep, j, idx(i, j));
      }
      ++keep;
    }
  }
  rows_ = keep;
  e_.resize(static_cast<size_t>(rows_) * cols_);
}

Matrix Matrix::kernel() const {
  const auto& d = field_.data();
  Matrix m = *this;
  std::vector<int> pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Matrix out(field_, static_cast<int>(free_cols.size()), cols_);
  for (size_t t = 0; t < free_cols.size(); ++t) {
    int f = free_cols[t];
    out.set_idx(static_cast<int>(t), f, d.one_idx);
    for (size_t r = 0; r < pivots.size(); ++r) {
      uint16_t v = m.idx(static_cast<int>(r), f);
      if (v != 0) out.set_idx(static_cast<int>(t), pivots[r], d.neg(v));
    }
  }
  return out;
}

int Matrix::rank() const {
  Matrix m = *this;
  return static_cast<int>(m.rref().size());
}

std::vector<uint16_t> Matrix::apply(const std::vector<uint16_t>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw Error("vector length mismatch");
  const auto& d = field_.data();
  std::vector<uint16_t> out(rows_, 0);
  for (int j = 0; j < cols_; ++j) {
    uint16_t x = v[j];
    if (x == 0) continue;
    for (int i = 0; i < rows_; ++i) {
      uint16_t a = idx(i, j);
      if (a == 0) continue;
      out[i] = d.add(out[i], d.mul(a, x));
    }
  }
  return out;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (!a.field_.same_as(b.field_) || a.cols_ != b.cols_)
    throw Error("vstack shape mismatch");
  Matrix out(a.field_, a.rows_ + b.rows_, a.cols_);
  std::copy(a.e_.begin(), a.e_.end(), out.e_.begin());
  std::copy(b.e_.begin(), b.e_.end(), out.e_.begin() + a.e_.size());
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    os << "[";
    for (int j = 0; j < cols_; ++j) {
      if (j) os << " ";
      os << at(i, j).to_string();
    }
    os << "]";
    if (i + 1 < rows_) os << "\n";
  }
  os << "]";
  return os.str();
}

}  // namespace hecke
