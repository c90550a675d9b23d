#include "hecke/char0.hpp"

#include <random>
#include <sstream>

#include "hecke/central_words.hpp"

namespace hecke::char0 {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  RatMatrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int l = 0; l < cols_; ++l) {
      const Rational& a = at(i, l);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(l, j) == 0) continue;
        out.at(i, j) += a * o.at(l, j);
      }
    }
  return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  RatMatrix out(rows_, cols_);
  for (size_t t = 0; t < e_.size(); ++t) out.e_[t] = e_[t] + o.e_[t];
  return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  RatMatrix out(rows_, cols_);
  for (size_t t = 0; t < e_.size(); ++t) out.e_[t] = e_[t] - o.e_[t];
  return out;
}

RatMatrix RatMatrix::plus_scalar_identity(const Rational& c) const {
  RatMatrix out = *this;
  for (int i = 0; i < rows_; ++i) out.at(i, i) += c;
  return out;
}

RatMatrix RatMatrix::scaled(const Rational& c) const {
  RatMatrix out = *this;
  for (auto& v : out.e_) v *= c;
  return out;
}

std::optional<RatMatrix> RatMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  int n = rows_;
  RatMatrix a = *this;
  RatMatrix inv = identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r) {
      if (a.at(r, col) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return std::nullopt;
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    Rational s = 1 / a.at(col, col);
    for (int j = 0; j < n; ++j) {
      a.at(col, j) *= s;
      inv.at(col, j) *= s;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a.at(r, col) == 0) continue;
      Rational f = a.at(r, col);
      for (int j = 0; j < n; ++j) {
        a.at(r, j) -= f * a.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

bool RatMatrix::is_zero() const {
  for (const auto& v : e_)
    if (v != 0) return false;
  return true;
}

std::optional<Rational> RatMatrix::as_scalar() const {
  if (rows_ != cols_ || rows_ == 0) return std::nullopt;
  Rational c = at(0, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (i == j ? at(i, j) != c : at(i, j) != 0) return std::nullopt;
    }
  return c;
}

StandardModuleQ build_standard_q(const Rational& q, const Rational& y1,
                                 const Rational& y2, const Rational& y3) {
  Rational z = y1 * y2 * y3;
  Rational a = 1, b = 1 / y2, c = q / y1;
  Rational ap = q / a, bp = q / b, cp = q / c;

  RatMatrix t(6, 6);
  t.at(0, 2) = z;
  t.at(1, 0) = 1;
  t.at(2, 1) = 1;
  t.at(3, 5) = z;
  t.at(4, 3) = 1;
  t.at(5, 4) = 1;

  RatMatrix s1(6, 6);
  Rational qm1 = q - 1;
  s1.at(0, 3) = ap;
  s1.at(1, 5) = bp;
  s1.at(2, 2) = qm1;
  s1.at(2, 4) = c;
  s1.at(3, 0) = a;
  s1.at(3, 3) = qm1;
  s1.at(4, 2) = cp;
  s1.at(5, 1) = b;
  s1.at(5, 5) = qm1;

  auto t_inv = t.inverse();
  if (!t_inv) throw std::logic_error("T must be invertible for z != 0");
  RatMatrix s2 = *t_inv * s1 * t;
  return {q, y1, y2, y3, std::move(t), std::move(*t_inv), std::move(s1),
          std::move(s2)};
}

namespace {

bool is_scalar_times(const RatMatrix& m, const Rational& c) {
  auto s = m.as_scalar();
  return s && *s == c;
}

// column vector with a single entry
RatMatrix unit_column(int n, int i, const Rational& c) {
  RatMatrix v(n, 1);
  v.at(i, 0) = c;
  return v;
}

RatMatrix column_of(const RatMatrix& m, int j) {
  RatMatrix v(m.rows(), 1);
  for (int i = 0; i < m.rows(); ++i) v.at(i, 0) = m.at(i, j);
  return v;
}

}  // namespace

OracleReport run_central_word_oracle(int samples, uint64_t seed) {
  OracleReport report;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  auto random_nonzero = [&] {
    int n = 0;
    while (n == 0) n = num(rng);
    return Rational(n, den(rng));
  };

  for (int s = 0; s < samples; ++s) {
    Rational q = random_nonzero();
    Rational y1 = random_nonzero(), y2 = random_nonzero(), y3 = random_nonzero();
    StandardModuleQ m = build_standard_q(q, y1, y2, y3);
    ++report.samples;

    std::ostringstream tag;
    tag << "sample " << s << " (q=" << q << ", y=(" << y1 << "," << y2 << ","
        << y3 << "))";
    auto check = [&](bool ok, const std::string& what) {
      ++report.checks;
      if (!ok) report.failures.push_back(tag.str() + ": " + what);
    };

    RatMatrix id = RatMatrix::identity(6);

    // defining relations at generic q
    check(((m.s1.plus_scalar_identity(1)) * (m.s1.plus_scalar_identity(-q)))
              .is_zero(),
          "(S1+1)(S1-q) = 0");
    check(m.s1 * m.s2 * m.s1 == m.s2 * m.s1 * m.s2, "braid relation");
    RatMatrix t3 = m.t * m.t * m.t;
    check(t3 * m.s1 == m.s1 * t3, "T^3 commutes with S1");
    check(m.t * m.s2 == m.s1 * m.t, "T S2 = S1 T");

    // basis-convention identities pinning the second 3-block
    check(column_of(m.s2, 0) == unit_column(6, 4, 1 / y2),
          "S2 g = q(s2)^{-1} (T h)");
    check(column_of(m.s2 * m.s1, 0) == unit_column(6, 1, q / y1),
          "S2 S1 g = q(s2s1)^{-1} (T g)");
    check(column_of(m.s1 * m.s2, 0) == unit_column(6, 2, q / (y1 * y2)),
          "S1 S2 g = q(s1s2)^{-1} (T^2 g)");
    check(column_of(m.s1 * m.s2 * m.s1, 0) == unit_column(6, 5, q / (y1 * y2)),
          "S1 S2 S1 g = q(s1s2s1)^{-1} (T^2 h)");

    // central words act by q-scaled symmetric functions
    Rational e1 = y1 + y2 + y3;
    Rational e2 = y1 * y2 + y1 * y3 + y2 * y3;
    Rational e3 = y1 * y2 * y3;
    Rational one_minus_q = 1 - q;

    check(is_scalar_times(hecke::sigma3_word(m.t), e3), "sigma3 acts by y1 y2 y3");
    check(is_scalar_times(hecke::qsigma1_word(m.t, m.s1, m.s2, one_minus_q),
                          q * e1),
          "q sigma1 acts by q (y1+y2+y3)");
    check(is_scalar_times(
              hecke::qsigma2_word(m.t, m.t_inv, m.s1, m.s2, one_minus_q),
              q * e2),
          "q sigma2 acts by q (y1y2+y1y3+y2y3)");
  }
  return report;
}

}  // namespace hecke::char0
