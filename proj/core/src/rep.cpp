#include "hecke/rep.hpp"

#include <sstream>

#include "hecke/central_words.hpp"

namespace hecke {

Rep::Rep(Matrix t, Matrix s1)
    : t_(std::move(t)),
      s1_(std::move(s1)),
      t_inv_(t_.field(), 0, 0),
      s2_(t_.field(), 0, 0) {
  if (t_.rows() != t_.cols() || s1_.rows() != s1_.cols() ||
      t_.rows() != s1_.rows())
    throw Error("T and S1 must be square matrices of equal size");
  if (!t_.field().same_as(s1_.field())) throw FieldMismatchError();

  auto inv = t_.inverse();
  if (!inv) throw NotInvertibleError("T is not invertible");
  t_inv_ = *inv;
  s2_ = t_inv_ * s1_ * t_;

  const Field& f = t_.field();
  Matrix id = Matrix::identity(f, dim());

  if (!((s1_ + id) * s1_).is_zero())
    throw RelationViolatedError("(S1+1)S1 = 0");
  if (s1_ * s2_ * s1_ != s2_ * s1_ * s2_)
    throw RelationViolatedError("S1 S2 S1 = S2 S1 S2");
  Matrix t3 = t_ * t_ * t_;
  if (t3 * s1_ != s1_ * t3) throw RelationViolatedError("T^3 S1 = S1 T^3");
  if (t_ * s2_ != s1_ * t_) throw RelationViolatedError("T S2 = S1 T");
}

std::string Rep::to_string() const {
  std::ostringstream os;
  os << "Rep(dim=" << dim() << ")\nT =\n"
     << t_.to_string() << "\nS1 =\n"
     << s1_.to_string();
  return os.str();
}

Matrix eval_word(const Rep& rep, const Word& w) {
  Matrix out = Matrix::identity(rep.field(), rep.dim());
  for (Gen g : w) {
    switch (g) {
      case Gen::T: out = out * rep.t(); break;
      case Gen::TInv: out = out * rep.t_inv(); break;
      case Gen::S1: out = out * rep.s1(); break;
      case Gen::S2: out = out * rep.s2(); break;
    }
  }
  return out;
}

CentralMatrices central_matrices(const Rep& rep) {
  FieldElem one = rep.field().one();  // 1 - q at q = 0
  return {sigma3_word(rep.t()),
          qsigma1_word(rep.t(), rep.s1(), rep.s2(), one),
          qsigma2_word(rep.t(), rep.t_inv(), rep.s1(), rep.s2(), one)};
}

CentralScalars central_scalars(const Rep& rep) {
  CentralMatrices m = central_matrices(rep);
  auto z = m.z.as_scalar();
  if (!z) throw NotScalarError("sigma3");
  auto c1 = m.c1.as_scalar();
  if (!c1) throw NotScalarError("q*sigma1");
  auto c2 = m.c2.as_scalar();
  if (!c2) throw NotScalarError("q*sigma2");
  return {*z, *c1, *c2};
}

}  // namespace hecke
