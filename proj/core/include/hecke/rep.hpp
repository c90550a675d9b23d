#pragma once

#include <string>
#include <vector>

#include "hecke/matrix.hpp"

namespace hecke {

/// Generator letters for word evaluation. S2 expands to T^{-1} S1 T.
enum class Gen { T, TInv, S1, S2 };

using Word = std::vector<Gen>;

/// A finite-dimensional representation over F_{p^k} in residue characteristic,
/// given by the matrices of T (invertible) and S1. Construction validates the
/// defining relations at q = 0:
///   (S1 + 1) S1 = 0,
///   S1 S2 S1 = S2 S1 S2    with S2 = T^{-1} S1 T,
///   T^3 S1 = S1 T^3,
///   T S2 = S1 T            (holds by construction of S2, checked anyway).
class Rep {
 public:
  Rep(Matrix t, Matrix s1);

  int dim() const { return t_.rows(); }
  const Field& field() const { return t_.field(); }
  const Matrix& t() const { return t_; }
  const Matrix& s1() const { return s1_; }
  const Matrix& t_inv() const { return t_inv_; }
  const Matrix& s2() const { return s2_; }

  std::string to_string() const;

 private:
  Matrix t_, s1_, t_inv_, s2_;
};

/// Left-to-right product of generator matrices; the empty word is the
/// identity.
Matrix eval_word(const Rep& rep, const Word& w);

/// Scalars of the three central elements at q = 0. Throws NotScalarError
/// (naming the offending element) when one of them is not scalar, i.e. the
/// representation has no central character.
struct CentralScalars {
  FieldElem z, c1, c2;
};
CentralScalars central_scalars(const Rep& rep);

/// The three evaluated central matrices without the scalar check.
struct CentralMatrices {
  Matrix z, c1, c2;
};
CentralMatrices central_matrices(const Rep& rep);

}  // namespace hecke
