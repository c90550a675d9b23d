#pragma once

namespace hecke {

// Polynomial words for the three central elements, written in the generators
// T, S1 and the derived S2 = T^{-1} S1 T. They come from the Bernstein
// generators via the localization identity q*Si^{-1} = Si - q + 1, which is
// why the only dependence on the base ring's q is through the scalar 1 - q.
//
// The same expressions are evaluated over the residue field (q = 0, so
// one_minus_q = 1) and over exact rationals with generic q; the rational
// instantiation is the correctness gate for the q = 0 specialization.
//
// Mat must provide operator*, operator+ and plus_scalar_identity(scalar).

template <class Mat>
Mat sigma3_word(const Mat& t) {
  return t * t * t;
}

template <class Mat, class Scalar>
Mat qsigma1_word(const Mat& t, const Mat& s1, const Mat& s2,
                 const Scalar& one_minus_q) {
  Mat u1 = s1.plus_scalar_identity(one_minus_q);
  Mat u2 = s2.plus_scalar_identity(one_minus_q);
  return u1 * u2 * t + u2 * t * s1 + t * s1 * s2;
}

template <class Mat, class Scalar>
Mat qsigma2_word(const Mat& t, const Mat& t_inv, const Mat& s1, const Mat& s2,
                 const Scalar& one_minus_q) {
  Mat u1 = s1.plus_scalar_identity(one_minus_q);
  Mat u2 = s2.plus_scalar_identity(one_minus_q);
  return t * t * t * (t_inv * s2 * s1 + u1 * (t_inv * s2) + u2 * u1 * t_inv);
}

}  // namespace hecke
