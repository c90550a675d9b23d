#include "hecke/standard.hpp"

namespace hecke {

LatticeEntries lattice_entries(const Character& chi) {
  if (!is_integral(chi)) throw NotIntegralError("character is not integral");
  if (!is_ordinary(chi))
    throw NotOrdinaryError("lattice entries need an ordinary character");

  VUnit q = q_of(chi.cfg);
  VUnit z = chi.y1() * chi.y2() * chi.y3();
  VUnit a = q_factor(S3::S1, chi).inv();
  VUnit b = q_factor(S3::S2S1, chi) * q_factor(S3::S1S2S1, chi).inv();
  VUnit c = q_factor(S3::S2, chi) * q_factor(S3::S1S2, chi).inv();
  VUnit ap = q * a.inv();
  VUnit bp = q * b.inv();
  VUnit cp = q * c.inv();

  LatticeEntries out{z, a, b, c, ap, bp, cp};
  if (z.val() != 0) throw Error("internal: z must be a unit");
  for (const VUnit* v : {&out.a, &out.b, &out.c, &out.ap, &out.bp, &out.cp}) {
    if (v->val() < 0)
      throw Error("internal: lattice entry with negative valuation");
  }
  return out;
}

Rep build_reduced_standard(const Character& chi) {
  LatticeEntries le = lattice_entries(chi);
  const Field& f = chi.cfg.field;

  FieldElem z = le.z.reduce();
  FieldElem a = le.a.reduce(), b = le.b.reduce(), c = le.c.reduce();
  FieldElem ap = le.ap.reduce(), bp = le.bp.reduce(), cp = le.cp.reduce();
  FieldElem m1 = -f.one();  // q - 1 at q = 0

  Matrix t(f, 6, 6);
  t.set(0, 2, z);
  t.set(1, 0, f.one());
  t.set(2, 1, f.one());
  t.set(3, 5, z);
  t.set(4, 3, f.one());
  t.set(5, 4, f.one());

  Matrix s1(f, 6, 6);
  s1.set(0, 3, ap);
  s1.set(1, 5, bp);
  s1.set(2, 2, m1);
  s1.set(2, 4, c);
  s1.set(3, 0, a);
  s1.set(3, 3, m1);
  s1.set(4, 2, cp);
  s1.set(5, 1, b);
  s1.set(5, 5, m1);

  return Rep(std::move(t), std::move(s1));
}

}  // namespace hecke
