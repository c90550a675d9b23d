#include "hecke/zoo.hpp"

namespace hecke {

namespace {

void check_params(const SimpleLabel& label) {
  int want = kind_param_count(label.kind);
  if (static_cast<int>(label.params.size()) != want)
    throw BadParamsError(std::string(kind_name(label.kind)) + " takes " +
                         std::to_string(want) + " parameter(s)");
  for (const auto& p : label.params) {
    if (p.is_zero())
      throw BadParamsError(std::string(kind_name(label.kind)) +
                           ": parameters must be nonzero");
  }
}

// T as the cyclic shift with T^3 = z on each 3-dimensional block.
Matrix shift_t(const Field& f, int dim, const FieldElem& z) {
  Matrix t(f, dim, dim);
  for (int block = 0; block + 3 <= dim; block += 3) {
    t.set(block + 1, block + 0, f.one());
    t.set(block + 2, block + 1, f.one());
    t.set(block + 0, block + 2, z);
  }
  return t;
}

}  // namespace

Rep make_module(const SimpleLabel& label) {
  check_params(label);
  const Field& f = label.params[0].field();
  FieldElem one = f.one();
  FieldElem m1 = -one;

  switch (label.kind) {
    case Kind::M1_0: {
      const FieldElem& y = label.params[0];
      Matrix t(f, 1, 1), s1(f, 1, 1);
      t.set(0, 0, y);
      return Rep(std::move(t), std::move(s1));
    }
    case Kind::M1_m1: {
      const FieldElem& y = label.params[0];
      Matrix t(f, 1, 1), s1(f, 1, 1);
      t.set(0, 0, y);
      s1.set(0, 0, m1);
      return Rep(std::move(t), std::move(s1));
    }
    case Kind::M2:
    case Kind::M2t: {
      const FieldElem& y = label.params[0];
      Matrix t(f, 2, 2), s1(f, 2, 2);
      t.set(1, 0, one);
      t.set(0, 1, -(y * y));
      t.set(1, 1, -y);
      if (label.kind == Kind::M2)
        s1.set(0, 0, m1);  // S1 w = -w, S1 Tw = 0
      else
        s1.set(1, 1, m1);  // S1 w = 0, S1 Tw = -Tw
      return Rep(std::move(t), std::move(s1));
    }
    case Kind::M3:
    case Kind::M3t: {
      const FieldElem& z = label.params[0];
      const FieldElem& y = label.params[1];
      Matrix t = shift_t(f, 3, z);
      Matrix s1(f, 3, 3);
      if (label.kind == Kind::M3) {
        s1.set(2, 1, y.inv());
      } else {
        s1.set(0, 0, m1);
        s1.set(2, 1, -y.inv());
      }
      s1.set(2, 2, m1);
      return Rep(std::move(t), std::move(s1));
    }
    case Kind::N3:
    case Kind::N3t: {
      const FieldElem& z = label.params[0];
      const FieldElem& y = label.params[1];
      Matrix t = shift_t(f, 3, z);
      Matrix s1(f, 3, 3);
      if (label.kind == Kind::N3) {
        s1.set(0, 0, m1);
        s1.set(1, 2, -y);
      } else {
        s1.set(1, 2, y);
      }
      s1.set(2, 2, m1);
      return Rep(std::move(t), std::move(s1));
    }
    case Kind::P3:
    case Kind::P3t: {
      const FieldElem& z = label.params[0];
      Matrix t = shift_t(f, 3, z);
      Matrix s1(f, 3, 3);
      if (label.kind == Kind::P3t) s1.set(0, 0, m1);
      s1.set(2, 2, m1);
      return Rep(std::move(t), std::move(s1));
    }
    case Kind::L6: {
      const FieldElem& z = label.params[0];
      const FieldElem& y = label.params[1];
      Matrix t = shift_t(f, 6, z);
      Matrix s1(f, 6, 6);
      s1.set(5, 1, one);          // S1(Tv) = T^2 w
      s1.set(2, 2, m1);
      s1.set(3, 3, m1);
      s1.set(2, 4, y * z.inv());  // S1(Tw) = (y/z) T^2 v
      s1.set(5, 5, m1);
      return Rep(std::move(t), std::move(s1));
    }
    case Kind::L6t: {
      const FieldElem& z = label.params[0];
      const FieldElem& yp = label.params[1];
      Matrix t = shift_t(f, 6, z);
      Matrix s1(f, 6, 6);
      s1.set(3, 0, one);           // S1(v) = w
      s1.set(2, 2, m1);
      s1.set(3, 3, m1);
      s1.set(2, 4, yp * z.inv());  // S1(Tw) = (y'/z) T^2 v
      s1.set(5, 5, m1);
      return Rep(std::move(t), std::move(s1));
    }
    case Kind::K6: {
      const FieldElem& z = label.params[0];
      const FieldElem& y = label.params[1];
      const FieldElem& yp = label.params[2];
      Matrix t = shift_t(f, 6, z);
      Matrix s1(f, 6, 6);
      s1.set(3, 0, one);           // S1(v) = w
      s1.set(5, 1, y * yp.inv());  // S1(Tv) = (y/y') T^2 w
      s1.set(2, 2, m1);
      s1.set(3, 3, m1);
      s1.set(2, 4, yp * z.inv());  // S1(Tw) = (y'/z) T^2 v
      s1.set(5, 5, m1);
      return Rep(std::move(t), std::move(s1));
    }
  }
  throw Error("unreachable");
}

ZooStructure expected_structure(const SimpleLabel& label) {
  check_params(label);
  auto irreducible = [&] {
    return ZooStructure{true, {label}, {}, {}, Structure::Irreducible};
  };
  auto uniserial = [&](SimpleLabel sub, SimpleLabel quot) {
    return ZooStructure{false, {sub, quot}, sub, quot, Structure::Uniserial2};
  };

  switch (label.kind) {
    case Kind::M1_0:
    case Kind::M1_m1:
    case Kind::M2:
    case Kind::M2t:
    case Kind::P3:
    case Kind::P3t:
    case Kind::L6:
    case Kind::L6t:
      return irreducible();
    case Kind::M3:
    case Kind::M3t:
    case Kind::N3:
    case Kind::N3t: {
      const FieldElem& z = label.params[0];
      const FieldElem& y = label.params[1];
      if (y * y * y != z) return irreducible();
      switch (label.kind) {
        case Kind::M3:
          return uniserial(SimpleLabel(Kind::M1_0, {y}),
                           SimpleLabel(Kind::M2, {y}));
        case Kind::M3t:
          return uniserial(SimpleLabel(Kind::M2t, {y}),
                           SimpleLabel(Kind::M1_m1, {y}));
        case Kind::N3:
          return uniserial(SimpleLabel(Kind::M1_m1, {y}),
                           SimpleLabel(Kind::M2, {y}));
        default:  // N3t
          return uniserial(SimpleLabel(Kind::M2t, {y}),
                           SimpleLabel(Kind::M1_0, {y}));
      }
    }
    case Kind::K6: {
      const FieldElem& z = label.params[0];
      const FieldElem& y = label.params[1];
      const FieldElem& yp = label.params[2];
      bool deg1 = (yp * yp == z * y);  // y'^2 = z y
      bool deg2 = (y * y == yp);       // y^2 = y'
      if (!deg1 && !deg2) return irreducible();
      FieldElem s = yp * y.inv();
      if (deg1 && !deg2)
        return uniserial(SimpleLabel(Kind::M3, {z, s}),
                         SimpleLabel(Kind::M3t, {z, s}));
      if (deg2 && !deg1)
        return uniserial(SimpleLabel(Kind::N3t, {z, s}),
                         SimpleLabel(Kind::N3, {z, s}));
      // both degeneracies: length four
      return ZooStructure{false,
                          {SimpleLabel(Kind::M1_0, {y}),
                           SimpleLabel(Kind::M1_m1, {y}),
                           SimpleLabel(Kind::M2, {y}),
                           SimpleLabel(Kind::M2t, {y})},
                          {},
                          {},
                          Structure::Length4};
    }
  }
  throw Error("unreachable");
}

bool expected_irreducible(const SimpleLabel& label) {
  return expected_structure(label).irreducible;
}

std::vector<Kind> all_kinds() {
  return {Kind::M1_0, Kind::M1_m1, Kind::M2, Kind::M2t, Kind::M3,
          Kind::M3t,  Kind::N3,    Kind::N3t, Kind::P3, Kind::P3t,
          Kind::L6,   Kind::L6t,   Kind::K6};
}

std::vector<SimpleLabel> all_labels_of_kind(Kind k, const Field& f) {
  std::vector<SimpleLabel> out;
  std::vector<FieldElem> units = f.units();
  int n = kind_param_count(k);
  std::vector<size_t> pick(n, 0);
  while (true) {
    std::vector<FieldElem> params;
    params.reserve(n);
    for (int i = 0; i < n; ++i) params.push_back(units[pick[i]]);
    out.emplace_back(k, std::move(params));
    int i = n - 1;
    while (i >= 0 && ++pick[i] == units.size()) {
      pick[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

}  // namespace hecke
