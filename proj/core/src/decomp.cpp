#include "hecke/decomp.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hecke/zoo.hpp"

namespace hecke {

namespace {

// Row-reduced working basis; rows are kept fully reduced against each other
// so exporting sorted-by-pivot yields the canonical RREF.
class EchelonBasis {
 public:
  EchelonBasis(const Field& f, int n) : field_(f), n_(n) {}

  int dim() const { return static_cast<int>(rows_.size()); }

  // Reduces v against the basis; inserts the remainder if nonzero.
  // Returns the inserted row index, or -1 when v was dependent.
  int insert(std::vector<uint16_t> v) {
    const auto& d = field_.data();
    for (size_t r = 0; r < rows_.size(); ++r) {
      uint16_t c = v[pivots_[r]];
      if (c == 0) continue;
      for (int j = 0; j < n_; ++j)
        v[j] = d.sub(v[j], d.mul(c, rows_[r][j]));
    }
    int piv = -1;
    for (int j = 0; j < n_; ++j) {
      if (v[j] != 0) {
        piv = j;
        break;
      }
    }
    if (piv < 0) return -1;
    uint16_t s = d.inv(v[piv]);
    if (s != d.one_idx)
      for (int j = 0; j < n_; ++j) v[j] = d.mul(v[j], s);
    // back-substitute into existing rows
    for (size_t r = 0; r < rows_.size(); ++r) {
      uint16_t c = rows_[r][piv];
      if (c == 0) continue;
      for (int j = 0; j < n_; ++j)
        rows_[r][j] = d.sub(rows_[r][j], d.mul(c, v[j]));
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return static_cast<int>(rows_.size()) - 1;
  }

  const std::vector<uint16_t>& row(int i) const { return rows_[i]; }

  Subspace to_subspace() const {
    std::vector<int> order(rows_.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return pivots_[a] < pivots_[b]; });
    Matrix m(field_, dim(), n_);
    std::vector<int> piv(rows_.size());
    for (size_t i = 0; i < order.size(); ++i) {
      piv[i] = pivots_[order[i]];
      for (int j = 0; j < n_; ++j) m.set_idx(static_cast<int>(i), j, rows_[order[i]][j]);
    }
    return Subspace{std::move(m), std::move(piv)};
  }

 private:
  Field field_;
  int n_;
  std::vector<std::vector<uint16_t>> rows_;
  std::vector<int> pivots_;
};

void check_limits(const Rep& rep) {
  if (rep.field().size() > kMaxDecompFieldSize)
    throw TooLargeError("field size " + std::to_string(rep.field().size()) +
                        " exceeds the enumeration cap " +
                        std::to_string(kMaxDecompFieldSize));
  if (rep.dim() > kMaxDecompDim)
    throw TooLargeError("dimension " + std::to_string(rep.dim()) +
                        " exceeds the enumeration cap " +
                        std::to_string(kMaxDecompDim));
}

// All projective points of F^n: first nonzero coordinate normalized to 1.
template <typename Fn>
void for_each_projective_point(const Field& f, int n, Fn&& fn) {
  long q = f.size();
  uint16_t one = f.data().one_idx;
  std::vector<uint16_t> v(n, 0);
  for (int lead = 0; lead < n; ++lead) {
    std::fill(v.begin(), v.end(), 0);
    v[lead] = one;
    // mixed-radix counter over positions lead+1..n-1
    while (true) {
      fn(v);
      int i = n - 1;
      while (i > lead) {
        long next = v[i] + 1;
        if (next < q) {
          v[i] = static_cast<uint16_t>(next);
          break;
        }
        v[i] = 0;
        --i;
      }
      if (i == lead) break;
    }
  }
}

Subspace sum_subspaces(const Subspace& a, const Subspace& b) {
  Matrix stacked = Matrix::vstack(a.basis, b.basis);
  std::vector<int> piv = stacked.rref();
  stacked.drop_zero_rows();
  return Subspace{std::move(stacked), std::move(piv)};
}

}  // namespace

bool Subspace::operator<(const Subspace& o) const {
  if (dim() != o.dim()) return dim() < o.dim();
  return basis.raw() < o.basis.raw();
}

bool Subspace::contains(const Subspace& o) const {
  if (o.dim() > dim()) return false;
  Matrix stacked = Matrix::vstack(basis, o.basis);
  return stacked.rank() == dim();
}

Subspace spin(const Rep& rep, const std::vector<uint16_t>& v) {
  bool nonzero = false;
  for (uint16_t c : v) nonzero = nonzero || (c != 0);
  if (!nonzero) throw ZeroVectorError();

  EchelonBasis basis(rep.field(), rep.dim());
  std::vector<int> queue;
  queue.push_back(basis.insert(v));
  while (!queue.empty()) {
    int r = queue.back();
    queue.pop_back();
    std::vector<uint16_t> row = basis.row(r);
    for (const Matrix* m : {&rep.t(), &rep.s1()}) {
      int added = basis.insert(m->apply(row));
      if (added >= 0) queue.push_back(added);
    }
    if (basis.dim() == rep.dim()) break;  // already the full space
  }
  return basis.to_subspace();
}

std::vector<Subspace> proper_submodules(const Rep& rep) {
  check_limits(rep);
  int n = rep.dim();
  std::map<std::vector<uint16_t>, Subspace> found;

  for_each_projective_point(rep.field(), n, [&](const std::vector<uint16_t>& v) {
    Subspace s = spin(rep, v);
    if (s.dim() < n) found.emplace(s.basis.raw(), s);
  });

  // close under pairwise sums
  std::vector<Subspace> worklist;
  worklist.reserve(found.size());
  for (auto& [k, s] : found) worklist.push_back(s);
  while (!worklist.empty()) {
    std::vector<Subspace> next;
    for (const Subspace& a : worklist) {
      for (auto& [k, b] : found) {
        Subspace s = sum_subspaces(a, b);
        if (s.dim() == n) continue;
        if (found.emplace(s.basis.raw(), s).second) next.push_back(s);
      }
    }
    // newly found sums must themselves be summed against everything
    worklist = std::move(next);
  }

  std::vector<Subspace> out;
  out.reserve(found.size());
  for (auto& [k, s] : found) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_irreducible(const Rep& rep) { return proper_submodules(rep).empty(); }

Rep restrict_to(const Rep& rep, const Subspace& sub) {
  const auto& d = rep.field().data();
  int k = sub.dim();
  auto restrict_matrix = [&](const Matrix& m) {
    Matrix out(rep.field(), k, k);
    for (int j = 0; j < k; ++j) {
      std::vector<uint16_t> row(sub.basis.cols());
      for (int c = 0; c < sub.basis.cols(); ++c) row[c] = sub.basis.idx(j, c);
      std::vector<uint16_t> img = m.apply(row);
      // coordinates can be read off the pivot columns of the RREF basis
      std::vector<uint16_t> residual = img;
      for (int i = 0; i < k; ++i) {
        uint16_t coeff = img[sub.pivots[i]];
        out.set_idx(i, j, coeff);
        if (coeff == 0) continue;
        for (int c = 0; c < sub.basis.cols(); ++c)
          residual[c] = d.sub(residual[c], d.mul(coeff, sub.basis.idx(i, c)));
      }
      for (uint16_t c : residual) {
        if (c != 0) throw Error("internal: subspace is not invariant");
      }
    }
    return out;
  };
  return Rep(restrict_matrix(rep.t()), restrict_matrix(rep.s1()));
}

Rep quotient_by(const Rep& rep, const Subspace& sub) {
  const auto& d = rep.field().data();
  int n = rep.dim();
  int k = sub.dim();
  std::vector<bool> is_pivot(n, false);
  for (int p : sub.pivots) is_pivot[p] = true;
  std::vector<int> comp;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) comp.push_back(c);

  auto project = [&](const Matrix& m) {
    Matrix out(rep.field(), n - k, n - k);
    for (size_t j = 0; j < comp.size(); ++j) {
      std::vector<uint16_t> e(n, 0);
      e[comp[j]] = d.one_idx;
      std::vector<uint16_t> img = m.apply(e);
      // reduce modulo the subspace: clear the pivot coordinates
      for (int i = 0; i < k; ++i) {
        uint16_t coeff = img[sub.pivots[i]];
        if (coeff == 0) continue;
        for (int c = 0; c < n; ++c)
          img[c] = d.sub(img[c], d.mul(coeff, sub.basis.idx(i, c)));
      }
      for (size_t i = 0; i < comp.size(); ++i)
        out.set_idx(static_cast<int>(i), static_cast<int>(j), img[comp[i]]);
    }
    return out;
  };
  return Rep(project(rep.t()), project(rep.s1()));
}

namespace {

const Subspace& pick_minimal(const std::vector<Subspace>& subs, TieOrder tie) {
  // subs is sorted by (dim, canonical form); Canonical takes the first,
  // Reversed the last subspace of minimal dimension.
  if (tie == TieOrder::Canonical) return subs.front();
  int min_dim = subs.front().dim();
  size_t last = 0;
  while (last + 1 < subs.size() && subs[last + 1].dim() == min_dim) ++last;
  return subs[last];
}

void series_rec(const Rep& rep, TieOrder tie, std::vector<SimpleLabel>& out) {
  std::vector<Subspace> subs = proper_submodules(rep);
  if (subs.empty()) {
    out.push_back(identify(rep));
    return;
  }
  const Subspace& w = pick_minimal(subs, tie);
  out.push_back(identify(restrict_to(rep, w)));
  series_rec(quotient_by(rep, w), tie, out);
}

std::vector<std::pair<SimpleLabel, int>> to_multiset(
    std::vector<SimpleLabel> labels) {
  std::sort(labels.begin(), labels.end());
  std::vector<std::pair<SimpleLabel, int>> out;
  for (const auto& l : labels) {
    if (!out.empty() && out.back().first == l)
      ++out.back().second;
    else
      out.emplace_back(l, 1);
  }
  return out;
}

bool has_proper_subspace_inside(const std::vector<Subspace>& subs,
                                const Subspace& u) {
  for (const Subspace& s : subs) {
    if (s.dim() < u.dim() && u.contains(s)) return true;
  }
  return false;
}

Structure structure_tag(const Rep& rep, const std::vector<Subspace>& subs,
                        size_t series_len) {
  if (subs.empty()) return Structure::Irreducible;
  if (subs.size() == 1) return Structure::Uniserial2;
  // decomposable? look for a complementary pair
  for (size_t i = 0; i < subs.size(); ++i) {
    for (size_t j = i; j < subs.size(); ++j) {
      if (subs[i].dim() + subs[j].dim() != rep.dim()) continue;
      Matrix stacked = Matrix::vstack(subs[i].basis, subs[j].basis);
      if (stacked.rank() != rep.dim()) continue;
      bool both_irr = !has_proper_subspace_inside(subs, subs[i]) &&
                      !has_proper_subspace_inside(subs, subs[j]);
      return both_irr ? Structure::DirectSum2 : Structure::Other;
    }
  }
  if (series_len == 4) return Structure::Length4;
  return Structure::Other;
}

}  // namespace

DecompReport composition_series(const Rep& rep, TieOrder tie) {
  std::vector<Subspace> subs = proper_submodules(rep);
  DecompReport report;

  if (subs.empty()) {
    report.series.push_back(identify(rep));
  } else {
    const Subspace& w = pick_minimal(subs, tie);
    report.series.push_back(identify(restrict_to(rep, w)));
    series_rec(quotient_by(rep, w), tie, report.series);
  }
  report.factors = to_multiset(report.series);
  report.structure = structure_tag(rep, subs, report.series.size());

  std::map<int, int> dims;
  for (const Subspace& s : subs) ++dims[s.dim()];
  report.lattice_dims.assign(dims.begin(), dims.end());
  return report;
}

std::vector<SimpleLabel> composition_factors(const Rep& rep) {
  check_limits(rep);
  int n = rep.dim();
  if (n == 0) return {};

  // find a minimal cyclic submodule (any minimal submodule is cyclic)
  std::optional<Subspace> best;
  for_each_projective_point(rep.field(), n, [&](const std::vector<uint16_t>& v) {
    if (best && best->dim() == 1) return;
    Subspace s = spin(rep, v);
    if (s.dim() == n) return;
    if (!best || s.dim() < best->dim()) best = std::move(s);
  });

  if (!best) return {identify(rep)};
  std::vector<SimpleLabel> out;
  out.push_back(identify(restrict_to(rep, *best)));
  std::vector<SimpleLabel> rest = composition_factors(quotient_by(rep, *best));
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

std::optional<Matrix> iso(const Rep& a, const Rep& b) {
  if (!a.field().same_as(b.field())) throw FieldMismatchError();
  if (a.dim() != b.dim()) return std::nullopt;
  const Field& f = a.field();
  const auto& d = f.data();
  int n = a.dim();
  int nn = n * n;

  // unknowns x_{il} flattened at i*n+l; equations X M_a - M_b X = 0
  Matrix system(f, 2 * nn, nn);
  int row = 0;
  for (const auto& [ma, mb] : {std::pair(&a.t(), &b.t()), std::pair(&a.s1(), &b.s1())}) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int l = 0; l < n; ++l) {
          // + X(i,l) * Ma(l,j)
          uint16_t cur = system.idx(row, i * n + l);
          system.set_idx(row, i * n + l, d.add(cur, (*ma).idx(l, j)));
          // - Mb(i,l) * X(l,j)
          cur = system.idx(row, l * n + j);
          system.set_idx(row, l * n + j, d.sub(cur, (*mb).idx(i, l)));
        }
        ++row;
      }
    }
  }

  Matrix kern = system.kernel();
  int s = kern.rows();
  if (s == 0) return std::nullopt;

  long q = f.size();
  long combos = 1;
  for (int i = 0; i < s; ++i) {
    combos *= q;
    if (combos > 1000000)
      throw TooLargeError("intertwiner solution space too large to enumerate");
  }

  // enumerate the solution space projectively: scalar multiples share
  // invertibility
  std::vector<uint16_t> lambda(s, 0);
  uint16_t one = d.one_idx;
  for (int lead = 0; lead < s; ++lead) {
    std::fill(lambda.begin(), lambda.end(), 0);
    lambda[lead] = one;
    while (true) {
      Matrix x(f, n, n);
      for (int t = 0; t < s; ++t) {
        if (lambda[t] == 0) continue;
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            x.set_idx(i, j,
                      d.add(x.idx(i, j), d.mul(lambda[t], kern.idx(t, i * n + j))));
      }
      if (x.inverse()) {
        if (x * a.t() != b.t() * x || x * a.s1() != b.s1() * x)
          throw Error("internal: intertwiner equations violated");
        return x;
      }
      int i = s - 1;
      while (i > lead) {
        long next = lambda[i] + 1;
        if (next < q) {
          lambda[i] = static_cast<uint16_t>(next);
          break;
        }
        lambda[i] = 0;
        --i;
      }
      if (i == lead) break;
    }
  }
  return std::nullopt;
}

SimpleLabel identify(const Rep& rep) {
  CentralScalars cs = [&] {
    try {
      return central_scalars(rep);
    } catch (const NotScalarError& e) {
      throw IdentifyFailedError(
          std::string("no central character on an irreducible factor: ") +
          e.what());
    }
  }();
  const FieldElem& z = cs.z;
  const FieldElem& c1 = cs.c1;
  const FieldElem& c2 = cs.c2;

  std::vector<SimpleLabel> candidates;
  switch (rep.dim()) {
    case 1:
      if (!c1.is_zero()) {
        candidates.emplace_back(Kind::M1_0, std::vector<FieldElem>{c1});
        candidates.emplace_back(Kind::M1_m1, std::vector<FieldElem>{c1});
      }
      break;
    case 2:
      if (!c1.is_zero()) {
        candidates.emplace_back(Kind::M2, std::vector<FieldElem>{c1});
        candidates.emplace_back(Kind::M2t, std::vector<FieldElem>{c1});
      }
      break;
    case 3:
      if (c1.is_zero() && c2.is_zero()) {
        candidates.emplace_back(Kind::P3, std::vector<FieldElem>{z});
        candidates.emplace_back(Kind::P3t, std::vector<FieldElem>{z});
      } else if (!c1.is_zero() && !c2.is_zero()) {
        if (c1 * z == c2 * c2) {
          FieldElem s = z * c2.inv();
          candidates.emplace_back(Kind::M3, std::vector<FieldElem>{z, s});
          candidates.emplace_back(Kind::M3t, std::vector<FieldElem>{z, s});
        }
        if (c2 == c1 * c1) {
          candidates.emplace_back(Kind::N3, std::vector<FieldElem>{z, c1});
          candidates.emplace_back(Kind::N3t, std::vector<FieldElem>{z, c1});
        }
      }
      break;
    case 6:
      if (!c1.is_zero() && c2.is_zero())
        candidates.emplace_back(Kind::L6, std::vector<FieldElem>{z, c1});
      else if (c1.is_zero() && !c2.is_zero())
        candidates.emplace_back(Kind::L6t, std::vector<FieldElem>{z, c2});
      else if (!c1.is_zero() && !c2.is_zero())
        candidates.emplace_back(Kind::K6, std::vector<FieldElem>{z, c1, c2});
      break;
    default:
      break;
  }

  std::vector<SimpleLabel> matches;
  FieldElem tr = rep.s1().trace();
  for (const SimpleLabel& cand : candidates) {
    Rep model = make_module(cand);
    // the S1 trace separates the twisted variants before the full search
    if (model.s1().trace() != tr) continue;
    if (iso(rep, model)) matches.push_back(cand);
  }
  if (matches.empty())
    throw IdentifyFailedError("dim " + std::to_string(rep.dim()) +
                              " irreducible with central scalars (" +
                              z.to_string() + ", " + c1.to_string() + ", " +
                              c2.to_string() + ") matches no label");
  if (matches.size() > 1)
    throw AmbiguousMatchError("labels " + matches[0].to_string() + " and " +
                              matches[1].to_string() +
                              " both match one irreducible");
  return matches[0];
}

Subspace socle(const Rep& rep) {
  std::vector<Subspace> subs = proper_submodules(rep);
  std::optional<Subspace> acc;
  for (const Subspace& s : subs) {
    if (has_proper_subspace_inside(subs, s)) continue;  // not minimal
    if (!acc)
      acc = s;
    else
      acc = sum_subspaces(*acc, s);
  }
  if (!acc) {
    // irreducible: the socle is the whole space
    Matrix full = Matrix::identity(rep.field(), rep.dim());
    std::vector<int> piv(rep.dim());
    for (int i = 0; i < rep.dim(); ++i) piv[i] = i;
    return Subspace{std::move(full), std::move(piv)};
  }
  return *acc;
}

}  // namespace hecke
