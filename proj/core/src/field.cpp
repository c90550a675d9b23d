#include "hecke/field.hpp"

#include <algorithm>
#include <sstream>

namespace hecke {

namespace {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long mod_reduce(long x, long p) {
  long r = x % p;
  return r < 0 ? r + p : r;
}

// Remainder of `a` modulo the monic polynomial `m`, coefficients mod p.
std::vector<long> poly_rem(std::vector<long> a, const std::vector<long>& m, long p) {
  int dm = static_cast<int>(m.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= dm) {
    int da = static_cast<int>(a.size()) - 1;
    long lead = a[da];
    if (lead != 0) {
      for (int i = 0; i <= dm; ++i) {
        a[da - dm + i] = mod_reduce(a[da - dm + i] - lead * m[i], p);
      }
    }
    a.pop_back();
    while (!a.empty() && a.back() == 0) a.pop_back();
    if (a.empty()) break;
  }
  return a;
}

// Trial division against all monic polynomials of degree <= k/2.
bool is_irreducible(const std::vector<long>& m, long p) {
  int k = static_cast<int>(m.size()) - 1;
  for (int d = 1; d <= k / 2; ++d) {
    // enumerate monic polynomials x^d + c_{d-1} x^{d-1} + ... + c_0
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long code = 0; code < count; ++code) {
      std::vector<long> div(d + 1, 0);
      long c = code;
      for (int i = 0; i < d; ++i) {
        div[i] = c % p;
        c /= p;
      }
      div[d] = 1;
      if (poly_rem(m, div, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

namespace detail {

uint16_t FieldData::pack(const std::vector<long>& coeffs) const {
  long idx = 0;
  for (int i = 0; i < k; ++i) idx = idx * p + mod_reduce(coeffs[i], p);
  return static_cast<uint16_t>(idx);
}

uint16_t FieldData::add_slow(uint16_t a, uint16_t b) const {
  const uint16_t* ca = &coeff_of[static_cast<size_t>(a) * k];
  const uint16_t* cb = &coeff_of[static_cast<size_t>(b) * k];
  long idx = 0;
  for (int i = 0; i < k; ++i) {
    long s = ca[i] + cb[i];
    if (s >= p) s -= p;
    idx = idx * p + s;
  }
  return static_cast<uint16_t>(idx);
}

uint16_t FieldData::mul_slow(uint16_t a, uint16_t b) const {
  const uint16_t* ca = &coeff_of[static_cast<size_t>(a) * k];
  const uint16_t* cb = &coeff_of[static_cast<size_t>(b) * k];
  // convolution; ca[i] is the coefficient of x^i
  std::vector<long> prod(2 * k - 1, 0);
  for (int i = 0; i < k; ++i) {
    if (ca[i] == 0) continue;
    for (int j = 0; j < k; ++j) {
      prod[i + j] += static_cast<long>(ca[i]) * cb[j];
    }
  }
  // fold x^{k+i} down using the precomputed rows
  for (int d = 2 * k - 2; d >= k; --d) {
    long c = mod_reduce(prod[d], p);
    if (c == 0) continue;
    const uint16_t* row = &xpow[static_cast<size_t>(d - k) * k];
    for (int i = 0; i < k; ++i) prod[i] += c * row[i];
    prod[d] = 0;
  }
  long idx = 0;
  for (int i = 0; i < k; ++i) idx = idx * p + mod_reduce(prod[i], p);
  return static_cast<uint16_t>(idx);
}

uint16_t FieldData::mul(uint16_t a, uint16_t b) const {
  if (!mul_table.empty()) return mul_table[static_cast<size_t>(a) * q + b];
  return mul_slow(a, b);
}

uint16_t FieldData::add(uint16_t a, uint16_t b) const {
  if (!add_table.empty()) return add_table[static_cast<size_t>(a) * q + b];
  return add_slow(a, b);
}

uint16_t FieldData::inv(uint16_t a) const {
  if (a == 0) throw DivisionByZeroError();
  return inv_table[a];
}

uint16_t FieldData::pow(uint16_t a, long n) const {
  if (n < 0) {
    a = inv(a);
    n = -n;
  }
  uint16_t r = one_idx;

  while (n > 0) {
    if (n & 1) r = mul(r, a);
    a = mul(a, a);
    n >>= 1;
  }
  return r;
}

}  // namespace detail

Field::Field(long p, int k, std::vector<long> modulus) {
  if (!is_prime(p)) throw NonPrimeError(p);
  if (k < 1) throw DegreeMismatchError("extension degree must be >= 1");
  if (static_cast<int>(modulus.size()) != k + 1)
    throw DegreeMismatchError("modulus must list k+1 coefficients, got " +
                              std::to_string(modulus.size()));
  for (auto& c : modulus) c = ((c % p) + p) % p;
  if (modulus[k] != 1)
    throw DegreeMismatchError("modulus must be monic of degree k");

  long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > detail::FieldData::kSizeCap)
      throw TooLargeError("field size p^k exceeds supported cap of 65536");
  }
  if (k >= 2 && !is_irreducible(modulus, p)) {
    std::ostringstream os;
    os << "modulus is reducible over F_" << p;
    throw ReducibleModulusError(os.str());
  }

  auto data = std::make_shared<detail::FieldData>();
  data->p = p;
  data->k = k;
  data->q = q;
  data->modulus = modulus;
  long one = 1;
  for (int i = 0; i < k - 1; ++i) one *= p;  // coords (1,0,...,0), lex rank p^{k-1}
  data->one_idx = static_cast<uint16_t>(one);

  // coordinate table: index -> (c_0, ..., c_{k-1}), lex encoding
  data->coeff_of.resize(static_cast<size_t>(q) * k);
  for (long idx = 0; idx < q; ++idx) {
    long rest = idx;
    for (int i = k - 1; i >= 0; --i) {
      data->coeff_of[static_cast<size_t>(idx) * k + i] =
          static_cast<uint16_t>(rest % p);
      rest /= p;
    }
  }

  // x^{k+i} mod modulus for i = 0..k-2, as coefficient rows (low degree first)
  if (k >= 2) {
    data->xpow.resize(static_cast<size_t>(k - 1) * k);
    std::vector<long> cur(modulus.begin(), modulus.end() - 1);  // x^k = -tail
    for (auto& c : cur) c = mod_reduce(-c, p);
    for (int i = 0; i < k - 1; ++i) {
      for (int j = 0; j < k; ++j)
        data->xpow[static_cast<size_t>(i) * k + j] = static_cast<uint16_t>(cur[j]);
      // multiply by x
      std::vector<long> nxt(k, 0);
      long carry = cur[k - 1];
      for (int j = k - 1; j >= 1; --j) nxt[j] = cur[j - 1];
      nxt[0] = 0;
      if (carry != 0) {
        for (int j = 0; j < k; ++j)
          nxt[j] = mod_reduce(nxt[j] - carry * modulus[j], p);
      }
      cur = nxt;
    }
  }

  data->neg_table.resize(q);
  for (long idx = 0; idx < q; ++idx) {
    long out = 0;
    for (int i = 0; i < k; ++i) {
      long c = data->coeff_of[static_cast<size_t>(idx) * k + i];
      out = out * p + (c == 0 ? 0 : p - c);
    }
    data->neg_table[idx] = static_cast<uint16_t>(out);
  }

  if (q <= detail::FieldData::kMulTableCap) {
    data->add_table.resize(static_cast<size_t>(q) * q);
    data->mul_table.resize(static_cast<size_t>(q) * q);
    for (long a = 0; a < q; ++a) {
      for (long b = 0; b < q; ++b) {
        data->add_table[static_cast<size_t>(a) * q + b] =
            data->add_slow(static_cast<uint16_t>(a), static_cast<uint16_t>(b));
        data->mul_table[static_cast<size_t>(a) * q + b] =
            data->mul_slow(static_cast<uint16_t>(a), static_cast<uint16_t>(b));
      }
    }
  }

  // inverses by Fermat: a^(q-2)
  data->inv_table.assign(q, 0);
  for (long a = 1; a < q; ++a)
    data->inv_table[a] = data->pow(static_cast<uint16_t>(a), q - 2);

  data_ = std::move(data);
}

FieldElem Field::zero() const { return FieldElem(*this, 0); }
FieldElem Field::one() const { return FieldElem(*this, data_->one_idx); }

FieldElem Field::from_coeffs(const std::vector<long>& coeffs) const {
  if (static_cast<int>(coeffs.size()) != data_->k)
    throw DegreeMismatchError("element needs exactly k coordinates");
  return FieldElem(*this, data_->pack(coeffs));
}

FieldElem Field::from_int(long n) const {
  std::vector<long> c(data_->k, 0);
  c[0] = ((n % data_->p) + data_->p) % data_->p;
  return from_coeffs(c);
}

FieldElem Field::elem(long index) const {
  if (index < 0 || index >= data_->q)
    throw Error("element index out of range");
  return FieldElem(*this, static_cast<uint16_t>(index));
}

std::vector<FieldElem> Field::enumerate() const {
  std::vector<FieldElem> out;
  out.reserve(data_->q);
  for (long i = 0; i < data_->q; ++i) out.emplace_back(*this, static_cast<uint16_t>(i));
  return out;
}

std::vector<FieldElem> Field::units() const {
  std::vector<FieldElem> out;
  out.reserve(data_->q - 1);
  for (long i = 1; i < data_->q; ++i) out.emplace_back(*this, static_cast<uint16_t>(i));
  return out;
}

bool Field::same_as(const Field& other) const {
  if (data_ == other.data_) return true;
  return data_->p == other.data_->p && data_->k == other.data_->k &&
         data_->modulus == other.data_->modulus;
}

std::string Field::to_string() const {
  std::ostringstream os;
  os << "F_" << data_->q;
  if (data_->k > 1) {
    os << " = F_" << data_->p << "[x]/(";
    bool first = true;
    for (int i = data_->k; i >= 0; --i) {
      long c = data_->modulus[i];
      if (c == 0) continue;
      if (!first) os << " + ";
      if (i == 0 || c != 1) os << c;
      if (i >= 1) os << "x";
      if (i >= 2) os << "^" << i;
      first = false;
    }
    os << ")";
  }
  return os.str();
}

Field builtin_field(long size) {
  struct Entry {
    long q;
    long p;
    int k;
    std::vector<long> modulus;
  };
  static const std::vector<Entry> table = {
      {2, 2, 1, {0, 1}},        {4, 2, 2, {1, 1, 1}},
      {8, 2, 3, {1, 1, 0, 1}},  {3, 3, 1, {0, 1}},
      {9, 3, 2, {1, 0, 1}},     {27, 3, 3, {1, 2, 0, 1}},
      {5, 5, 1, {0, 1}},        {25, 5, 2, {2, 0, 1}},
      {125, 5, 3, {1, 1, 0, 1}}, {7, 7, 1, {0, 1}},
      {49, 7, 2, {1, 0, 1}},    {343, 7, 3, {2, 0, 0, 1}},
  };
  for (const Entry& e : table) {
    if (e.q == size) return Field(e.p, e.k, e.modulus);
  }
  throw Error("no built-in field of size " + std::to_string(size) +
              "; pass an explicit descriptor");
}

std::vector<long> FieldElem::coeffs() const {
  const auto& d = field_.data();
  std::vector<long> out(d.k);
  for (int i = 0; i < d.k; ++i)
    out[i] = d.coeff_of[static_cast<size_t>(idx_) * d.k + i];
  return out;
}

void FieldElem::check_same(const FieldElem& o) const {
  if (!field_.same_as(o.field_)) throw FieldMismatchError();
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  check_same(o);
  return FieldElem(field_, field_.data().add(idx_, o.idx_));
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  check_same(o);
  return FieldElem(field_, field_.data().sub(idx_, o.idx_));
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  check_same(o);
  return FieldElem(field_, field_.data().mul(idx_, o.idx_));
}

FieldElem FieldElem::operator-() const {
  return FieldElem(field_, field_.data().neg(idx_));
}

FieldElem FieldElem::inv() const {
  return FieldElem(field_, field_.data().inv(idx_));
}

FieldElem FieldElem::pow(long n) const {
  return FieldElem(field_, field_.data().pow(idx_, n));
}

bool FieldElem::operator==(const FieldElem& o) const {
  check_same(o);
  return idx_ == o.idx_;
}

std::string FieldElem::to_string() const {
  auto c = coeffs();
  std::ostringstream os;
  if (field_.degree() == 1) {
    os << c[0];
    return os.str();
  }
  os << "[";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) os << ",";
    os << c[i];
  }
  os << "]";
  return os.str();
}

}  // namespace hecke
