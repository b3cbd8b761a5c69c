#include "cliffq/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

#include "cliffq/errors.hpp"

namespace cliffq {

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::x_power_minus_one(int m) {
  std::vector<Integer> c(static_cast<std::size_t>(m) + 1, Integer(0));
  c.front() = -1;
  c.back() = 1;
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::divexact(const IntPolynomial& d) const {
  if (d.is_zero() || d.coeffs_.back() != 1) throw std::invalid_argument("divexact: divisor must be monic");
  if (is_zero()) return {};
  std::vector<Integer> rem = coeffs_;
  const int dd = d.degree();
  const int qd = degree() - dd;
  if (qd < 0) throw std::invalid_argument("divexact: nonzero remainder");
  std::vector<Integer> quot(static_cast<std::size_t>(qd) + 1, Integer(0));
  for (int i = qd; i >= 0; --i) {
    const Integer c = rem[static_cast<std::size_t>(i + dd)];
    quot[static_cast<std::size_t>(i)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i + j)] -= c * d.coeffs_[static_cast<std::size_t>(j)];
  }
  for (const auto& r : rem) {
    if (r != 0) throw std::invalid_argument("divexact: nonzero remainder");
  }
  return IntPolynomial(std::move(quot));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Integer c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    c = abs(c);
    if (c != 1 || i == 0) os << c.get_str();
    if (c != 1 && i > 0) os << "*";
    if (i > 0) os << "x";
    if (i > 1) os << "^" << i;
    first = false;
  }
  return os.str();
}

int euler_phi(int m) {
  if (m < 1) throw std::invalid_argument("euler_phi: m must be positive");
  int result = m;
  int r = m;
  for (int p = 2; p * p <= r; ++p) {
    if (r % p != 0) continue;
    while (r % p == 0) r /= p;
    result -= result / p;
  }
  if (r > 1) result -= result / r;
  return result;
}

namespace {

// Per-conductor tables: Φ_m and the reduced power basis images of ζ^k.
struct FieldData {
  int m = 1;
  int phi = 1;
  IntPolynomial poly;
  std::vector<std::vector<Rational>> powers;  // powers[k] = ζ^k, k < m
};

std::mutex& cache_mutex() {
  static std::mutex mu;
  return mu;
}

std::map<int, std::unique_ptr<IntPolynomial>>& poly_cache() {
  static std::map<int, std::unique_ptr<IntPolynomial>> cache;
  return cache;
}

std::map<int, std::unique_ptr<FieldData>>& field_cache() {
  static std::map<int, std::unique_ptr<FieldData>> cache;
  return cache;
}

const IntPolynomial& cyclotomic_polynomial_locked(int m) {
  auto& cache = poly_cache();
  if (auto it = cache.find(m); it != cache.end()) return *it->second;
  IntPolynomial p = IntPolynomial::x_power_minus_one(m);
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) p = p.divexact(cyclotomic_polynomial_locked(d));
  }
  auto [it, _] = cache.emplace(m, std::make_unique<IntPolynomial>(std::move(p)));
  return *it->second;
}

// In-place reduction of a power-basis vector modulo the monic Φ_m.
void reduce_in_place(std::vector<Rational>& v, const IntPolynomial& poly) {
  const int phi = poly.degree();
  for (int i = static_cast<int>(v.size()) - 1; i >= phi; --i) {
    const Rational c = v[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    for (int j = 0; j < phi; ++j) {
      const Integer& pj = poly[static_cast<std::size_t>(j)];
      if (pj != 0) v[static_cast<std::size_t>(i - phi + j)] -= c * pj;
    }
  }
  v.resize(static_cast<std::size_t>(phi), Rational(0));
}

const FieldData& field(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic field: conductor must be positive");
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto& cache = field_cache();
  if (auto it = cache.find(m); it != cache.end()) return *it->second;
  auto data = std::make_unique<FieldData>();
  data->m = m;
  data->poly = cyclotomic_polynomial_locked(m);
  data->phi = data->poly.degree();
  data->powers.reserve(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1, Rational(0));
    v[static_cast<std::size_t>(k)] = 1;
    reduce_in_place(v, data->poly);
    data->powers.push_back(std::move(v));
  }
  auto [it, _] = cache.emplace(m, std::move(data));
  return *it->second;
}

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Polynomial long division over Q: a = q*b + r.
void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  trim(r);
  q.clear();
  if (r.size() < b.size()) return;
  q.assign(r.size() - b.size() + 1, Rational(0));
  const Rational lead = b.back();
  for (std::size_t i = q.size(); i-- > 0;) {
    const Rational c = r[i + b.size() - 1] / lead;
    q[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] -= c * b[j];
  }
  trim(r);
  trim(q);
}

QPoly poly_sub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
  QPoly out = a;
  if (!q.empty() && !b.empty()) {
    out.resize(std::max(out.size(), q.size() + b.size() - 1), Rational(0));
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
    }
  }
  trim(out);
  return out;
}

}  // namespace

const IntPolynomial& cyclotomic_polynomial(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
  std::lock_guard<std::mutex> lock(cache_mutex());
  return cyclotomic_polynomial_locked(m);
}

// ---------------------------------------------------------------------------
// CyclotomicNumber

CyclotomicNumber::CyclotomicNumber(int conductor) : conductor_(conductor) {
  coeffs_.assign(static_cast<std::size_t>(field(conductor).phi), Rational(0));
}

CyclotomicNumber::CyclotomicNumber(int conductor, const Rational& value) : CyclotomicNumber(conductor) {
  coeffs_[0] = value;
}

CyclotomicNumber::CyclotomicNumber(int conductor, std::vector<Rational> power_coeffs)
    : conductor_(conductor), coeffs_(std::move(power_coeffs)) {
  const FieldData& f = field(conductor);
  for (auto& c : coeffs_) c.canonicalize();
  reduce_in_place(coeffs_, f.poly);
}

void CyclotomicNumber::check_same_field(const CyclotomicNumber& o) const {
  if (conductor_ != o.conductor_) {
    throw ConductorMismatch("cyclotomic conductor mismatch: " + std::to_string(conductor_) + " vs " +
                            std::to_string(o.conductor_));
  }
}

bool CyclotomicNumber::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool CyclotomicNumber::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c == 0; });
}

int CyclotomicNumber::root_of_unity_exponent() const {
  const FieldData& f = field(conductor_);
  for (int k = 0; k < f.m; ++k) {
    if (f.powers[static_cast<std::size_t>(k)] == coeffs_) return k;
  }
  return -1;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
  check_same_field(o);
  const std::size_t phi = coeffs_.size();
  std::vector<Rational> prod(2 * phi - 1, Rational(0));
  for (std::size_t i = 0; i < phi; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (o.coeffs_[j] == 0) continue;
      prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  reduce_in_place(prod, field(conductor_).poly);
  coeffs_ = std::move(prod);
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const Rational& r) {
  for (auto& c : coeffs_) c *= r;
  return *this;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw DivisionByZero("cyclotomic inverse of zero");
  if (const int k = root_of_unity_exponent(); k >= 0) return root_of_unity(conductor_, -k);
  if (is_rational()) return CyclotomicNumber(conductor_, Rational(1) / coeffs_[0]);

  // Extended Euclid against Φ_m; Φ_m is irreducible so the gcd is a constant.
  const FieldData& f = field(conductor_);
  QPoly r0(f.poly.coefficients().begin(), f.poly.coefficients().end());
  QPoly r1 = coeffs_;
  trim(r1);
  QPoly s0;
  QPoly s1{Rational(1)};
  QPoly q;
  QPoly r;
  while (!r1.empty()) {
    divmod(r0, r1, q, r);
    QPoly s2 = poly_sub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw std::logic_error("cyclotomic inverse: non-constant gcd");
  for (auto& c : s0) c /= r0[0];
  return CyclotomicNumber(conductor_, std::move(s0));
}

CyclotomicNumber CyclotomicNumber::conjugate() const {
  const FieldData& f = field(conductor_);
  std::vector<Rational> out(coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const auto& img = f.powers[static_cast<std::size_t>((f.m - static_cast<int>(i)) % f.m)];
    for (std::size_t j = 0; j < img.size(); ++j) {
      if (img[j] != 0) out[j] += coeffs_[i] * img[j];
    }
  }
  CyclotomicNumber res(conductor_);
  res.coeffs_ = std::move(out);
  return res;
}

std::complex<double> CyclotomicNumber::to_complex() const {
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / conductor_;
    acc += coeffs_[i].get_d() * std::polar(1.0, angle);
  }
  return acc;
}

CyclotomicNumber CyclotomicNumber::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  CyclotomicNumber result(conductor_, Rational(1));
  CyclotomicNumber base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

int compare(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.conductor_ != b.conductor_) return a.conductor_ < b.conductor_ ? -1 : 1;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    const int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::string CyclotomicNumber::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    Rational c = coeffs_[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    c = abs(c);
    if (i == 0) {
      os << rational_to_string(c);
    } else {
      if (c != 1) os << rational_to_string(c) << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return first ? "0" : os.str();
}

CyclotomicNumber root_of_unity(int m, long k) {
  const FieldData& f = field(m);
  long r = k % m;
  if (r < 0) r += m;
  return CyclotomicNumber(m, f.powers[static_cast<std::size_t>(r)]);
}

CyclotomicNumber add(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a + b; }
CyclotomicNumber subtract(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a - b; }
CyclotomicNumber multiply(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a * b; }
CyclotomicNumber invert(const CyclotomicNumber& a) { return a.inverse(); }
CyclotomicNumber conjugate(const CyclotomicNumber& a) { return a.conjugate(); }
std::complex<double> to_complex(const CyclotomicNumber& a) { return a.to_complex(); }

std::string rational_to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: '" + text + "'");
  if (r.get_den() == 0) throw DivisionByZero("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// CyclotomicMatrix

CyclotomicMatrix::CyclotomicMatrix(int rows, int cols, int conductor)
    : rows_(rows), cols_(cols), conductor_(conductor),
      data_(static_cast<std::size_t>(rows * cols), CyclotomicNumber(conductor)) {}

CyclotomicMatrix CyclotomicMatrix::identity(int dim, int conductor) {
  CyclotomicMatrix m(dim, dim, conductor);
  for (int i = 0; i < dim; ++i) m(i, i) = CyclotomicNumber(conductor, Rational(1));
  return m;
}

CyclotomicMatrix CyclotomicMatrix::adjoint() const {
  CyclotomicMatrix out(cols_, rows_, conductor_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c).conjugate();
  return out;
}

CyclotomicMatrix CyclotomicMatrix::scaled(const CyclotomicNumber& s) const {
  CyclotomicMatrix out = *this;
  for (auto& v : out.data_) v *= s;
  return out;
}

CyclotomicMatrix operator*(const CyclotomicMatrix& a, const CyclotomicMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product: inner dimensions differ");
  if (a.conductor_ != b.conductor_) throw ConductorMismatch("matrix product: conductor mismatch");
  CyclotomicMatrix out(a.rows_, b.cols_, a.conductor_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const CyclotomicNumber& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        if (b(k, j).is_zero()) continue;
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

CyclotomicMatrix operator+(const CyclotomicMatrix& a, const CyclotomicMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum: shape mismatch");
  CyclotomicMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

CyclotomicMatrix operator-(const CyclotomicMatrix& a, const CyclotomicMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference: shape mismatch");
  CyclotomicMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

bool operator==(const CyclotomicMatrix& a, const CyclotomicMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<std::vector<std::complex<double>>> CyclotomicMatrix::to_complex() const {
  std::vector<std::vector<std::complex<double>>> out(static_cast<std::size_t>(rows_),
                                                     std::vector<std::complex<double>>(static_cast<std::size_t>(cols_)));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = (*this)(r, c).to_complex();
  return out;
}

}  // namespace cliffq
