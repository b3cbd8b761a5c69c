#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace cliffq {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense integer polynomial, low-to-high degree. The zero polynomial has no
/// coefficients; otherwise the leading coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);

  static IntPolynomial x_power_minus_one(int m);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  const Integer& operator[](std::size_t i) const { return coeffs_[i]; }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Exact division by a monic divisor; throws if the remainder is nonzero.
  IntPolynomial divexact(const IntPolynomial& monic_divisor) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

int euler_phi(int m);

/// Φ_m, obtained by dividing x^m − 1 by Φ_d for every proper divisor d of m.
/// Results are cached; safe to call from several threads.
const IntPolynomial& cyclotomic_polynomial(int m);

/// Element of Q(ζ_m) in the power basis 1, ζ, ..., ζ^(φ(m)−1).
///
/// Every constructor and operation reduces modulo Φ_m, so two values are equal
/// exactly when their conductors and coefficient vectors are equal.
class CyclotomicNumber {
 public:
  CyclotomicNumber() : CyclotomicNumber(1) {}
  explicit CyclotomicNumber(int conductor);
  CyclotomicNumber(int conductor, const Rational& value);
  // Accepts any number of coefficients of 1, ζ, ζ², ...; reduces mod Φ_m.
  CyclotomicNumber(int conductor, std::vector<Rational> power_coeffs);

  int conductor() const { return conductor_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  // Exponent k with value == ζ^k when the value is a root of unity of order
  // dividing m, otherwise -1.
  int root_of_unity_exponent() const;

  CyclotomicNumber inverse() const;
  CyclotomicNumber conjugate() const;
  std::complex<double> to_complex() const;

  CyclotomicNumber& operator+=(const CyclotomicNumber& o);
  CyclotomicNumber& operator-=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const Rational& r);

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const Rational& r) { return a *= r; }
  friend CyclotomicNumber operator*(const Rational& r, CyclotomicNumber a) { return a *= r; }
  CyclotomicNumber operator-() const;

  CyclotomicNumber pow(long k) const;

  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) { return !(a == b); }

  // Total order: conductor, then coefficients lexicographically.
  friend int compare(const CyclotomicNumber& a, const CyclotomicNumber& b);

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& a) {
    return os << a.to_string();
  }

 private:
  void check_same_field(const CyclotomicNumber& o) const;

  int conductor_;
  std::vector<Rational> coeffs_;
};

/// ζ_m^k reduced mod Φ_m (k may be negative).
CyclotomicNumber root_of_unity(int m, long k);

CyclotomicNumber add(const CyclotomicNumber& a, const CyclotomicNumber& b);
CyclotomicNumber subtract(const CyclotomicNumber& a, const CyclotomicNumber& b);
CyclotomicNumber multiply(const CyclotomicNumber& a, const CyclotomicNumber& b);
CyclotomicNumber invert(const CyclotomicNumber& a);
CyclotomicNumber conjugate(const CyclotomicNumber& a);
std::complex<double> to_complex(const CyclotomicNumber& a);

std::string rational_to_string(const Rational& r);
Rational parse_rational(const std::string& text);

/// Small dense matrix over Q(ζ_m).
class CyclotomicMatrix {
 public:
  CyclotomicMatrix(int rows, int cols, int conductor);

  static CyclotomicMatrix identity(int dim, int conductor);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int conductor() const { return conductor_; }

  CyclotomicNumber& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  const CyclotomicNumber& operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r * cols_ + c)];
  }

  CyclotomicMatrix adjoint() const;
  CyclotomicMatrix scaled(const CyclotomicNumber& s) const;

  friend CyclotomicMatrix operator*(const CyclotomicMatrix& a, const CyclotomicMatrix& b);
  friend CyclotomicMatrix operator+(const CyclotomicMatrix& a, const CyclotomicMatrix& b);
  friend CyclotomicMatrix operator-(const CyclotomicMatrix& a, const CyclotomicMatrix& b);
  friend bool operator==(const CyclotomicMatrix& a, const CyclotomicMatrix& b);

  std::vector<std::vector<std::complex<double>>> to_complex() const;

 private:
  int rows_;
  int cols_;
  int conductor_;
  std::vector<CyclotomicNumber> data_;
};

}  // namespace cliffq
