#pragma once

#include <Eigen/Dense>

#include <complex>
#include <map>
#include <span>
#include <vector>

#include "cliffq/cyclotomic.hpp"

namespace cliffq {

using DenseMatrix = Eigen::MatrixXcd;

/// Generalized permutation matrix: M[perm[j], j] = phases[j], zero elsewhere.
/// Phases are nonzero.
class LocalMonomial {
 public:
  LocalMonomial(std::vector<int> perm, std::vector<CyclotomicNumber> phases);

  static LocalMonomial identity(int dim, int conductor);
  static LocalMonomial diagonal(std::vector<CyclotomicNumber> phases);
  static LocalMonomial permutation(std::vector<int> perm, int conductor);

  int dim() const { return static_cast<int>(perm_.size()); }
  int conductor() const { return phases_.front().conductor(); }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<CyclotomicNumber>& phases() const { return phases_; }

  bool is_identity() const;
  // c·I for some scalar c.
  bool is_scalar() const;

  LocalMonomial inverse() const;
  LocalMonomial pow(int k) const;
  LocalMonomial scaled(const CyclotomicNumber& s) const;

  DenseMatrix to_dense() const;
  CyclotomicMatrix to_exact() const;

  friend bool operator==(const LocalMonomial& a, const LocalMonomial& b) {
    return a.perm_ == b.perm_ && a.phases_ == b.phases_;
  }
  friend int compare(const LocalMonomial& a, const LocalMonomial& b);

 private:
  std::vector<int> perm_;
  std::vector<CyclotomicNumber> phases_;
};

/// Matrix product a·b.
LocalMonomial mono_compose(const LocalMonomial& a, const LocalMonomial& b);
/// Kronecker product a⊗b, row-major (a is the most significant index).
LocalMonomial mono_kron(const LocalMonomial& a, const LocalMonomial& b);

using SlotFactors = std::map<int, LocalMonomial>;

int compare_factors(const SlotFactors& a, const SlotFactors& b);

/// scalar × (⊗ over slots of the local factors), identity on every other slot
/// of an unbounded tensor product of dim-dimensional spaces.
///
/// Canonical form: every stored factor has phases[0] == 1 (the common phase is
/// absorbed into the scalar) and no stored factor is a multiple of the
/// identity. Proportional operators therefore share the same factor map.
class SlotOperator {
 public:
  SlotOperator(int dim, CyclotomicNumber scalar, SlotFactors factors = {});

  static SlotOperator identity(int dim, int conductor);
  static SlotOperator local(int slot, const LocalMonomial& m);

  int dim() const { return dim_; }
  int conductor() const { return scalar_.conductor(); }
  const CyclotomicNumber& scalar() const { return scalar_; }
  const SlotFactors& factors() const { return factors_; }
  bool is_zero() const { return scalar_.is_zero(); }

  // Highest slot index with a stored factor, -1 for multiples of identity.
  int max_slot() const;
  std::vector<int> support() const;

  SlotOperator shifted(int offset) const;
  SlotOperator scaled(const CyclotomicNumber& s) const;
  SlotOperator with_scalar(CyclotomicNumber s) const;
  SlotOperator inverse() const;
  SlotOperator pow(int k) const;

  friend bool operator==(const SlotOperator& a, const SlotOperator& b) {
    return a.dim_ == b.dim_ && a.scalar_ == b.scalar_ && a.factors_ == b.factors_;
  }

 private:
  void normalize();

  int dim_;
  CyclotomicNumber scalar_;
  SlotFactors factors_;
};

SlotOperator slot_mul(const SlotOperator& a, const SlotOperator& b);
inline SlotOperator operator*(const SlotOperator& a, const SlotOperator& b) { return slot_mul(a, b); }

/// Formal linear combination of SlotOperators in canonical form: terms sorted
/// by compare_factors, no two terms with the same factors, no zero scalars.
class OperatorSum {
 public:
  OperatorSum(int dim, int conductor);
  explicit OperatorSum(const SlotOperator& term);

  static OperatorSum from_terms(int dim, int conductor, std::vector<SlotOperator> terms);
  static OperatorSum scalar(int dim, const CyclotomicNumber& c);

  int dim() const { return dim_; }
  int conductor() const { return conductor_; }
  const std::vector<SlotOperator>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::vector<int> support() const;

  OperatorSum& operator+=(const OperatorSum& o);
  OperatorSum& operator-=(const OperatorSum& o);
  friend OperatorSum operator+(OperatorSum a, const OperatorSum& b) { return a += b; }
  friend OperatorSum operator-(OperatorSum a, const OperatorSum& b) { return a -= b; }
  friend OperatorSum operator*(const OperatorSum& a, const OperatorSum& b);
  friend OperatorSum operator*(const CyclotomicNumber& s, const OperatorSum& a) { return a.scaled(s); }
  OperatorSum operator-() const;

  OperatorSum scaled(const CyclotomicNumber& s) const;
  OperatorSum shifted(int offset) const;

  friend bool operator==(const OperatorSum& a, const OperatorSum& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const OperatorSum& o) const;
  void canonicalize();

  int dim_;
  int conductor_;
  std::vector<SlotOperator> terms_;
};

OperatorSum sum_add(const OperatorSum& a, const OperatorSum& b);
OperatorSum sum_sub(const OperatorSum& a, const OperatorSum& b);
OperatorSum sum_mul(const OperatorSum& a, const OperatorSum& b);
OperatorSum sum_scale(const OperatorSum& a, const CyclotomicNumber& s);

/// Commutator ab − ba.
OperatorSum commutator(const OperatorSum& a, const OperatorSum& b);

/// Hard cap on the explicit matrix dimension produced by to_dense.
inline constexpr long kDenseSizeGuard = 10'000;

/// Explicit matrix on the first slot_count slots (slot 0 most significant).
DenseMatrix to_dense(const OperatorSum& a, int slot_count);
DenseMatrix to_dense(const SlotOperator& a, int slot_count);

/// Hard cap on the state-vector length accepted by apply.
inline constexpr long kVectorSizeGuard = 1'100'000;

/// Action of the operator on a state vector of the first slot_count slots,
/// computed term by term without forming any matrix.
std::vector<std::complex<double>> apply(const OperatorSum& a, int slot_count,
                                        std::span<const std::complex<double>> v);

long tensor_dim(int dim, int slot_count);

}  // namespace cliffq
