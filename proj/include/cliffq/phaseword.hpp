#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cliffq/cyclotomic.hpp"

namespace cliffq {

/// Generators g_0..g_{G−1} with g_i g_j = ω^{Θ_ij} g_j g_i, commuting formal
/// parameters, and either a modulus n (ω an n-th root of unity, g_iⁿ = 1) or
/// no modulus (ω transcendental, e.g. exp(2πiα) with α irrational).
class PhaseAlgebra {
 public:
  PhaseAlgebra(std::vector<std::vector<int>> theta, std::optional<int> modulus, std::vector<std::string> params,
               std::vector<std::string> generator_names = {});

  int generator_count() const { return static_cast<int>(theta_.size()); }
  int param_count() const { return static_cast<int>(params_.size()); }
  const std::vector<std::vector<int>>& theta() const { return theta_; }
  int theta(int i, int j) const { return theta_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  const std::optional<int>& modulus() const { return modulus_; }
  const std::vector<std::string>& params() const { return params_; }
  const std::vector<std::string>& generator_names() const { return names_; }

  int param_index(const std::string& name) const;  // -1 when absent
  int generator_index(const std::string& name) const;

  friend bool operator==(const PhaseAlgebra& a, const PhaseAlgebra& b) {
    return a.theta_ == b.theta_ && a.modulus_ == b.modulus_ && a.params_ == b.params_;
  }

 private:
  std::vector<std::vector<int>> theta_;
  std::optional<int> modulus_;
  std::vector<std::string> params_;
  std::vector<std::string> names_;
};

using PhaseAlgebraPtr = std::shared_ptr<const PhaseAlgebra>;

/// coeff · ω^omega_exp · Π params^param_exps · g_0^{e_0}···g_{G−1}^{e_{G−1}}.
/// Parameter exponents may be negative after substitute_bound.
struct PhaseTerm {
  Rational coeff;
  long omega_exp = 0;
  std::vector<int> params;
  std::vector<int> gen_exps;

  friend bool operator==(const PhaseTerm& a, const PhaseTerm& b) {
    return a.coeff == b.coeff && a.omega_exp == b.omega_exp && a.params == b.params && a.gen_exps == b.gen_exps;
  }
};

class PhasePolynomial {
 public:
  explicit PhasePolynomial(PhaseAlgebraPtr algebra);
  PhasePolynomial(PhaseAlgebraPtr algebra, std::vector<PhaseTerm> terms);

  static PhasePolynomial constant(PhaseAlgebraPtr algebra, const Rational& c);
  static PhasePolynomial omega(PhaseAlgebraPtr algebra, long k = 1);
  static PhasePolynomial param(PhaseAlgebraPtr algebra, const std::string& name, int power = 1);
  static PhasePolynomial generator(PhaseAlgebraPtr algebra, int index, int power = 1);

  const PhaseAlgebraPtr& algebra() const { return algebra_; }
  const std::vector<PhaseTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  PhasePolynomial& operator+=(const PhasePolynomial& o);
  PhasePolynomial& operator-=(const PhasePolynomial& o);
  friend PhasePolynomial operator+(PhasePolynomial a, const PhasePolynomial& b) { return a += b; }
  friend PhasePolynomial operator-(PhasePolynomial a, const PhasePolynomial& b) { return a -= b; }
  friend PhasePolynomial operator*(const PhasePolynomial& a, const PhasePolynomial& b);
  PhasePolynomial operator-() const;
  PhasePolynomial scaled(const Rational& r) const;
  PhasePolynomial pow(int k) const;

  friend bool operator==(const PhasePolynomial& a, const PhasePolynomial& b) {
    return *a.algebra_ == *b.algebra_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  void check_same_algebra(const PhasePolynomial& o) const;
  void canonicalize();

  PhaseAlgebraPtr algebra_;
  std::vector<PhaseTerm> terms_;
};

/// Bubble-sorts a word of generator indices into non-decreasing order, each
/// swap of an adjacent (j, i) with j > i contributing Θ_ji to the ω-exponent.
PhaseTerm normal_order(const std::vector<int>& word, const PhaseAlgebra& algebra);

bool is_zero(const PhasePolynomial& p);

/// Four frame generators σ₁, σ₂, Σ₁, Σ₂ with their exponent matrix and
/// parameters x, y, X, Y.
PhaseAlgebraPtr frame_theta(std::optional<int> modulus = std::nullopt);
/// Two mutually commuting copies of the frame (block-diagonal Θ), parameters
/// x, y, X, Y, x', y', X', Y'.
PhaseAlgebraPtr two_copy_theta(std::optional<int> modulus = std::nullopt);

/// The tensor-factor generators behind the frame: u1 = γ₁⊗I, u2 = γ₂⊗I,
/// v3 = I⊗γ₃, v4 = I⊗γ₄ per copy, with u1u2 = ωu2u1, v3v4 = ωv4v3 and all
/// other pairs commuting. Its monomials are linearly independent, so zero and
/// divisibility tests of frame expressions are decided here.
PhaseAlgebraPtr tensor_pair_algebra(int copies, std::optional<int> modulus = std::nullopt);

/// Ring homomorphism sending generator i to images[i]; parameters are matched
/// by name. Throws AlgebraMismatch if the images violate the source relations.
PhasePolynomial substitute_generators(const PhasePolynomial& p, const PhaseAlgebraPtr& target,
                                      const std::vector<PhasePolynomial>& images);

/// Frame (one or two copies) → tensor-pair algebra, σ₁ ↦ u1v3, σ₂ ↦ u2v3,
/// Σ₁ ↦ u1v4, Σ₂ ↦ u2v4.
PhasePolynomial frame_to_tensor_pair(const PhasePolynomial& p);

/// Parameter identity lead = trail, e.g. xY = yX. var is the eliminated
/// parameter: it occurs in lead with a higher exponent than in trail.
struct ParamBound {
  std::vector<int> lead;
  std::vector<int> trail;
  int var = -1;
};

/// Parses "xY = yX" (or "x*Y = y*X") against the algebra's parameter names.
/// The eliminated parameter defaults to the highest-index one that occurs
/// only on the left.
ParamBound parse_bound(const PhaseAlgebra& algebra, const std::string& text);

/// Eliminates var through var ↦ trail / (lead / var).
PhasePolynomial substitute_bound(const PhasePolynomial& p, const ParamBound& bound);

/// Quotient of p by (lead − trail) in the commutative parameter ring, or
/// nullopt when p is not divisible.
std::optional<PhasePolynomial> divide_by_bound(const PhasePolynomial& p, const ParamBound& bound);

}  // namespace cliffq
