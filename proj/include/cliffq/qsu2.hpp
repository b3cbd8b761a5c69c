#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace cliffq {

/// Deformation parameter: a positive real q, or a unit-modulus q = e^{iθ}.
struct QParam {
  enum class Kind { Real, Phase };
  Kind kind = Kind::Real;
  double value = 1.0;  // q itself, or θ

  static QParam real(double q) { return {Kind::Real, q}; }
  static QParam phase(double theta) { return {Kind::Phase, theta}; }
  // ω_n = e^{2πi/n}
  static QParam root_of_unity(int n);

  std::complex<double> to_complex() const;
  std::string to_string() const;
};

/// "2", "1/2", "0.5", "phase:1/7" (θ = π/7) or "root:5" (ω₅).
QParam parse_qparam(const std::string& text);

/// [x]_q = (qˣ − q⁻ˣ)/(q − q⁻¹); x at q = 1, sin(xθ)/sin θ for q = e^{iθ}.
/// Throws std::domain_error for q ≤ 0.
double qnum(double x, const QParam& q);

using ComplexMatrix = Eigen::MatrixXcd;

/// Basis |j,m⟩ ordered by m descending: row 0 is m = +j, row 2j is m = −j.
struct AngularMomentumRep {
  int two_j = 0;
  QParam q;
  ComplexMatrix J3, Jplus, Jminus;
  // [j−m]_q[j+m+1]_q and [j+m]_q[j−m+1]_q indexed by row; exact integers at q = 1.
  std::vector<double> plus_squared, minus_squared;

  int dim() const { return two_j + 1; }
  double m_of(int row) const { return two_j / 2.0 - row; }
};

/// J₊ raises m with amplitude √([j−m][j+m+1]); J₋ lowers m with √([j+m][j−m+1]).
/// Principal-branch square roots when a product is negative.
AngularMomentumRep build_rep(int two_j, const QParam& q);

struct CommutatorResiduals {
  double j3_plus = 0;   // ‖[J₃,J₊] − J₊‖
  double j3_minus = 0;  // ‖[J₃,J₋] + J₋‖
  double plus_minus = 0;  // ‖[J₊,J₋] − [2J₃]_q‖
  double max() const;
};

/// Max-abs entry norms.
CommutatorResiduals verify_commutators(const AngularMomentumRep& rep);

struct PolarDecomposition {
  ComplexMatrix modulus_plus;   // √(J₊J₋)
  ComplexMatrix modulus_minus;  // √(J₋J₊)
  ComplexMatrix shift;          // σ₁
  std::string orientation;      // "shift" (|m⟩ ↦ |m−1⟩ cyclically) or "shift^-1"
  // J₊ = √(J₊J₋)σ₁⁻¹, J₊ = σ₁⁻¹√(J₋J₊), J₋ = σ₁√(J₊J₋), J₋ = √(J₋J₊)σ₁.
  std::array<double, 4> residuals{};
  // The J₋ identities with the factor order as printed alongside the J₊ ones:
  // J₋ = √(J₊J₋)σ₁ and J₋ = σ₁√(J₋J₊).
  std::array<double, 2> printed_minus_residuals{};
  bool degenerate = false;  // some [x]_q, 1 ≤ x ≤ 2j, vanishes
  double max_residual() const;
};

PolarDecomposition polar_decompose(const AngularMomentumRep& rep);

/// Cyclic shift e_i ↦ e_{i+1 mod n} as a dense matrix.
ComplexMatrix shift_matrix(int n);

}  // namespace cliffq
