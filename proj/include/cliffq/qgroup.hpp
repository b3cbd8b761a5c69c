#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cliffq/cliffalg.hpp"
#include "cliffq/monomial.hpp"
#include "cliffq/phaseword.hpp"

namespace cliffq {

/// 2×2 matrix with noncommuting operator entries.
struct QuantumMatrix {
  int n = 0;
  OperatorSum a, b, c, d;
  int q_exponent = 1;
  // Set when built from frame operators: the (x, y, X, Y) quadruple and the
  // frame copy the entries live on.
  std::optional<std::array<CyclotomicNumber, 4>> coeffs;
  std::optional<FrameQuadruple> frame;

  std::array<const OperatorSum*, 4> entries() const { return {&a, &b, &c, &d}; }
  std::vector<int> support() const;
};

/// Scalars in the session field Q(ζ_2n).
std::array<CyclotomicNumber, 4> to_session_scalars(int n, const std::array<Rational, 4>& coeffs);

/// a = xσ₁, b = yσ₂, c = XΣ₁, d = YΣ₂ on base slots 2·slot_offset .. 2·slot_offset+3.
/// slot_offset counts γ-slots and must be even (one frame copy spans four).
QuantumMatrix build_A(int n, const std::array<CyclotomicNumber, 4>& coeffs, int slot_offset = 0);
QuantumMatrix build_A(int n, const std::array<Rational, 4>& coeffs, int slot_offset = 0);

QuantumMatrix identity_matrix(int n);

enum class RelationStatus { Holds, Fails, HoldsWithPhase };
std::string to_string(RelationStatus s);

struct RelationOutcome {
  std::string id;
  RelationStatus status = RelationStatus::Holds;
  std::optional<OperatorSum> residual;
  std::optional<int> phase;  // r with lhs = ω^r·rhs, for HoldsWithPhase
};

struct RelationReport {
  int n = 0;
  int k = 1;
  std::optional<std::array<CyclotomicNumber, 4>> coeffs;
  std::vector<RelationOutcome> relations;

  bool all_hold() const;
  const RelationOutcome& at(const std::string& id) const;
};

/// Compares lhs against ω^k·rhs. When they differ but lhs = ω^r·rhs for another
/// r the outcome is HoldsWithPhase.
RelationOutcome check_relation(const std::string& id, const OperatorSum& lhs, const OperatorSum& rhs, int n, long k);

/// row_ab, row_cd, col_ac, col_bd, diag_bc, diag_ad at q = ω^k.
RelationReport verify_quantization(const QuantumMatrix& A, int k);
inline RelationReport verify_quantization(const QuantumMatrix& A) { return verify_quantization(A, A.q_exponent); }

/// ad − da − (ω − ω⁻¹)bc written as (xY − yX)·s·M.
struct ResidualFactor {
  CyclotomicNumber bound_defect;  // xY − yX
  CyclotomicNumber s;             // measured when the residual is nonzero, else the predicted 1 − ω⁻²
  SlotOperator M;                 // σ₁Σ₂ on the matrix's frame copy
  OperatorSum residual;
  bool factorization_holds = false;
};
ResidualFactor residual_factor(const QuantumMatrix& A);

struct QDetReport {
  OperatorSum det;      // ad − ω^k bc
  OperatorSum det_alt;  // da − ω^{−k} bc
  bool forms_agree = false;
  OperatorSum difference;
  bool central = false;  // [D, e] = 0 for every entry
  bool vacuous = false;  // centrality holds only because D = 0
};
QDetReport qdet(const QuantumMatrix& A);
/// ad − ω^k bc.
OperatorSum qdet_value(const QuantumMatrix& A, int k);

/// Entrywise product; the right factor's entries must live on slots disjoint
/// from the left's and commute with them.
QuantumMatrix matrix_product(const QuantumMatrix& A, const QuantumMatrix& B);
/// A^k with the same (noncommuting) entries; q_exponent becomes k·A.q_exponent.
QuantumMatrix matrix_power(const QuantumMatrix& A, int k);

/// det_{ω^det_exponent}(A^k) against (det_{ω^{A.k}} A)^k.
struct DetPowerCheck {
  int k = 0;
  int det_exponent = 0;
  OperatorSum lhs, rhs;
  bool holds = false;
};
DetPowerCheck det_power_identity(const QuantumMatrix& A, int k, int det_exponent);

bool entries_pairwise_commute(const QuantumMatrix& A);

/// ε = [[0, ζ_2n^{−k}], [−ζ_2n^k, 0]] over Q(ζ_2n), ζ_2n = √ω.
CyclotomicMatrix epsilon(int n, int k = 1);

/// AᵀεA and AεAᵀ against D_q·ε entrywise; relation ids "eps_squared",
/// "AtEA[i][j]" and "AEAt[i][j]". Transpose moves entries without reordering
/// operator factors.
RelationReport symplectic_check(const QuantumMatrix& A);

enum class PlaneVariant { SigmaPair, CapitalSigmaPair };

struct PlaneReport {
  OperatorSum x, y, x_new, y_new;
  bool plane_relation = false;       // xy = ω yx
  bool commutes_with_entries = false;
  OperatorSum closure_residual;      // x'y' − ω y'x'
  bool closes = false;
};

/// Coordinates (x, y) = (p·σ₁, r·σ₂) or (p·Σ₁, r·Σ₂) on the frame copy at
/// plane_offset γ-slots; x' = ax + by, y' = cx + dy.
PlaneReport plane_action(const QuantumMatrix& A, int plane_offset, PlaneVariant variant = PlaneVariant::SigmaPair,
                         const Rational& px = 1, const Rational& py = 1);

/// Maps a frame-algebra (one or two copies) polynomial into operators at
/// dimension n: copy c sits at frame slot offset 4·c, parameters take values.
OperatorSum evaluate_on_frames(const PhasePolynomial& p, int n, const std::vector<CyclotomicNumber>& param_values);

struct ResidualFinding {
  std::string id;
  std::string classification;  // vanishes_identically | vanishes_under_constraints | fails
  std::vector<std::string> constraints;  // minimal constraint sets, e.g. "xY = yX"
  std::vector<std::string> factors;      // bounds dividing the residual
  std::size_t term_count = 0;
  std::string residual;                  // pretty-printed over the tensor-pair algebra
};

struct InvestigationReport {
  // A″ = AA′ against the alternative system: off-diagonal relations + bc = cb + ad = ω²da.
  std::vector<ResidualFinding> alternative;
  // A″ against the standard system (all six relations) with both bounds imposed.
  std::vector<ResidualFinding> standard_with_bounds;
  bool bound_restored_closure = false;
  // Numeric witness: all coefficients 1 at witness_n, exact operators.
  int witness_n = 3;
  std::vector<std::pair<std::string, bool>> witness_zero;
  bool witness_agrees_with_symbolic = false;
  bool witness_oracle_agrees = false;  // dense-free float action on a random state
};

InvestigationReport alternative_diagonal_investigation(int witness_n = 3);

}  // namespace cliffq
