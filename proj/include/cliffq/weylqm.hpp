#pragma once

#include <complex>
#include <optional>

#include "cliffq/cyclotomic.hpp"
#include "cliffq/qsu2.hpp"

namespace cliffq {

/// Exact pieces of the finite Weyl pair over Q(ζ_2n). S = F/√n is never
/// formed: F = (ω^{kl}) is stored and every S-pair contributes 1/n.
struct WeylSystem {
  int n = 0;
  CyclotomicMatrix Q;         // diag(0, ..., n−1)
  CyclotomicMatrix F;         // √n · S
  CyclotomicMatrix P_formula; // printed entry table, zero diagonal
  CyclotomicMatrix P_conj;    // S†QS = F†QF/n
};

/// F = (ω^{kl}) over Q(ζ_2n).
CyclotomicMatrix sylvester_unnormalized(int n);
/// S itself, in floats.
ComplexMatrix sylvester_float(int n);

/// Off-diagonal [ω̄^{α−κ} − 1]⁻¹, zero diagonal.
CyclotomicMatrix p_formula(int n);
/// S†QS.
CyclotomicMatrix p_conjugated(int n);

WeylSystem weyl_system(int n);

struct WeylReport {
  int n = 0;
  bool unitary = false;              // S†S = SS† = I
  bool omega_Q_is_clock = false;     // (i)
  bool conj_clock_is_shift = false;  // (ii) S†·clock·S = shift
  double exp_residual = 0.0;         // (iii) ‖exp((2πi/n)P_conj) − shift‖
  bool offdiag_match = false;        // P_conj and P_formula agree off the diagonal
  bool diagonal_constant = false;    // P_conj diagonal ≡ (n−1)/2
  Rational diagonal_discrepancy;     // P_conj − P_formula = this · I
  // (iv) ω^{P_formula} = ζ_2n^k · shift: k, and the phase as a complex number.
  std::optional<int> formula_phase_exponent;
  std::complex<double> formula_phase{0.0, 0.0};
  // S†·shift·S = c·clock^e: e, or nullopt when no such form exists.
  std::optional<int> shift_conj_clock_exponent;
  bool uv_exchange = false;          // clock·shift = ω·shift·clock
};

WeylReport verify_weyl_pair(int n);

}  // namespace cliffq
