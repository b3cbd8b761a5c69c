#include "cliffq/weylqm.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cliffq/cliffalg.hpp"

namespace cliffq {

namespace {

CyclotomicMatrix diag_q(int n) {
  CyclotomicMatrix q(n, n, session_conductor(n));
  for (int k = 0; k < n; ++k) q(k, k) = CyclotomicNumber(session_conductor(n), Rational(k));
  return q;
}

// X ↦ S†XS = F†XF/n.
CyclotomicMatrix conjugate_by_s(const CyclotomicMatrix& X, const CyclotomicMatrix& F, int n) {
  return (F.adjoint() * X * F).scaled(CyclotomicNumber(session_conductor(n), Rational(1, n)));
}

// diag(ζ_2n^{e_k}) for integer exponents e_k.
CyclotomicMatrix diag_roots(int n, const std::vector<long>& exps) {
  const int cond = session_conductor(n);
  CyclotomicMatrix d(n, n, cond);
  for (int k = 0; k < n; ++k) d(k, k) = root_of_unity(cond, exps[static_cast<std::size_t>(k)]);
  return d;
}

bool is_identity(const CyclotomicMatrix& m) { return m == CyclotomicMatrix::identity(m.rows(), m.conductor()); }

}  // namespace

CyclotomicMatrix sylvester_unnormalized(int n) {
  if (n < 1) throw std::invalid_argument("sylvester: n must be positive");
  CyclotomicMatrix f(n, n, session_conductor(n));
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) f(k, l) = omega_power(n, static_cast<long>(k) * l);
  return f;
}

ComplexMatrix sylvester_float(int n) {
  ComplexMatrix s(n, n);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) s(k, l) = norm * std::polar(1.0, 2.0 * std::numbers::pi * ((k * l) % n) / n);
  return s;
}

CyclotomicMatrix p_formula(int n) {
  if (n < 2) throw std::invalid_argument("p_formula: n must be at least 2");
  const int cond = session_conductor(n);
  CyclotomicMatrix p(n, n, cond);
  const CyclotomicNumber one(cond, 1);
  for (int a = 0; a < n; ++a)
    for (int k = 0; k < n; ++k) {
      if (a == k) continue;
      // ω̄^{α−κ} = ω^{κ−α}
      p(a, k) = (omega_power(n, k - a) - one).inverse();
    }
  return p;
}

CyclotomicMatrix p_conjugated(int n) {
  if (n < 2) throw std::invalid_argument("p_conjugated: n must be at least 2");
  return conjugate_by_s(diag_q(n), sylvester_unnormalized(n), n);
}

WeylSystem weyl_system(int n) { return {n, diag_q(n), sylvester_unnormalized(n), p_formula(n), p_conjugated(n)}; }

WeylReport verify_weyl_pair(int n) {
  if (n < 2) throw std::invalid_argument("verify_weyl_pair: n must be at least 2");
  const int cond = session_conductor(n);
  const WeylSystem w = weyl_system(n);
  const CyclotomicMatrix clk = clock(n).to_exact();
  const CyclotomicMatrix sh = shift(n).to_exact();
  const CyclotomicNumber inv_n(cond, Rational(1, n));
  WeylReport r;
  r.n = n;

  r.unitary = is_identity((w.F.adjoint() * w.F).scaled(inv_n)) && is_identity((w.F * w.F.adjoint()).scaled(inv_n));

  // (i) ω^Q from the diagonal of Q.
  std::vector<long> q_exps;
  for (int k = 0; k < n; ++k) q_exps.push_back(2L * k);  // ω^k = ζ_2n^{2k}
  r.omega_Q_is_clock = diag_roots(n, q_exps) == clk;

  // (ii) the exponent-free form of σ₁ = ω^P.
  r.conj_clock_is_shift = conjugate_by_s(clk, w.F, n) == sh;

  // Diagonal and off-diagonal comparison of the two P matrices.
  r.offdiag_match = true;
  r.diagonal_constant = true;
  r.diagonal_discrepancy = Rational(n - 1, 2);
  r.diagonal_discrepancy.canonicalize();
  const CyclotomicNumber half_defect(cond, r.diagonal_discrepancy);
  for (int a = 0; a < n; ++a)
    for (int k = 0; k < n; ++k) {
      if (a == k) {
        r.diagonal_constant = r.diagonal_constant && w.P_conj(a, a) == half_defect && w.P_formula(a, a).is_zero();
      } else {
        r.offdiag_match = r.offdiag_match && w.P_conj(a, k) == w.P_formula(a, k);
      }
    }

  // (iii) exp((2πi/n)P) through the eigenbasis S: S†·diag(e^{2πik/n})·S.
  const ComplexMatrix S = sylvester_float(n);
  ComplexMatrix P(n, n);
  const auto pc = w.P_conj.to_complex();
  for (int a = 0; a < n; ++a)
    for (int k = 0; k < n; ++k) P(a, k) = pc[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)];
  ComplexMatrix eig = ComplexMatrix::Zero(n, n);
  ComplexMatrix expd = ComplexMatrix::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    eig(k, k) = static_cast<double>(k);
    expd(k, k) = std::polar(1.0, 2.0 * std::numbers::pi * k / n);
  }
  // The eigenbasis claim itself is checked, so the result is not circular.
  const double eigen_residual = (S.adjoint() * eig * S - P).cwiseAbs().maxCoeff();
  const ComplexMatrix expP = S.adjoint() * expd * S;
  r.exp_residual = std::max(eigen_residual, (expP - shift(n).to_dense()).cwiseAbs().maxCoeff());

  // (iv) ω^{P_formula} = S†·ω^{Q − (n−1)/2}·S, exact since ω^{1/2} = ζ_2n.
  std::vector<long> shifted_exps;
  for (int k = 0; k < n; ++k) shifted_exps.push_back(2L * k - (n - 1));
  const CyclotomicMatrix omega_pf = conjugate_by_s(diag_roots(n, shifted_exps), w.F, n);
  // Confirm P_formula = S†(Q − (n−1)/2)S before trusting that spectral form.
  CyclotomicMatrix q_shift = w.Q;
  for (int k = 0; k < n; ++k) q_shift(k, k) -= half_defect;
  if (conjugate_by_s(q_shift, w.F, n) == w.P_formula) {
    for (int e = 0; e < cond; ++e) {
      if (omega_pf == sh.scaled(root_of_unity(cond, e))) {
        r.formula_phase_exponent = e;
        r.formula_phase = std::polar(1.0, std::numbers::pi * e / n);
        break;
      }
    }
  }

  // S†·shift·S against scalar multiples of clock powers.
  const CyclotomicMatrix conj_shift = conjugate_by_s(sh, w.F, n);
  CyclotomicMatrix power = CyclotomicMatrix::identity(n, cond);
  for (int e = 0; e < n && !r.shift_conj_clock_exponent; ++e) {
    for (int c = 0; c < cond; ++c) {
      if (conj_shift == power.scaled(root_of_unity(cond, c))) {
        r.shift_conj_clock_exponent = e;
        break;
      }
    }
    power = power * clk;
  }

  r.uv_exchange = clk * sh == (sh * clk).scaled(omega_power(n, 1));
  return r;
}

}  // namespace cliffq
