#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cliffq/cyclotomic.hpp"
#include "cliffq/monomial.hpp"

namespace cliffq {

/// All scalars of an order-n session live in Q(ζ_2n), so that √ω = ζ_2n is
/// available; ω itself is ζ_2n².
inline int session_conductor(int n) { return 2 * n; }

/// ω^k for ω = exp(2πi/n), embedded in Q(ζ_2n).
CyclotomicNumber omega_power(int n, long k);

/// diag(1, ω, ..., ω^(n−1)).
LocalMonomial clock(int n);
/// Cyclic shift e_j ↦ e_(j+1 mod n); clock·shift = ω·shift·clock.
LocalMonomial shift(int n);

/// Generators of C_m^(n) (m ∈ {2, 4}) as slot operators on slots 0..m/2−1,
/// satisfying γ_iγ_j = ωγ_jγ_i for i < j and γ_iⁿ = id. The relations are
/// checked exhaustively before returning.
struct CliffordSystem {
  int n = 0;
  int m = 0;
  std::vector<SlotOperator> generators;
  std::string orientation;  // which clock/shift arrangement passed the checks
};

CliffordSystem clifford_generators(int n, int m = 4);

/// σ₁ = γ₁⊗γ₃, σ₂ = γ₂⊗γ₃, Σ₁ = γ₁⊗γ₄, Σ₂ = γ₂⊗γ₄ on slots 0..3.
struct FrameQuadruple {
  int n = 0;
  SlotOperator sigma1;
  SlotOperator sigma2;
  SlotOperator Sigma1;
  SlotOperator Sigma2;

  std::array<SlotOperator, 4> as_array() const { return {sigma1, sigma2, Sigma1, Sigma2}; }
  FrameQuadruple shifted(int slot_offset) const;
};

FrameQuadruple frame_quadruple(int n);

/// Exponent matrix of the four frame operators in the order σ₁, σ₂, Σ₁, Σ₂:
/// row i, column j holds r with X_i X_j = ω^r X_j X_i.
inline constexpr std::array<std::array<int, 4>, 4> kFrameTheta{{
    {0, 1, 1, 2},
    {-1, 0, 0, 1},
    {-1, 0, 0, 1},
    {-2, -1, -1, 0},
}};

/// r in [0, n) with a·b = ω^r·(b·a), or nullopt when a·b and b·a are not
/// proportional by a power of ω. n is the base dimension of the operands.
std::optional<int> omega_commute_exponent(const SlotOperator& a, const SlotOperator& b);

/// Exponents for every ordered pair; entries are nullopt where no ω-power fits.
std::vector<std::vector<std::optional<int>>> exponent_matrix(const std::vector<SlotOperator>& ops);

inline int mod_n(long r, int n) {
  long v = r % n;
  return static_cast<int>(v < 0 ? v + n : v);
}

}  // namespace cliffq
