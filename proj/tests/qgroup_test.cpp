#include "cliffq/qgroup.hpp"

#include <gtest/gtest.h>

#include <numbers>

#include "cliffq/errors.hpp"

using namespace cliffq;

namespace {

using Quad = std::array<Rational, 4>;

const std::vector<Quad> kBound = {{1, 2, 3, 6}, {2, 3, 4, 6}, {1, 1, 1, 1}};
const std::vector<Quad> kUnbound = {{1, 1, 1, 2}, {1, 2, 3, 5}};

double max_abs(const DenseMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

std::complex<double> w_float(int n, int k) { return std::polar(1.0, 2.0 * std::numbers::pi * k / n); }

// Dense oracle for the six relations, independent of the exact engine's
// products: entries are converted to matrices first.
std::vector<bool> oracle_relations(const QuantumMatrix& A, int k, int slots) {
  const DenseMatrix a = to_dense(A.a, slots), b = to_dense(A.b, slots), c = to_dense(A.c, slots),
                    d = to_dense(A.d, slots);
  const auto q = w_float(A.n, k);
  const auto tol = 1e-10;
  return {max_abs(a * b - q * b * a) < tol,
          max_abs(c * d - q * d * c) < tol,
          max_abs(a * c - q * c * a) < tol,
          max_abs(b * d - q * d * b) < tol,
          max_abs(b * c - c * b) < tol,
          max_abs(a * d - d * a - (q - 1.0 / q) * b * c) < tol};
}

std::vector<bool> exact_relations(const RelationReport& r) {
  std::vector<bool> out;
  for (const auto& o : r.relations) out.push_back(o.status == RelationStatus::Holds);
  return out;
}

}  // namespace

TEST(BuildA, BoundSatisfiedPassesAllSix) {
  const auto A = build_A(3, Quad{1, 2, 3, 6});
  const auto rep = verify_quantization(A, 1);
  EXPECT_TRUE(rep.all_hold());
  EXPECT_EQ(rep.relations.size(), 6u);
  // γ₁, γ₂ act on the first slot of their pair only, so slot 1 stays identity.
  EXPECT_EQ(A.support(), (std::vector<int>{0, 2, 3}));
  EXPECT_THROW(build_A(3, Quad{1, 2, 3, 6}, 1), std::invalid_argument);
  EXPECT_THROW(build_A(1, Quad{1, 2, 3, 6}), std::invalid_argument);
}

TEST(BuildA, BoundViolatedFailsOnlyDiagonal) {
  const int n = 3;
  const auto A = build_A(n, Quad{1, 1, 1, 2});
  const auto rep = verify_quantization(A, 1);
  for (const auto& r : rep.relations) {
    if (r.id == "diag_ad") {
      EXPECT_EQ(r.status, RelationStatus::Fails);
    } else {
      EXPECT_EQ(r.status, RelationStatus::Holds) << r.id;
    }
  }
  // residual = (xY − yX)(1 − ω⁻²)σ₁Σ₂ with xY − yX = 1.
  const auto& residual = *rep.at("diag_ad").residual;
  const auto fq = frame_quadruple(n);
  const CyclotomicNumber s = CyclotomicNumber(6, 1) - omega_power(n, -2);
  EXPECT_EQ(residual, OperatorSum((fq.sigma1 * fq.Sigma2).scaled(s)));

  const DenseMatrix oracle = (1.0 - w_float(n, -2)) * to_dense(fq.sigma1, 4) * to_dense(fq.Sigma2, 4);
  EXPECT_LT(max_abs(to_dense(residual, 4) - oracle), 1e-10);
}

TEST(BuildA, TwoCopiesCommute) {
  const auto A = build_A(3, Quad{1, 2, 3, 6}, 0);
  const auto B = build_A(3, Quad{2, 3, 4, 6}, 2);
  EXPECT_EQ(B.support(), (std::vector<int>{4, 6, 7}));
  int checked = 0;
  for (const auto* e : A.entries())
    for (const auto* f : B.entries()) {
      EXPECT_TRUE(commutator(*e, *f).is_zero());
      ++checked;
    }
  EXPECT_EQ(checked, 16);
}

TEST(VerifyQuantization, NTwoCollapse) {
  const auto A = build_A(2, Quad{1, 1, 1, 2});
  // ω − ω⁻¹ = 0 and ω² = 1, so the diagonal relation reads ad = da and holds for any coordinates.
  EXPECT_TRUE((omega_power(2, 1) - omega_power(2, -1)).is_zero());
  EXPECT_TRUE(verify_quantization(A, 1).all_hold());
}

TEST(VerifyQuantization, HoldsWithPhaseIsDetected) {
  const auto A = build_A(5, Quad{1, 2, 3, 6});
  // At k=2 the row relation ab = ω ba is off by one power of ω.
  const auto rep = verify_quantization(A, 2);
  EXPECT_EQ(rep.at("row_ab").status, RelationStatus::HoldsWithPhase);
  EXPECT_EQ(rep.at("row_ab").phase, 1);
}

TEST(Invariants, BoundQuadruplesAcrossN) {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& q : kBound) {
      const auto A = build_A(n, q);
      EXPECT_TRUE(verify_quantization(A, 1).all_hold()) << n;
      const auto det = qdet(A);
      EXPECT_TRUE(det.forms_agree);
      EXPECT_TRUE(det.det.is_zero()) << "D_q vanishes in this representation, n=" << n;
      EXPECT_TRUE(det.central);
      EXPECT_TRUE(det.vacuous);
      EXPECT_TRUE(symplectic_check(A).all_hold()) << n;
      EXPECT_TRUE(plane_action(A, 2).closes) << n;
    }
  }
}

TEST(Invariants, UnboundQuadruplesFailOnlyDiagonal) {
  for (int n = 3; n <= 6; ++n) {
    for (const auto& q : kUnbound) {
      const auto A = build_A(n, q);
      const auto rep = verify_quantization(A, 1);
      int failures = 0;
      for (const auto& r : rep.relations) failures += r.status != RelationStatus::Holds;
      EXPECT_EQ(failures, 1);
      EXPECT_EQ(rep.at("diag_ad").status, RelationStatus::Fails);

      const auto f = residual_factor(A);
      EXPECT_TRUE(f.factorization_holds) << n;
      EXPECT_EQ(f.bound_defect, CyclotomicNumber(2 * n, q[0] * q[3] - q[1] * q[2]));
      EXPECT_EQ(f.s, CyclotomicNumber(2 * n, 1) - omega_power(n, -2));
    }
  }
}

TEST(ResidualFactor, Examples) {
  const auto zero = residual_factor(build_A(3, Quad{1, 2, 3, 6}));
  EXPECT_TRUE(zero.bound_defect.is_zero());
  EXPECT_TRUE(zero.residual.is_zero());
  EXPECT_TRUE(zero.factorization_holds);

  const auto f = residual_factor(build_A(3, Quad{1, 1, 1, 2}));
  EXPECT_EQ(f.bound_defect, CyclotomicNumber(6, 1));
  const auto fq = frame_quadruple(3);
  EXPECT_EQ(f.M, fq.sigma1 * fq.Sigma2);
  EXPECT_THROW(residual_factor(matrix_power(build_A(3, Quad{1, 1, 1, 2}), 2)), std::invalid_argument);
}

TEST(QDet, UnboundFormsDisagreeByResidual) {
  const int n = 3;
  const auto A = build_A(n, Quad{1, 1, 1, 2});
  const auto det = qdet(A);
  EXPECT_FALSE(det.forms_agree);
  const auto fq = frame_quadruple(n);
  const CyclotomicNumber s = CyclotomicNumber(6, 1) - omega_power(n, -2);
  EXPECT_EQ(det.difference, OperatorSum((fq.sigma1 * fq.Sigma2).scaled(s)));
  // D_q = (xY − yX)σ₁Σ₂.
  EXPECT_EQ(det.det, OperatorSum(fq.sigma1 * fq.Sigma2));
  EXPECT_FALSE(det.vacuous);
}

TEST(Powers, LadderAndCyclicCollapse) {
  for (int n = 3; n <= 5; ++n) {
    const auto A = build_A(n, Quad{1, 2, 3, 6});
    for (int k = 1; k <= n; ++k) {
      const auto P = matrix_power(A, k);
      EXPECT_EQ(P.q_exponent, k);
      EXPECT_TRUE(verify_quantization(P).all_hold()) << "n=" << n << " k=" << k;
    }
    EXPECT_TRUE(entries_pairwise_commute(matrix_power(A, n))) << n;
    EXPECT_FALSE(entries_pairwise_commute(A));
  }
}

TEST(Powers, ProductOfDisjointCopies) {
  const auto A = build_A(3, Quad{1, 2, 3, 6}, 0);
  const auto B = build_A(3, Quad{2, 3, 4, 6}, 2);
  const auto AB = matrix_product(A, B);
  EXPECT_EQ(AB.q_exponent, 1);
  EXPECT_TRUE(verify_quantization(AB).all_hold());
  EXPECT_THROW(matrix_product(A, A), std::invalid_argument);
}

TEST(Powers, DeterminantIdentity) {
  for (int n = 3; n <= 5; ++n) {
    const auto A = build_A(n, Quad{1, 2, 3, 6});
    const auto c = det_power_identity(A, 2, 2);
    EXPECT_TRUE(c.holds);
    EXPECT_TRUE(c.lhs.is_zero());
    EXPECT_TRUE(c.rhs.is_zero());
  }
}

TEST(Symplectic, EpsilonSquared) {
  for (int n = 2; n <= 8; ++n) {
    const auto e = epsilon(n);
    EXPECT_EQ(e * e, CyclotomicMatrix::identity(2, 2 * n).scaled(CyclotomicNumber(2 * n, -1))) << n;
  }
}

TEST(Symplectic, UnboundResidualFollowsDiagonalRelation) {
  const auto A = build_A(3, Quad{1, 1, 1, 2});
  const auto rep = symplectic_check(A);
  EXPECT_FALSE(rep.all_hold());
  EXPECT_EQ(rep.at("eps_squared").status, RelationStatus::Holds);
  // The (0,1) entry reproduces ζ⁻¹D_q for any coordinates; (1,0) carries the
  // Diagonal residual scaled by −ζ.
  EXPECT_EQ(rep.at("AtEA[0][1]").status, RelationStatus::Holds);
  const auto diag = *verify_quantization(A, 1).at("diag_ad").residual;
  EXPECT_EQ(*rep.at("AtEA[1][0]").residual, diag.scaled(root_of_unity(6, 1)));
}

TEST(Plane, IdentityAndClosure) {
  const auto I = identity_matrix(3);
  const auto p = plane_action(I, 0);
  EXPECT_EQ(p.x_new, p.x);
  EXPECT_EQ(p.y_new, p.y);
  EXPECT_TRUE(p.plane_relation);
  EXPECT_TRUE(p.closes);

  for (int n = 3; n <= 4; ++n) {
    for (const auto v : {PlaneVariant::SigmaPair, PlaneVariant::CapitalSigmaPair}) {
      const auto good = plane_action(build_A(n, Quad{2, 3, 4, 6}), 2, v, 1, 2);
      EXPECT_TRUE(good.plane_relation);
      EXPECT_TRUE(good.commutes_with_entries);
      EXPECT_TRUE(good.closes);

      const auto A = build_A(n, Quad{1, 2, 3, 5});
      const auto bad = plane_action(A, 2, v);
      EXPECT_FALSE(bad.closes);
      // x'y' − ω y'x' = ω·R·y·x with R the diagonal residual ∝ (xY − yX).
      const auto R = *verify_quantization(A, 1).at("diag_ad").residual;
      EXPECT_EQ(bad.closure_residual, (R * bad.y * bad.x).scaled(omega_power(n, 1)));
    }
  }
  EXPECT_THROW(plane_action(build_A(3, Quad{1, 2, 3, 6}), 0), std::invalid_argument);
}

TEST(OracleCoherence, ExactVerdictsMatchDense) {
  for (int n = 2; n <= 4; ++n) {
    std::vector<Quad> quads = kBound;
    quads.insert(quads.end(), kUnbound.begin(), kUnbound.end());
    for (const auto& q : quads) {
      const auto A = build_A(n, q);
      EXPECT_EQ(exact_relations(verify_quantization(A, 1)), oracle_relations(A, 1, 4)) << n;
      const auto P = matrix_power(A, 2);
      EXPECT_EQ(exact_relations(verify_quantization(P, 2)), oracle_relations(P, 2, 4)) << n;
    }
  }
}

TEST(Investigation, ReportShape) {
  const auto rep = alternative_diagonal_investigation(3);
  ASSERT_EQ(rep.alternative.size(), 6u);
  ASSERT_EQ(rep.standard_with_bounds.size(), 6u);
  EXPECT_TRUE(rep.bound_restored_closure);
  EXPECT_TRUE(rep.witness_agrees_with_symbolic);
  EXPECT_TRUE(rep.witness_oracle_agrees);
  for (const auto& f : rep.alternative) {
    EXPECT_TRUE(f.classification == "vanishes_identically" || f.classification == "vanishes_under_constraints" ||
                f.classification == "fails");
    if (f.classification == "vanishes_identically") EXPECT_EQ(f.term_count, 0u);
  }
}
