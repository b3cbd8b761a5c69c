#include "cliffq/cliffalg.hpp"

#include <stdexcept>

#include "cliffq/errors.hpp"

namespace cliffq {

CyclotomicNumber omega_power(int n, long k) { return root_of_unity(session_conductor(n), 2 * k); }

LocalMonomial clock(int n) {
  if (n < 1) throw std::invalid_argument("clock: n must be positive");
  std::vector<CyclotomicNumber> phases;
  phases.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) phases.push_back(omega_power(n, k));
  return LocalMonomial::diagonal(std::move(phases));
}

LocalMonomial shift(int n) {
  if (n < 1) throw std::invalid_argument("shift: n must be positive");
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) perm[static_cast<std::size_t>(j)] = (j + 1) % n;
  return LocalMonomial::permutation(std::move(perm), session_conductor(n));
}

namespace {

struct NamedMonomial {
  std::string name;
  LocalMonomial m;
};

// Rescale g by a 2n-th root of unity so that gⁿ = id; nullopt if gⁿ is not
// a scalar reachable that way.
std::optional<SlotOperator> normalize_order(const SlotOperator& g, int n) {
  const SlotOperator p = g.pow(n);
  if (!p.factors().empty()) return std::nullopt;
  const int cond = session_conductor(n);
  const CyclotomicNumber one(cond, 1);
  for (int k = 0; k < cond; ++k) {
    const CyclotomicNumber c = root_of_unity(cond, k);
    if (c.pow(n) * p.scalar() == one) return g.scaled(c);
  }
  return std::nullopt;
}

bool check_system(const std::vector<SlotOperator>& gens, int n) {
  const SlotOperator id = SlotOperator::identity(n, session_conductor(n));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!(gens[i].pow(n) == id)) return false;
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const auto r = omega_commute_exponent(gens[i], gens[j]);
      if (!r || *r != mod_n(1, n)) return false;
    }
  }
  return true;
}

}  // namespace

CliffordSystem clifford_generators(int n, int m) {
  if (n < 2) throw std::invalid_argument("clifford_generators: n must be at least 2");
  if (m != 2 && m != 4) throw std::invalid_argument("clifford_generators: only m = 2 or m = 4 supported");

  const LocalMonomial e = clock(n);
  const LocalMonomial f = shift(n);
  const std::vector<std::pair<NamedMonomial, NamedMonomial>> pairs = {
      {{"clock", e}, {"shift", f}},
      {{"shift", f}, {"clock", e}},
      {{"clock", e}, {"shift^-1", f.inverse()}},
      {{"shift^-1", f.inverse()}, {"clock", e}},
      {{"clock^-1", e.inverse()}, {"shift", f}},
      {{"shift", f}, {"clock^-1", e.inverse()}},
  };

  for (const auto& [A, B] : pairs) {
    const std::vector<NamedMonomial> twists = {
        {B.name + "*" + A.name + "^-1", mono_compose(B.m, A.m.inverse())},
        {A.name + "^-1*" + B.name, mono_compose(A.m.inverse(), B.m)},
        {A.name + "*" + B.name, mono_compose(A.m, B.m)},
        {B.name + "*" + A.name, mono_compose(B.m, A.m)},
    };
    std::vector<SlotOperator> base = {SlotOperator::local(0, A.m), SlotOperator::local(0, B.m)};
    if (m == 2) {
      if (check_system(base, n)) return {n, m, base, "gamma1=" + A.name + ", gamma2=" + B.name};
      continue;
    }
    for (const auto& c : twists) {
      std::vector<SlotOperator> gens = base;
      bool ok = true;
      for (const LocalMonomial& tail : {A.m, B.m}) {
        const SlotOperator raw(n, CyclotomicNumber(session_conductor(n), 1), SlotFactors{{0, c.m}, {1, tail}});
        auto g = normalize_order(raw, n);
        if (!g) {
          ok = false;
          break;
        }
        gens.push_back(*g);
      }
      if (ok && check_system(gens, n)) {
        return {n, m, gens,
                "gamma1=" + A.name + ", gamma2=" + B.name + ", gamma3=(" + c.name + ")(x)" + A.name +
                    ", gamma4=(" + c.name + ")(x)" + B.name};
      }
    }
  }
  throw ConstructionFailed("clifford_generators: no orientation satisfies the generator relations for n=" +
                           std::to_string(n));
}

FrameQuadruple FrameQuadruple::shifted(int slot_offset) const {
  return {n, sigma1.shifted(slot_offset), sigma2.shifted(slot_offset), Sigma1.shifted(slot_offset),
          Sigma2.shifted(slot_offset)};
}

FrameQuadruple frame_quadruple(int n) {
  const CliffordSystem cs = clifford_generators(n, 4);
  const auto& g = cs.generators;
  // Each γ occupies two base slots; the second tensor factor starts at slot 2.
  FrameQuadruple fq{n, g[0] * g[2].shifted(2), g[1] * g[2].shifted(2), g[0] * g[3].shifted(2),
                    g[1] * g[3].shifted(2)};

  const auto ops = fq.as_array();
  const SlotOperator id = SlotOperator::identity(n, session_conductor(n));
  for (std::size_t i = 0; i < 4; ++i) {
    if (!(ops[i].pow(n) == id)) throw ConstructionFailed("frame_quadruple: frame operator of wrong order");
    for (std::size_t j = 0; j < 4; ++j) {
      const auto r = omega_commute_exponent(ops[i], ops[j]);
      if (!r || *r != mod_n(kFrameTheta[i][j], n)) {
        throw ConstructionFailed("frame_quadruple: exponent matrix mismatch at n=" + std::to_string(n));
      }
    }
  }
  return fq;
}

std::optional<int> omega_commute_exponent(const SlotOperator& a, const SlotOperator& b) {
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("omega_commute_exponent: zero operator");
  if (a.dim() != b.dim()) throw DimensionMismatch("omega_commute_exponent: dimension mismatch");
  const SlotOperator ab = a * b;
  const SlotOperator ba = b * a;
  if (ab.factors() != ba.factors()) return std::nullopt;
  const int n = a.dim();
  const int cond = ab.conductor();
  if (cond % n != 0) throw ConductorMismatch("omega_commute_exponent: ω not in the scalar field");
  const CyclotomicNumber ratio = ab.scalar() * ba.scalar().inverse();
  for (int r = 0; r < n; ++r) {
    if (ratio == root_of_unity(cond, static_cast<long>(r) * (cond / n))) return r;
  }
  return std::nullopt;
}

std::vector<std::vector<std::optional<int>>> exponent_matrix(const std::vector<SlotOperator>& ops) {
  std::vector<std::vector<std::optional<int>>> out(ops.size(), std::vector<std::optional<int>>(ops.size()));
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t j = 0; j < ops.size(); ++j) out[i][j] = omega_commute_exponent(ops[i], ops[j]);
  return out;
}

}  // namespace cliffq
