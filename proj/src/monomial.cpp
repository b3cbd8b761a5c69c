#include "cliffq/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cliffq/errors.hpp"

namespace cliffq {

// ---------------------------------------------------------------------------
// LocalMonomial

LocalMonomial::LocalMonomial(std::vector<int> perm, std::vector<CyclotomicNumber> phases)
    : perm_(std::move(perm)), phases_(std::move(phases)) {
  const std::size_t d = perm_.size();
  if (d == 0) throw std::invalid_argument("LocalMonomial: dimension must be positive");
  if (phases_.size() != d) throw DimensionMismatch("LocalMonomial: perm/phase length mismatch");
  std::vector<char> seen(d, 0);
  for (int p : perm_) {
    if (p < 0 || static_cast<std::size_t>(p) >= d || seen[static_cast<std::size_t>(p)]) {
      throw std::invalid_argument("LocalMonomial: not a permutation");
    }
    seen[static_cast<std::size_t>(p)] = 1;
  }
  const int m = phases_.front().conductor();
  for (const auto& s : phases_) {
    if (s.conductor() != m) throw ConductorMismatch("LocalMonomial: mixed conductors");
    if (s.is_zero()) throw std::invalid_argument("LocalMonomial: zero phase");
  }
}

LocalMonomial LocalMonomial::identity(int dim, int conductor) {
  std::vector<int> perm(static_cast<std::size_t>(dim));
  std::iota(perm.begin(), perm.end(), 0);
  return LocalMonomial(std::move(perm),
                       std::vector<CyclotomicNumber>(static_cast<std::size_t>(dim), CyclotomicNumber(conductor, 1)));
}

LocalMonomial LocalMonomial::diagonal(std::vector<CyclotomicNumber> phases) {
  std::vector<int> perm(phases.size());
  std::iota(perm.begin(), perm.end(), 0);
  return LocalMonomial(std::move(perm), std::move(phases));
}

LocalMonomial LocalMonomial::permutation(std::vector<int> perm, int conductor) {
  const std::size_t d = perm.size();
  return LocalMonomial(std::move(perm), std::vector<CyclotomicNumber>(d, CyclotomicNumber(conductor, 1)));
}

bool LocalMonomial::is_identity() const {
  const CyclotomicNumber one(conductor(), 1);
  for (std::size_t j = 0; j < perm_.size(); ++j) {
    if (perm_[j] != static_cast<int>(j) || phases_[j] != one) return false;
  }
  return true;
}

bool LocalMonomial::is_scalar() const {
  for (std::size_t j = 0; j < perm_.size(); ++j) {
    if (perm_[j] != static_cast<int>(j) || phases_[j] != phases_[0]) return false;
  }
  return true;
}

LocalMonomial LocalMonomial::inverse() const {
  std::vector<int> perm(perm_.size());
  std::vector<CyclotomicNumber> phases(perm_.size());
  for (std::size_t j = 0; j < perm_.size(); ++j) {
    const auto pj = static_cast<std::size_t>(perm_[j]);
    perm[pj] = static_cast<int>(j);
    phases[pj] = phases_[j].inverse();
  }
  return LocalMonomial(std::move(perm), std::move(phases));
}

LocalMonomial LocalMonomial::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  LocalMonomial result = identity(dim(), conductor());
  for (int i = 0; i < k; ++i) result = mono_compose(result, *this);
  return result;
}

LocalMonomial LocalMonomial::scaled(const CyclotomicNumber& s) const {
  LocalMonomial out = *this;
  for (auto& p : out.phases_) p *= s;
  return out;
}

DenseMatrix LocalMonomial::to_dense() const {
  DenseMatrix m = DenseMatrix::Zero(dim(), dim());
  for (int j = 0; j < dim(); ++j) m(perm_[static_cast<std::size_t>(j)], j) = phases_[static_cast<std::size_t>(j)].to_complex();
  return m;
}

CyclotomicMatrix LocalMonomial::to_exact() const {
  CyclotomicMatrix m(dim(), dim(), conductor());
  for (int j = 0; j < dim(); ++j) m(perm_[static_cast<std::size_t>(j)], j) = phases_[static_cast<std::size_t>(j)];
  return m;
}

int compare(const LocalMonomial& a, const LocalMonomial& b) {
  if (a.perm_ != b.perm_) return a.perm_ < b.perm_ ? -1 : 1;
  for (std::size_t j = 0; j < a.phases_.size(); ++j) {
    if (const int c = compare(a.phases_[j], b.phases_[j]); c != 0) return c;
  }
  return 0;
}

LocalMonomial mono_compose(const LocalMonomial& a, const LocalMonomial& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("mono_compose: dimensions " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
  }
  const std::size_t d = static_cast<std::size_t>(a.dim());
  std::vector<int> perm(d);
  std::vector<CyclotomicNumber> phases(d);
  for (std::size_t j = 0; j < d; ++j) {
    const auto mid = static_cast<std::size_t>(b.perm()[j]);
    perm[j] = a.perm()[mid];
    phases[j] = a.phases()[mid] * b.phases()[j];
  }
  return LocalMonomial(std::move(perm), std::move(phases));
}

LocalMonomial mono_kron(const LocalMonomial& a, const LocalMonomial& b) {
  const int da = a.dim();
  const int db = b.dim();
  std::vector<int> perm(static_cast<std::size_t>(da * db));
  std::vector<CyclotomicNumber> phases(static_cast<std::size_t>(da * db));
  for (int j = 0; j < da; ++j) {
    for (int l = 0; l < db; ++l) {
      const auto col = static_cast<std::size_t>(j * db + l);
      perm[col] = a.perm()[static_cast<std::size_t>(j)] * db + b.perm()[static_cast<std::size_t>(l)];
      phases[col] = a.phases()[static_cast<std::size_t>(j)] * b.phases()[static_cast<std::size_t>(l)];
    }
  }
  return LocalMonomial(std::move(perm), std::move(phases));
}

// ---------------------------------------------------------------------------
// SlotOperator

int compare_factors(const SlotFactors& a, const SlotFactors& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib) {
    if (ia->second.perm() != ib->second.perm()) return ia->second.perm() < ib->second.perm() ? -1 : 1;
  }
  for (ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib) {
    if (const int c = compare(ia->second, ib->second); c != 0) return c;
  }
  return 0;
}

SlotOperator::SlotOperator(int dim, CyclotomicNumber scalar, SlotFactors factors)
    : dim_(dim), scalar_(std::move(scalar)), factors_(std::move(factors)) {
  if (dim_ < 1) throw std::invalid_argument("SlotOperator: dimension must be positive");
  for (const auto& [slot, f] : factors_) {
    if (slot < 0) throw std::invalid_argument("SlotOperator: negative slot index");
    if (f.dim() != dim_) throw DimensionMismatch("SlotOperator: factor dimension differs from base dimension");
    if (f.conductor() != scalar_.conductor()) throw ConductorMismatch("SlotOperator: factor conductor mismatch");
  }
  normalize();
}

void SlotOperator::normalize() {
  if (scalar_.is_zero()) {
    factors_.clear();
    return;
  }
  const CyclotomicNumber one(scalar_.conductor(), 1);
  for (auto it = factors_.begin(); it != factors_.end();) {
    const CyclotomicNumber lead = it->second.phases().front();
    if (lead != one) {
      scalar_ *= lead;
      it->second = it->second.scaled(lead.inverse());
    }
    if (it->second.is_identity()) {
      it = factors_.erase(it);
    } else {
      ++it;
    }
  }
}

SlotOperator SlotOperator::identity(int dim, int conductor) { return SlotOperator(dim, CyclotomicNumber(conductor, 1)); }

SlotOperator SlotOperator::local(int slot, const LocalMonomial& m) {
  return SlotOperator(m.dim(), CyclotomicNumber(m.conductor(), 1), SlotFactors{{slot, m}});
}

int SlotOperator::max_slot() const { return factors_.empty() ? -1 : factors_.rbegin()->first; }

std::vector<int> SlotOperator::support() const {
  std::vector<int> out;
  out.reserve(factors_.size());
  for (const auto& [slot, _] : factors_) out.push_back(slot);
  return out;
}

SlotOperator SlotOperator::shifted(int offset) const {
  SlotFactors moved;
  for (const auto& [slot, f] : factors_) moved.emplace(slot + offset, f);
  return SlotOperator(dim_, scalar_, std::move(moved));
}

SlotOperator SlotOperator::scaled(const CyclotomicNumber& s) const {
  SlotOperator out = *this;
  out.scalar_ *= s;
  out.normalize();
  return out;
}

SlotOperator SlotOperator::with_scalar(CyclotomicNumber s) const {
  SlotOperator out = *this;
  out.scalar_ = std::move(s);
  out.normalize();
  return out;
}

SlotOperator SlotOperator::inverse() const {
  SlotFactors inv;
  for (const auto& [slot, f] : factors_) inv.emplace(slot, f.inverse());
  return SlotOperator(dim_, scalar_.inverse(), std::move(inv));
}

SlotOperator SlotOperator::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  SlotOperator result = identity(dim_, conductor());
  for (int i = 0; i < k; ++i) result = slot_mul(result, *this);
  return result;
}

SlotOperator slot_mul(const SlotOperator& a, const SlotOperator& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("slot_mul: base dimensions " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
  }
  SlotFactors out = a.factors();
  for (const auto& [slot, f] : b.factors()) {
    auto it = out.find(slot);
    if (it == out.end()) {
      out.emplace(slot, f);
    } else {
      it->second = mono_compose(it->second, f);
    }
  }
  return SlotOperator(a.dim(), a.scalar() * b.scalar(), std::move(out));
}

// ---------------------------------------------------------------------------
// OperatorSum

OperatorSum::OperatorSum(int dim, int conductor) : dim_(dim), conductor_(conductor) {}

OperatorSum::OperatorSum(const SlotOperator& term) : dim_(term.dim()), conductor_(term.conductor()) {
  if (!term.is_zero()) terms_.push_back(term);
}

OperatorSum OperatorSum::from_terms(int dim, int conductor, std::vector<SlotOperator> terms) {
  OperatorSum out(dim, conductor);
  for (const auto& t : terms) {
    if (t.dim() != dim) throw DimensionMismatch("OperatorSum: term dimension mismatch");
    if (t.conductor() != conductor) throw ConductorMismatch("OperatorSum: term conductor mismatch");
  }
  out.terms_ = std::move(terms);
  out.canonicalize();
  return out;
}

OperatorSum OperatorSum::scalar(int dim, const CyclotomicNumber& c) {
  return OperatorSum(SlotOperator(dim, c));
}

void OperatorSum::check_compatible(const OperatorSum& o) const {
  if (dim_ != o.dim_) {
    throw DimensionMismatch("OperatorSum: base dimensions " + std::to_string(dim_) + " and " + std::to_string(o.dim_));
  }
  if (conductor_ != o.conductor_) throw ConductorMismatch("OperatorSum: conductor mismatch");
}

void OperatorSum::canonicalize() {
  std::stable_sort(terms_.begin(), terms_.end(), [](const SlotOperator& x, const SlotOperator& y) {
    return compare_factors(x.factors(), y.factors()) < 0;
  });
  std::vector<SlotOperator> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && compare_factors(merged.back().factors(), t.factors()) == 0) {
      merged.back() = merged.back().with_scalar(merged.back().scalar() + t.scalar());
      if (merged.back().is_zero()) merged.pop_back();
    } else if (!t.is_zero()) {
      merged.push_back(std::move(t));
    }
  }
  terms_ = std::move(merged);
}

std::vector<int> OperatorSum::support() const {
  std::vector<int> out;
  for (const auto& t : terms_) {
    for (int s : t.support()) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

OperatorSum& OperatorSum::operator+=(const OperatorSum& o) {
  check_compatible(o);
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  canonicalize();
  return *this;
}

OperatorSum& OperatorSum::operator-=(const OperatorSum& o) {
  check_compatible(o);
  for (const auto& t : o.terms_) terms_.push_back(t.with_scalar(-t.scalar()));
  canonicalize();
  return *this;
}

OperatorSum OperatorSum::operator-() const {
  OperatorSum out(dim_, conductor_);
  for (const auto& t : terms_) out.terms_.push_back(t.with_scalar(-t.scalar()));
  return out;
}

OperatorSum operator*(const OperatorSum& a, const OperatorSum& b) {
  a.check_compatible(b);
  std::vector<SlotOperator> prods;
  prods.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) prods.push_back(slot_mul(x, y));
  }
  return OperatorSum::from_terms(a.dim_, a.conductor_, std::move(prods));
}

OperatorSum OperatorSum::scaled(const CyclotomicNumber& s) const {
  std::vector<SlotOperator> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.scaled(s));
  return from_terms(dim_, conductor_, std::move(out));
}

OperatorSum OperatorSum::shifted(int offset) const {
  std::vector<SlotOperator> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.shifted(offset));
  return from_terms(dim_, conductor_, std::move(out));
}

OperatorSum sum_add(const OperatorSum& a, const OperatorSum& b) { return a + b; }
OperatorSum sum_sub(const OperatorSum& a, const OperatorSum& b) { return a - b; }
OperatorSum sum_mul(const OperatorSum& a, const OperatorSum& b) { return a * b; }
OperatorSum sum_scale(const OperatorSum& a, const CyclotomicNumber& s) { return a.scaled(s); }

OperatorSum commutator(const OperatorSum& a, const OperatorSum& b) { return a * b - b * a; }

// ---------------------------------------------------------------------------
// Float bridges

long tensor_dim(int dim, int slot_count) {
  long total = 1;
  for (int i = 0; i < slot_count; ++i) {
    total *= dim;
    if (total > kVectorSizeGuard * 16) return total;
  }
  return total;
}

namespace {

struct FloatFactor {
  std::vector<int> perm;
  std::vector<std::complex<double>> phases;
};

// Per-slot float factors for slots [0, slot_count), identity where absent.
std::vector<FloatFactor> float_factors(const SlotOperator& t, int slot_count) {
  std::vector<FloatFactor> out(static_cast<std::size_t>(slot_count));
  for (int s = 0; s < slot_count; ++s) {
    auto& f = out[static_cast<std::size_t>(s)];
    f.perm.resize(static_cast<std::size_t>(t.dim()));
    std::iota(f.perm.begin(), f.perm.end(), 0);
    f.phases.assign(static_cast<std::size_t>(t.dim()), {1.0, 0.0});
  }
  for (const auto& [slot, m] : t.factors()) {
    auto& f = out[static_cast<std::size_t>(slot)];
    f.perm = m.perm();
    for (std::size_t j = 0; j < m.phases().size(); ++j) f.phases[j] = m.phases()[j].to_complex();
  }
  return out;
}

void check_slots(int max_slot, int slot_count) {
  if (slot_count < 1) throw std::invalid_argument("slot_count must be positive");
  if (max_slot >= slot_count) {
    throw std::out_of_range("operator uses slot " + std::to_string(max_slot) + " beyond slot_count " +
                            std::to_string(slot_count));
  }
}

}  // namespace

DenseMatrix to_dense(const OperatorSum& a, int slot_count) {
  const long total = tensor_dim(a.dim(), slot_count);
  if (total > kDenseSizeGuard) throw std::length_error("to_dense: matrix dimension " + std::to_string(total) + " exceeds guard");
  DenseMatrix out = DenseMatrix::Zero(total, total);
  for (const auto& t : a.terms()) {
    check_slots(t.max_slot(), slot_count);
    const auto factors = float_factors(t, slot_count);
    const std::complex<double> scalar = t.scalar().to_complex();
    std::vector<int> digits(static_cast<std::size_t>(slot_count), 0);
    for (long col = 0; col < total; ++col) {
      long row = 0;
      std::complex<double> phase = scalar;
      for (int s = 0; s < slot_count; ++s) {
        const auto& f = factors[static_cast<std::size_t>(s)];
        const auto d = static_cast<std::size_t>(digits[static_cast<std::size_t>(s)]);
        row = row * a.dim() + f.perm[d];
        phase *= f.phases[d];
      }
      out(row, col) += phase;
      for (int s = slot_count - 1; s >= 0; --s) {
        if (++digits[static_cast<std::size_t>(s)] < a.dim()) break;
        digits[static_cast<std::size_t>(s)] = 0;
      }
    }
  }
  return out;
}

DenseMatrix to_dense(const SlotOperator& a, int slot_count) { return to_dense(OperatorSum(a), slot_count); }

std::vector<std::complex<double>> apply(const OperatorSum& a, int slot_count,
                                        std::span<const std::complex<double>> v) {
  const long total = tensor_dim(a.dim(), slot_count);
  if (total > kVectorSizeGuard) throw std::length_error("apply: state dimension exceeds guard");
  if (static_cast<long>(v.size()) != total) throw DimensionMismatch("apply: vector length mismatch");
  std::vector<std::complex<double>> out(static_cast<std::size_t>(total), {0.0, 0.0});
  for (const auto& t : a.terms()) {
    check_slots(t.max_slot(), slot_count);
    const auto factors = float_factors(t, slot_count);
    const std::complex<double> scalar = t.scalar().to_complex();
    std::vector<int> digits(static_cast<std::size_t>(slot_count), 0);
    for (long col = 0; col < total; ++col) {
      long row = 0;
      std::complex<double> phase = scalar;
      for (int s = 0; s < slot_count; ++s) {
        const auto& f = factors[static_cast<std::size_t>(s)];
        const auto d = static_cast<std::size_t>(digits[static_cast<std::size_t>(s)]);
        row = row * a.dim() + f.perm[d];
        phase *= f.phases[d];
      }
      out[static_cast<std::size_t>(row)] += phase * v[static_cast<std::size_t>(col)];
      for (int s = slot_count - 1; s >= 0; --s) {
        if (++digits[static_cast<std::size_t>(s)] < a.dim()) break;
        digits[static_cast<std::size_t>(s)] = 0;
      }
    }
  }
  return out;
}

}  // namespace cliffq
