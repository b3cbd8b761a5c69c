#include "cliffq/phaseword.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "cliffq/errors.hpp"

namespace cliffq {

namespace {

long floor_mod(long a, long n) {
  const long r = a % n;
  return r < 0 ? r + n : r;
}

std::vector<std::string> default_names(std::size_t g) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < g; ++i) out.push_back("g" + std::to_string(i));
  return out;
}

}  // namespace

PhaseAlgebra::PhaseAlgebra(std::vector<std::vector<int>> theta, std::optional<int> modulus,
                           std::vector<std::string> params, std::vector<std::string> generator_names)
    : theta_(std::move(theta)), modulus_(modulus), params_(std::move(params)), names_(std::move(generator_names)) {
  const std::size_t g = theta_.size();
  for (std::size_t i = 0; i < g; ++i) {
    if (theta_[i].size() != g) throw std::invalid_argument("PhaseAlgebra: theta must be square");
    if (theta_[i][i] != 0) throw std::invalid_argument("PhaseAlgebra: theta must have zero diagonal");
    for (std::size_t j = 0; j < i; ++j) {
      if (theta_[i][j] != -theta_[j][i]) throw std::invalid_argument("PhaseAlgebra: theta must be antisymmetric");
    }
  }
  if (modulus_ && *modulus_ < 1) throw std::invalid_argument("PhaseAlgebra: modulus must be positive");
  if (names_.empty()) names_ = default_names(g);
  if (names_.size() != g) throw std::invalid_argument("PhaseAlgebra: one name per generator required");
}

int PhaseAlgebra::param_index(const std::string& name) const {
  const auto it = std::find(params_.begin(), params_.end(), name);
  return it == params_.end() ? -1 : static_cast<int>(it - params_.begin());
}

int PhaseAlgebra::generator_index(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

PhaseTerm normal_order(const std::vector<int>& word, const PhaseAlgebra& algebra) {
  const int g = algebra.generator_count();
  std::vector<int> w = word;
  for (int i : w) {
    if (i < 0 || i >= g) throw std::out_of_range("normal_order: generator index out of range");
  }
  long phase = 0;
  // Plain bubble sort; each adjacent swap g_j g_i -> g_i g_j (j > i) costs ω^{Θ_ji}.
  for (std::size_t pass = 0; pass < w.size(); ++pass) {
    bool swapped = false;
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      if (w[p] > w[p + 1]) {
        phase += algebra.theta(w[p], w[p + 1]);
        std::swap(w[p], w[p + 1]);
        swapped = true;
      }
    }
    if (!swapped) break;
  }
  PhaseTerm t;
  t.coeff = 1;
  t.params.assign(static_cast<std::size_t>(algebra.param_count()), 0);
  t.gen_exps.assign(static_cast<std::size_t>(g), 0);
  for (int i : w) ++t.gen_exps[static_cast<std::size_t>(i)];
  if (const auto& n = algebra.modulus()) {
    phase = floor_mod(phase, *n);
    for (auto& e : t.gen_exps) e = static_cast<int>(floor_mod(e, *n));
  }
  t.omega_exp = phase;
  return t;
}

PhasePolynomial::PhasePolynomial(PhaseAlgebraPtr algebra) : algebra_(std::move(algebra)) {
  if (!algebra_) throw std::invalid_argument("PhasePolynomial: null algebra");
}

PhasePolynomial::PhasePolynomial(PhaseAlgebraPtr algebra, std::vector<PhaseTerm> terms)
    : PhasePolynomial(std::move(algebra)) {
  const auto g = static_cast<std::size_t>(algebra_->generator_count());
  const auto np = static_cast<std::size_t>(algebra_->param_count());
  for (auto& t : terms) {
    if (t.params.empty()) t.params.assign(np, 0);
    if (t.gen_exps.empty()) t.gen_exps.assign(g, 0);
    if (t.params.size() != np || t.gen_exps.size() != g) {
      throw AlgebraMismatch("PhasePolynomial: term shape does not match algebra");
    }
    if (std::any_of(t.gen_exps.begin(), t.gen_exps.end(), [](int e) { return e < 0; })) {
      throw std::invalid_argument("PhasePolynomial: generator exponents must be non-negative");
    }
  }
  terms_ = std::move(terms);
  canonicalize();
}

PhasePolynomial PhasePolynomial::constant(PhaseAlgebraPtr algebra, const Rational& c) {
  PhaseTerm t;
  t.coeff = c;
  return PhasePolynomial(std::move(algebra), {t});
}

PhasePolynomial PhasePolynomial::omega(PhaseAlgebraPtr algebra, long k) {
  PhaseTerm t;
  t.coeff = 1;
  t.omega_exp = k;
  return PhasePolynomial(std::move(algebra), {t});
}

PhasePolynomial PhasePolynomial::param(PhaseAlgebraPtr algebra, const std::string& name, int power) {
  const int idx = algebra->param_index(name);
  if (idx < 0) throw std::invalid_argument("PhasePolynomial::param: unknown parameter '" + name + "'");
  PhaseTerm t;
  t.coeff = 1;
  t.params.assign(static_cast<std::size_t>(algebra->param_count()), 0);
  t.params[static_cast<std::size_t>(idx)] = power;
  return PhasePolynomial(std::move(algebra), {t});
}

PhasePolynomial PhasePolynomial::generator(PhaseAlgebraPtr algebra, int index, int power) {
  if (index < 0 || index >= algebra->generator_count()) {
    throw std::out_of_range("PhasePolynomial::generator: index out of range");
  }
  if (power < 0) {
    if (!algebra->modulus()) throw std::invalid_argument("PhasePolynomial::generator: negative power needs a modulus");
    power = static_cast<int>(floor_mod(power, *algebra->modulus()));
  }
  PhaseTerm t;
  t.coeff = 1;
  t.gen_exps.assign(static_cast<std::size_t>(algebra->generator_count()), 0);
  t.gen_exps[static_cast<std::size_t>(index)] = power;
  return PhasePolynomial(std::move(algebra), {t});
}

void PhasePolynomial::check_same_algebra(const PhasePolynomial& o) const {
  if (algebra_ != o.algebra_ && !(*algebra_ == *o.algebra_)) {
    throw AlgebraMismatch("PhasePolynomial: operands belong to different algebras");
  }
}

void PhasePolynomial::canonicalize() {
  const auto& mod = algebra_->modulus();
  if (!mod) {
    std::map<std::tuple<std::vector<int>, std::vector<int>, long>, Rational> acc;
    for (const auto& t : terms_) acc[{t.gen_exps, t.params, t.omega_exp}] += t.coeff;
    terms_.clear();
    for (auto& [key, c] : acc) {
      if (c == 0) continue;
      terms_.push_back({c, std::get<2>(key), std::get<1>(key), std::get<0>(key)});
    }
    return;
  }
  // With ω a primitive n-th root, the coefficient of each monomial is an
  // element of Q(ζ_n); reducing mod Φ_n makes the form unique.
  const int n = *mod;
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<Rational>> acc;
  for (auto t : terms_) {
    for (auto& e : t.gen_exps) e = static_cast<int>(floor_mod(e, n));
    auto& v = acc[{t.gen_exps, t.params}];
    if (v.empty()) v.assign(static_cast<std::size_t>(n), Rational(0));
    v[static_cast<std::size_t>(floor_mod(t.omega_exp, n))] += t.coeff;
  }
  terms_.clear();
  for (auto& [key, v] : acc) {
    const CyclotomicNumber c(n, std::move(v));
    const auto& cf = c.coefficients();
    for (std::size_t k = 0; k < cf.size(); ++k) {
      if (cf[k] == 0) continue;
      terms_.push_back({cf[k], static_cast<long>(k), key.second, key.first});
    }
  }
}

PhasePolynomial& PhasePolynomial::operator+=(const PhasePolynomial& o) {
  check_same_algebra(o);
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  canonicalize();
  return *this;
}

PhasePolynomial& PhasePolynomial::operator-=(const PhasePolynomial& o) { return *this += -o; }

PhasePolynomial operator*(const PhasePolynomial& a, const PhasePolynomial& b) {
  a.check_same_algebra(b);
  const PhaseAlgebra& alg = *a.algebra_;
  const int g = alg.generator_count();
  std::vector<PhaseTerm> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      // g^e g^f = ω^{Σ_{j>i} e_j f_i Θ_ji} g^{e+f}
      long phase = s.omega_exp + t.omega_exp;
      for (int j = 0; j < g; ++j) {
        const int ej = s.gen_exps[static_cast<std::size_t>(j)];
        if (ej == 0) continue;
        for (int i = 0; i < j; ++i) phase += static_cast<long>(ej) * t.gen_exps[static_cast<std::size_t>(i)] * alg.theta(j, i);
      }
      PhaseTerm r;
      r.coeff = s.coeff * t.coeff;
      r.omega_exp = phase;
      r.params.resize(s.params.size());
      for (std::size_t k = 0; k < s.params.size(); ++k) r.params[k] = s.params[k] + t.params[k];
      r.gen_exps.resize(s.gen_exps.size());
      for (std::size_t k = 0; k < s.gen_exps.size(); ++k) r.gen_exps[k] = s.gen_exps[k] + t.gen_exps[k];
      out.push_back(std::move(r));
    }
  }
  PhasePolynomial p(a.algebra_);
  p.terms_ = std::move(out);
  p.canonicalize();
  return p;
}

PhasePolynomial PhasePolynomial::operator-() const { return scaled(Rational(-1)); }

PhasePolynomial PhasePolynomial::scaled(const Rational& r) const {
  PhasePolynomial p(*this);
  for (auto& t : p.terms_) t.coeff *= r;
  p.canonicalize();
  return p;
}

PhasePolynomial PhasePolynomial::pow(int k) const {
  if (k < 0) throw std::invalid_argument("PhasePolynomial::pow: negative exponent");
  PhasePolynomial result = constant(algebra_, 1);
  PhasePolynomial base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

std::string PhasePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  const auto& params = algebra_->params();
  const auto& names = algebra_->generator_names();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::vector<std::string> factors;
    if (t.omega_exp == 1) {
      factors.push_back("w");
    } else if (t.omega_exp != 0) {
      factors.push_back("w^" + std::to_string(t.omega_exp));
    }
    for (std::size_t i = 0; i < t.params.size(); ++i) {
      if (t.params[i] == 0) continue;
      factors.push_back(t.params[i] == 1 ? params[i] : params[i] + "^" + std::to_string(t.params[i]));
    }
    for (std::size_t i = 0; i < t.gen_exps.size(); ++i) {
      if (t.gen_exps[i] == 0) continue;
      factors.push_back(t.gen_exps[i] == 1 ? names[i] : names[i] + "^" + std::to_string(t.gen_exps[i]));
    }
    Rational c = t.coeff;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::string body;
    if (c != 1 || factors.empty()) body = rational_to_string(c);
    for (const auto& f : factors) body += (body.empty() ? "" : "*") + f;
    os << body;
  }
  return os.str();
}

bool is_zero(const PhasePolynomial& p) { return p.is_zero(); }

PhaseAlgebraPtr frame_theta(std::optional<int> modulus) {
  return std::make_shared<const PhaseAlgebra>(
      std::vector<std::vector<int>>{{0, 1, 1, 2}, {-1, 0, 0, 1}, {-1, 0, 0, 1}, {-2, -1, -1, 0}}, modulus,
      std::vector<std::string>{"x", "y", "X", "Y"}, std::vector<std::string>{"s1", "s2", "S1", "S2"});
}

PhaseAlgebraPtr two_copy_theta(std::optional<int> modulus) {
  const std::vector<std::vector<int>> block{{0, 1, 1, 2}, {-1, 0, 0, 1}, {-1, 0, 0, 1}, {-2, -1, -1, 0}};
  std::vector<std::vector<int>> theta(8, std::vector<int>(8, 0));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) theta[i][j] = theta[i + 4][j + 4] = block[i][j];
  return std::make_shared<const PhaseAlgebra>(
      std::move(theta), modulus, std::vector<std::string>{"x", "y", "X", "Y", "x'", "y'", "X'", "Y'"},
      std::vector<std::string>{"s1", "s2", "S1", "S2", "s1'", "s2'", "S1'", "S2'"});
}

PhaseAlgebraPtr tensor_pair_algebra(int copies, std::optional<int> modulus) {
  if (copies != 1 && copies != 2) throw std::invalid_argument("tensor_pair_algebra: copies must be 1 or 2");
  const std::size_t g = 4 * static_cast<std::size_t>(copies);
  std::vector<std::vector<int>> theta(g, std::vector<int>(g, 0));
  std::vector<std::string> names;
  std::vector<std::string> params{"x", "y", "X", "Y"};
  for (std::size_t c = 0; c < static_cast<std::size_t>(copies); ++c) {
    const std::size_t o = 4 * c;
    theta[o][o + 1] = 1;
    theta[o + 1][o] = -1;
    theta[o + 2][o + 3] = 1;
    theta[o + 3][o + 2] = -1;
    const std::string mark = c == 0 ? "" : "'";
    for (const char* s : {"u1", "u2", "v3", "v4"}) names.push_back(s + mark);
  }
  if (copies == 2) {
    for (const char* s : {"x'", "y'", "X'", "Y'"}) params.emplace_back(s);
  }
  return std::make_shared<const PhaseAlgebra>(std::move(theta), modulus, std::move(params), std::move(names));
}

PhasePolynomial substitute_generators(const PhasePolynomial& p, const PhaseAlgebraPtr& target,
                                      const std::vector<PhasePolynomial>& images) {
  const PhaseAlgebra& src = *p.algebra();
  const int g = src.generator_count();
  if (static_cast<int>(images.size()) != g) throw AlgebraMismatch("substitute_generators: one image per generator");
  for (const auto& im : images) {
    if (!(*im.algebra() == *target)) throw AlgebraMismatch("substitute_generators: image in a different algebra");
  }
  if (src.modulus() != target->modulus()) throw AlgebraMismatch("substitute_generators: modulus mismatch");

  // The map is well defined only if the images satisfy the source relations.
  for (int i = 0; i < g; ++i) {
    for (int j = i + 1; j < g; ++j) {
      const auto lhs = images[static_cast<std::size_t>(i)] * images[static_cast<std::size_t>(j)];
      const auto rhs = PhasePolynomial::omega(target, src.theta(i, j)) * images[static_cast<std::size_t>(j)] *
                       images[static_cast<std::size_t>(i)];
      if (!(lhs - rhs).is_zero()) {
        throw AlgebraMismatch("substitute_generators: images violate relation (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
      }
    }
    if (const auto& n = src.modulus()) {
      if (!(images[static_cast<std::size_t>(i)].pow(*n) == PhasePolynomial::constant(target, 1))) {
        throw AlgebraMismatch("substitute_generators: image of generator has wrong order");
      }
    }
  }

  std::vector<int> param_map;
  for (const auto& name : src.params()) {
    const int idx = target->param_index(name);
    if (idx < 0) throw AlgebraMismatch("substitute_generators: parameter '" + name + "' missing in target");
    param_map.push_back(idx);
  }

  PhasePolynomial out(target);
  for (const auto& t : p.terms()) {
    PhaseTerm head;
    head.coeff = t.coeff;
    head.omega_exp = t.omega_exp;
    head.params.assign(static_cast<std::size_t>(target->param_count()), 0);
    for (std::size_t k = 0; k < t.params.size(); ++k) head.params[static_cast<std::size_t>(param_map[k])] += t.params[k];
    PhasePolynomial acc(target, {head});
    for (int i = 0; i < g; ++i) {
      const int e = t.gen_exps[static_cast<std::size_t>(i)];
      if (e) acc = acc * images[static_cast<std::size_t>(i)].pow(e);
    }
    out += acc;
  }
  return out;
}

PhasePolynomial frame_to_tensor_pair(const PhasePolynomial& p) {
  const PhaseAlgebra& src = *p.algebra();
  int copies = 0;
  if (src == *frame_theta(src.modulus())) {
    copies = 1;
  } else if (src == *two_copy_theta(src.modulus())) {
    copies = 2;
  } else {
    throw AlgebraMismatch("frame_to_tensor_pair: source must be the frame or two-copy algebra");
  }
  const auto target = tensor_pair_algebra(copies, src.modulus());
  std::vector<PhasePolynomial> images;
  for (int c = 0; c < copies; ++c) {
    const int o = 4 * c;
    auto u1 = PhasePolynomial::generator(target, o);
    auto u2 = PhasePolynomial::generator(target, o + 1);
    auto v3 = PhasePolynomial::generator(target, o + 2);
    auto v4 = PhasePolynomial::generator(target, o + 3);
    images.push_back(u1 * v3);
    images.push_back(u2 * v3);
    images.push_back(u1 * v4);
    images.push_back(u2 * v4);
  }
  return substitute_generators(p, target, images);
}

namespace {

std::vector<int> parse_param_product(const PhaseAlgebra& algebra, const std::string& text) {
  std::vector<int> exps(static_cast<std::size_t>(algebra.param_count()), 0);
  std::size_t pos = 0;
  bool any = false;
  while (pos < text.size()) {
    const char ch = text[pos];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*') {
      ++pos;
      continue;
    }
    // Longest parameter name matching here (so x' wins over x).
    int best = -1;
    std::size_t best_len = 0;
    for (int i = 0; i < algebra.param_count(); ++i) {
      const auto& name = algebra.params()[static_cast<std::size_t>(i)];
      if (name.size() > best_len && text.compare(pos, name.size(), name) == 0) {
        best = i;
        best_len = name.size();
      }
    }
    if (best < 0) throw std::invalid_argument("parse_bound: unknown parameter at '" + text.substr(pos) + "'");
    pos += best_len;
    int power = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      std::size_t used = 0;
      try {
        power = std::stoi(text.substr(pos), &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("parse_bound: malformed exponent");
      }
      if (power < 1) throw std::invalid_argument("parse_bound: exponents must be positive");
      pos += used;
    }
    exps[static_cast<std::size_t>(best)] += power;
    any = true;
  }
  if (!any) throw std::invalid_argument("parse_bound: empty side");
  return exps;
}

}  // namespace

ParamBound parse_bound(const PhaseAlgebra& algebra, const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || text.find('=', eq + 1) != std::string::npos) {
    throw std::invalid_argument("parse_bound: expected exactly one '='");
  }
  ParamBound b;
  b.lead = parse_param_product(algebra, text.substr(0, eq));
  b.trail = parse_param_product(algebra, text.substr(eq + 1));
  for (int i = algebra.param_count() - 1; i >= 0; --i) {
    const auto k = static_cast<std::size_t>(i);
    if (b.lead[k] > 0 && b.trail[k] == 0) {
      b.var = i;
      break;
    }
  }
  if (b.var < 0) throw std::invalid_argument("parse_bound: no parameter to eliminate");
  return b;
}

namespace {

void check_bound(const PhasePolynomial& p, const ParamBound& bound) {
  const auto np = static_cast<std::size_t>(p.algebra()->param_count());
  if (bound.lead.size() != np || bound.trail.size() != np || bound.var < 0 ||
      bound.var >= static_cast<int>(np)) {
    throw std::invalid_argument("bound: malformed for this algebra");
  }
  const auto v = static_cast<std::size_t>(bound.var);
  if (bound.lead[v] != 1 || bound.trail[v] != 0) {
    throw std::invalid_argument("bound: eliminated parameter must occur once on the left only");
  }
}

}  // namespace

PhasePolynomial substitute_bound(const PhasePolynomial& p, const ParamBound& bound) {
  check_bound(p, bound);
  const auto v = static_cast<std::size_t>(bound.var);
  std::vector<PhaseTerm> out;
  for (auto t : p.terms()) {
    const int e = t.params[v];
    if (e != 0) {
      for (std::size_t k = 0; k < t.params.size(); ++k) {
        const int cofactor = k == v ? 0 : bound.lead[k];
        t.params[k] += e * (bound.trail[k] - cofactor);
      }
      t.params[v] = 0;
    }
    out.push_back(std::move(t));
  }
  return PhasePolynomial(p.algebra(), std::move(out));
}

std::optional<PhasePolynomial> divide_by_bound(const PhasePolynomial& p, const ParamBound& bound) {
  check_bound(p, bound);
  const auto v = static_cast<std::size_t>(bound.var);
  PhaseTerm lead_term;
  lead_term.coeff = 1;
  lead_term.params = bound.lead;
  PhaseTerm trail_term;
  trail_term.coeff = -1;
  trail_term.params = bound.trail;
  const PhasePolynomial divisor(p.algebra(), {lead_term, trail_term});

  PhasePolynomial rem = p;
  PhasePolynomial quotient(p.algebra());
  while (!rem.is_zero()) {
    // Highest var-degree term; every such term must be a multiple of lead.
    const auto& terms = rem.terms();
    const auto top = std::max_element(terms.begin(), terms.end(), [v](const PhaseTerm& a, const PhaseTerm& b) {
      return a.params[v] < b.params[v];
    });
    PhaseTerm q = *top;
    for (std::size_t k = 0; k < q.params.size(); ++k) {
      if (q.params[k] < bound.lead[k]) return std::nullopt;
      q.params[k] -= bound.lead[k];
    }
    const PhasePolynomial qp(p.algebra(), {q});
    quotient += qp;
    rem -= qp * divisor;
  }
  return quotient;
}

}  // namespace cliffq
