#include <algorithm>
#include <cctype>
#include <climits>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <set>
#include <tuple>

#include <Eigen/Sparse>

#include "cliffq/cli.hpp"
#include "cliffq/cliffalg.hpp"
#include "cliffq/errors.hpp"

namespace cliffq {

bool operator==(const ExprNode& a, const ExprNode& b) {
  // offsets are positional metadata, not structure
  return a.kind == b.kind && a.symbol == b.symbol && a.number == b.number && a.exponent == b.exponent &&
         a.signs == b.signs && a.children == b.children;
}

bool is_known_symbol(const std::string& name) {
  static const std::set<std::string> known{"a",  "b",  "c",  "d",  "q",  "w",  "x",  "y",  "X",  "Y",
                                           "s1", "s2", "S1", "S2", "g1", "g2", "g3", "g4", "a'", "b'",
                                           "c'", "d'"};
  return known.count(name) > 0;
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  ExprNode parse() {
    ExprNode lhs = sum();
    skip();
    if (peek_eq()) {
      const std::size_t at = pos_;
      pos_ += 2;
      ExprNode rhs = sum();
      ExprNode eq{ExprNode::Kind::Equality, {}, 0, 1, {std::move(lhs), std::move(rhs)}, {}, at};
      skip();
      if (peek_eq()) throw ExprError(pos_, "chained equality");
      lhs = std::move(eq);
    }
    skip();
    if (pos_ != s_.size()) throw ExprError(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return lhs;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool peek_eq() { return pos_ + 1 < s_.size() && s_[pos_] == '=' && s_[pos_ + 1] == '='; }

  ExprNode sum() {
    skip();
    const std::size_t start = pos_;
    std::vector<ExprNode> kids;
    std::vector<int> signs;
    int sign = 1;
    if (at('-')) {
      ++pos_;
      sign = -1;
    }
    kids.push_back(prod());
    signs.push_back(sign);
    while (at('+') || at('-')) {
      signs.push_back(s_[pos_] == '+' ? 1 : -1);
      ++pos_;
      kids.push_back(prod());
    }
    if (kids.size() == 1 && signs[0] == 1) return std::move(kids[0]);
    return {ExprNode::Kind::Sum, {}, 0, 1, std::move(kids), std::move(signs), start};
  }

  ExprNode prod() {
    skip();
    const std::size_t start = pos_;
    std::vector<ExprNode> kids{power()};
    while (at('*')) {
      ++pos_;
      kids.push_back(power());
    }
    if (kids.size() == 1) return std::move(kids[0]);
    return {ExprNode::Kind::Product, {}, 0, 1, std::move(kids), {}, start};
  }

  ExprNode power() {
    ExprNode base = atom();
    if (!at('^')) return base;
    ++pos_;
    skip();
    const std::size_t start = pos_;
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
      skip();
    }
    const std::string digits = read_digits();
    if (digits.empty()) throw ExprError(pos_, "expected integer exponent");
    if (digits.size() > 9) throw ExprError(start, "exponent out of range");
    const int e = std::stoi(digits);
    const std::size_t off = base.offset;
    return {ExprNode::Kind::Power, {}, 0, neg ? -e : e, {std::move(base)}, {}, off};
  }

  std::string read_digits() {
    const std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(b, pos_ - b);
  }

  ExprNode atom() {
    skip();
    const std::size_t start = pos_;
    if (pos_ >= s_.size()) throw ExprError(pos_, "expected operand");
    const char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      ExprNode inner = sum();
      skip();
      if (peek_eq()) throw ExprError(pos_, "equality is only allowed at the top level");
      if (!at(')')) throw ExprError(pos_, "expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string text = read_digits();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        const std::string den = read_digits();
        if (den.empty()) throw ExprError(pos_, "expected denominator");
        if (std::all_of(den.begin(), den.end(), [](char c) { return c == '0'; }))
          throw ExprError(start, "zero denominator");
        text += "/" + den;
      }
      Rational r(text);
      r.canonicalize();
      return {ExprNode::Kind::Number, {}, r, 1, {}, {}, start};
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '\'') ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      if (!is_known_symbol(name)) throw ExprError(start, "unknown symbol '" + name + "'");
      return {ExprNode::Kind::Symbol, name, 0, 1, {}, {}, start};
    }
    throw ExprError(pos_, std::string("unexpected '") + ch + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

bool needs_parens_in_product(const ExprNode& e) {
  return e.kind == ExprNode::Kind::Sum || e.kind == ExprNode::Kind::Product;
}

}  // namespace

ExprNode parse_expr(const std::string& text) {
  if (text.size() > kMaxExprBytes) throw ExprError(kMaxExprBytes, "expression longer than 64KiB");
  return Parser(text).parse();
}

std::string pretty_print(const ExprNode& e) {
  using K = ExprNode::Kind;
  switch (e.kind) {
    case K::Symbol:
      return e.symbol;
    case K::Number:
      return e.number.get_str();
    case K::Power: {
      const ExprNode& b = e.children[0];
      const bool bare = b.kind == K::Symbol || b.kind == K::Number;
      const std::string base = bare ? pretty_print(b) : "(" + pretty_print(b) + ")";
      return base + "^" + std::to_string(e.exponent);
    }
    case K::Product: {
      std::string out;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) out += "*";
        const auto& c = e.children[i];
        out += needs_parens_in_product(c) ? "(" + pretty_print(c) + ")" : pretty_print(c);
      }
      return out;
    }
    case K::Sum: {
      std::string out;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        const auto& c = e.children[i];
        const std::string t = c.kind == K::Sum ? "(" + pretty_print(c) + ")" : pretty_print(c);
        if (i == 0) {
          out += (e.signs[0] < 0 ? "-" : "") + t;
        } else {
          out += (e.signs[i] < 0 ? " - " : " + ") + t;
        }
      }
      return out;
    }
    case K::Equality:
      return pretty_print(e.children[0]) + " == " + pretty_print(e.children[1]);
  }
  return {};
}

Backend parse_backend(const std::string& s) {
  if (s == "exact") return Backend::Exact;
  if (s == "float") return Backend::Float;
  if (s == "symbolic") return Backend::Symbolic;
  throw UsageError("unknown backend '" + s + "' (exact | float | symbolic)");
}

std::string to_string(Backend b) {
  switch (b) {
    case Backend::Exact: return "exact";
    case Backend::Float: return "float";
    case Backend::Symbolic: return "symbolic";
  }
  return {};
}

namespace {

// Generic tree walk; B supplies number/symbol/add/mul/neg/power over its value type.
template <class B>
typename B::Value eval_node(const ExprNode& e, B& b) {
  using K = ExprNode::Kind;
  switch (e.kind) {
    case K::Symbol:
      return b.symbol(e.symbol, e.offset);
    case K::Number:
      return b.number(e.number);
    case K::Power:
      return b.power(eval_node(e.children[0], b), e.exponent, e.offset);
    case K::Product: {
      auto v = eval_node(e.children[0], b);
      for (std::size_t i = 1; i < e.children.size(); ++i) v = b.mul(v, eval_node(e.children[i], b));
      return v;
    }
    case K::Sum: {
      auto v = eval_node(e.children[0], b);
      if (e.signs[0] < 0) v = b.neg(v);
      for (std::size_t i = 1; i < e.children.size(); ++i) {
        auto t = eval_node(e.children[i], b);
        v = e.signs[i] < 0 ? b.sub(v, t) : b.add(v, t);
      }
      return v;
    }
    case K::Equality:
      break;
  }
  throw ExprError(e.offset, "equality is only allowed at the top level");
}

template <class V, class Mul>
V repeated(V base, int k, V one, Mul mul) {
  V out = std::move(one);
  for (int i = 0; i < k; ++i) out = mul(out, base);
  return out;
}

bool is_primed(const std::string& s) { return !s.empty() && s.back() == '\''; }

struct ExactBackend {
  using Value = OperatorSum;
  int n;
  int cond;
  const RunConfig& cfg;
  QuantumMatrix A, A2;
  FrameQuadruple frame;
  std::vector<SlotOperator> gens;

  ExactBackend(const RunConfig& c)
      : n(c.n),
        cond(session_conductor(c.n)),
        cfg(c),
        A(build_A(c.n, c.coeffs)),
        A2(build_A(c.n, c.second_coeffs(), 2)),
        frame(frame_quadruple(c.n)),
        gens(clifford_generators(c.n, 4).generators) {}

  Value scalar(const CyclotomicNumber& s) const { return OperatorSum::scalar(n, s); }
  Value number(const Rational& r) const { return scalar(CyclotomicNumber(cond, r)); }

  Value symbol(const std::string& s, std::size_t) const {
    if (s == "a") return A.a;
    if (s == "b") return A.b;
    if (s == "c") return A.c;
    if (s == "d") return A.d;
    if (s == "a'") return A2.a;
    if (s == "b'") return A2.b;
    if (s == "c'") return A2.c;
    if (s == "d'") return A2.d;
    if (s == "s1") return OperatorSum(frame.sigma1);
    if (s == "s2") return OperatorSum(frame.sigma2);
    if (s == "S1") return OperatorSum(frame.Sigma1);
    if (s == "S2") return OperatorSum(frame.Sigma2);
    if (s == "w") return scalar(omega_power(n, 1));
    if (s == "q") return scalar(omega_power(n, cfg.k.value_or(1)));
    if (s == "x") return number(cfg.coeffs[0]);
    if (s == "y") return number(cfg.coeffs[1]);
    if (s == "X") return number(cfg.coeffs[2]);
    if (s == "Y") return number(cfg.coeffs[3]);
    return OperatorSum(gens.at(static_cast<std::size_t>(s[1] - '1')));
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value neg(const Value& a) const { return -a; }
  Value power(Value v, int k, std::size_t off) const {
    if (k < 0) {
      if (!v.is_monomial()) throw ExprError(off, "negative powers need a scalar or monomial operator");
      v = OperatorSum(v.terms()[0].inverse());
      k = -k;
    }
    return repeated(v, k, number(1), [](const Value& a, const Value& b) { return a * b; });
  }
};

// Sparse: every generator is a sum of monomial matrices, so products stay
// sparse even on eight slots where dense products would be prohibitive.
using SparseMatrix = Eigen::SparseMatrix<std::complex<double>, Eigen::ColMajor, long>;

struct FloatBackend {
  using Value = SparseMatrix;
  ExactBackend exact;
  int slots;
  long dim;

  FloatBackend(const RunConfig& c, int slot_count)
      : exact(c), slots(slot_count), dim(tensor_dim(c.n, slot_count)) {
    if (dim > kDenseSizeGuard)
      throw UsageError("float backend: dimension " + std::to_string(dim) + " exceeds " +
                       std::to_string(kDenseSizeGuard));
  }

  Value scalar(std::complex<double> s) const {
    Value m(dim, dim);
    m.setIdentity();
    return m * s;
  }
  Value number(const Rational& r) const { return scalar(r.get_d()); }
  Value symbol(const std::string& s, std::size_t off) const {
    const OperatorSum op = exact.symbol(s, off);
    std::vector<Eigen::Triplet<std::complex<double>, long>> trip;
    std::vector<std::complex<double>> e(static_cast<std::size_t>(dim));
    for (long j = 0; j < dim; ++j) {
      e[static_cast<std::size_t>(j)] = 1.0;
      const auto col = apply(op, slots, e);
      e[static_cast<std::size_t>(j)] = 0.0;
      for (long i = 0; i < dim; ++i)
        if (std::abs(col[static_cast<std::size_t>(i)]) > 1e-14) trip.emplace_back(i, j, col[static_cast<std::size_t>(i)]);
    }
    Value m(dim, dim);
    m.setFromTriplets(trip.begin(), trip.end());
    return m;
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return (a * b).pruned(1e-300); }
  Value neg(const Value& a) const { return -a; }
  Value power(Value v, int k, std::size_t off) const {
    if (k < 0) {
      // One nonzero per column: a generalized permutation, inverted entrywise.
      std::vector<Eigen::Triplet<std::complex<double>, long>> trip;
      for (long j = 0; j < v.outerSize(); ++j) {
        int count = 0;
        for (Value::InnerIterator it(v, j); it; ++it) {
          if (std::abs(it.value()) <= 1e-12) continue;
          ++count;
          trip.emplace_back(j, it.row(), 1.0 / it.value());
        }
        if (count != 1) throw ExprError(off, "negative powers need a scalar or monomial operator");
      }
      v.setZero();
      v.setFromTriplets(trip.begin(), trip.end());
      k = -k;
    }
    return repeated(v, k, scalar(1.0), [](const Value& a, const Value& b) -> Value { return (a * b).pruned(1e-300); });
  }
};

double max_abs(const SparseMatrix& m) {
  double r = 0;
  for (long j = 0; j < m.outerSize(); ++j)
    for (SparseMatrix::InnerIterator it(m, j); it; ++it) r = std::max(r, std::abs(it.value()));
  return r;
}

nlohmann::json sparse_to_json(const SparseMatrix& m, double cutoff = 1e-12) {
  std::vector<std::tuple<long, long, std::complex<double>>> entries;
  for (long j = 0; j < m.outerSize(); ++j)
    for (SparseMatrix::InnerIterator it(m, j); it; ++it)
      if (std::abs(it.value()) > cutoff) entries.emplace_back(it.row(), j, it.value());
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b)); });
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [r, c, v] : entries) out.push_back({r, c, stable_double(v.real()), stable_double(v.imag())});
  return out;
}

struct SymbolicBackend {
  using Value = PhasePolynomial;
  PhaseAlgebraPtr alg = two_copy_theta(std::nullopt);
  const RunConfig& cfg;

  explicit SymbolicBackend(const RunConfig& c) : cfg(c) {}

  Value number(const Rational& r) const { return PhasePolynomial::constant(alg, r); }
  Value symbol(const std::string& s, std::size_t off) const {
    static const std::map<std::string, std::pair<std::string, std::string>> entries{
        {"a", {"x", "s1"}},    {"b", {"y", "s2"}},    {"c", {"X", "S1"}},    {"d", {"Y", "S2"}},
        {"a'", {"x'", "s1'"}}, {"b'", {"y'", "s2'"}}, {"c'", {"X'", "S1'"}}, {"d'", {"Y'", "S2'"}}};
    if (auto it = entries.find(s); it != entries.end()) {
      return PhasePolynomial::param(alg, it->second.first) *
             PhasePolynomial::generator(alg, alg->generator_index(it->second.second));
    }
    if (s == "w") return PhasePolynomial::omega(alg, 1);
    if (s == "q") return PhasePolynomial::omega(alg, cfg.k.value_or(1));
    if (alg->param_index(s) >= 0) return PhasePolynomial::param(alg, s);
    if (alg->generator_index(s) >= 0) return PhasePolynomial::generator(alg, alg->generator_index(s));
    throw ExprError(off, "symbol '" + s + "' is unavailable in the symbolic frame backend");
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value neg(const Value& a) const { return -a; }
  Value power(Value v, int k, std::size_t off) const {
    if (k < 0) {
      if (v.terms().size() != 1) throw ExprError(off, "negative powers need a single term");
      PhaseTerm t = v.terms()[0];
      if (std::any_of(t.gen_exps.begin(), t.gen_exps.end(), [](int e) { return e != 0; }))
        throw ExprError(off, "negative powers of frame generators need a modulus; use the exact backend");
      t.coeff = 1 / t.coeff;
      t.omega_exp = -t.omega_exp;
      for (int& p : t.params) p = -p;
      v = PhasePolynomial(alg, {t});
      k = -k;
    }
    return v.pow(k);
  }
};

int slots_needed(const ExprNode& e) {
  int s = 1;
  if (e.kind == ExprNode::Kind::Symbol) {
    const std::string& n = e.symbol;
    if (is_primed(n)) s = 8;
    else if (n == "a" || n == "b" || n == "c" || n == "d" || n == "s1" || n == "s2" || n == "S1" || n == "S2") s = 4;
    else if (n[0] == 'g') s = 2;
  }
  for (const auto& c : e.children) s = std::max(s, slots_needed(c));
  return s;
}

std::pair<const ExprNode*, std::optional<ExprNode>> split(const ExprNode& ast) {
  if (ast.kind == ExprNode::Kind::Equality) return {&ast.children[0], ast.children[1]};
  return {&ast, std::nullopt};
}

}  // namespace

ExprVerdict eval_expr(const ExprNode& ast, const RunConfig& config) {
  if (config.n < 2) throw UsageError("--n must be at least 2");
  auto [lhs_node, rhs_node] = split(ast);
  ExprVerdict v;
  switch (config.backend) {
    case Backend::Exact: {
      ExactBackend b(config);
      const OperatorSum lhs = eval_node(*lhs_node, b);
      const OperatorSum rhs = rhs_node ? eval_node(*rhs_node, b) : OperatorSum(config.n, session_conductor(config.n));
      const RelationOutcome o = check_relation("expr", lhs, rhs, config.n, 0);
      v.holds = o.status == RelationStatus::Holds;
      v.status = to_string(o.status);
      v.phase = o.phase;
      if (!v.holds) v.residual = to_json(lhs - rhs);
      break;
    }
    case Backend::Float: {
      FloatBackend b(config, slots_needed(ast));
      const SparseMatrix lhs = eval_node(*lhs_node, b);
      const SparseMatrix rhs = rhs_node ? eval_node(*rhs_node, b) : SparseMatrix(b.scalar(0.0));
      const SparseMatrix diff = lhs - rhs;
      const double norm = max_abs(diff);
      v.holds = norm < 1e-10;
      v.status = v.holds ? "holds" : "fails";
      if (!v.holds) {
        for (int r = 1; r < config.n; ++r) {
          const auto w = std::polar(1.0, 2.0 * std::numbers::pi * r / config.n);
          if (max_abs(SparseMatrix(lhs - w * rhs)) < 1e-10 && max_abs(rhs) > 1e-10) {
            v.status = "holds_with_phase";
            v.phase = r;
            break;
          }
        }
        v.residual = {{"max_abs", stable_double(norm)}, {"entries", sparse_to_json(diff)}};
      }
      break;
    }
    case Backend::Symbolic: {
      SymbolicBackend b(config);
      const PhasePolynomial lhs = eval_node(*lhs_node, b);
      const PhasePolynomial rhs = rhs_node ? eval_node(*rhs_node, b) : PhasePolynomial(b.alg);
      const PhasePolynomial diff = lhs - rhs;
      // Zero tests are decided in the tensor-pair algebra, where monomials are independent.
      const PhasePolynomial image = frame_to_tensor_pair(diff);
      v.holds = image.is_zero();
      v.status = v.holds ? "holds" : "fails";
      if (!v.holds) {
        // x, y, X, Y stay formal here; report which coefficient bounds divide the residual.
        nlohmann::json divisible = nlohmann::json::array();
        for (const char* bound : {"xY = yX", "x'Y' = y'X'"}) {
          if (divide_by_bound(image, parse_bound(*image.algebra(), bound))) divisible.push_back(bound);
        }
        v.residual = {{"frame", diff.to_string()}, {"tensor_pair", image.to_string()}, {"divisible_by", divisible}};
      }
      break;
    }
  }
  return v;
}

}  // namespace cliffq
