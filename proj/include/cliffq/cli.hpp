#pragma once

#include <array>
#include <iosfwd>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cliffq/cyclotomic.hpp"
#include "cliffq/monomial.hpp"
#include "cliffq/phaseword.hpp"
#include "cliffq/qgroup.hpp"

namespace cliffq {

inline constexpr int kSchemaVersion = 1;
inline constexpr std::size_t kMaxExprBytes = 64 * 1024;

// ---- expressions -----------------------------------------------------------

struct ExprNode {
  enum class Kind { Symbol, Number, Power, Product, Sum, Equality };
  Kind kind = Kind::Number;
  std::string symbol;
  Rational number;
  int exponent = 1;
  std::vector<ExprNode> children;
  std::vector<int> signs;  // Sum: ±1 per child
  std::size_t offset = 0;  // byte offset of the node's first token

  friend bool operator==(const ExprNode& a, const ExprNode& b);
};

/// Syntax error or unknown symbol, with the byte offset it was detected at.
class ExprError : public std::invalid_argument {
 public:
  ExprError(std::size_t offset, const std::string& what)
      : std::invalid_argument(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// expr := sum '==' sum | sum; sum := ['-'] prod (('+'|'-') prod)*;
/// prod := pow ('*' pow)*; pow := atom ('^' int)?; atom := symbol | rational | '(' sum ')'.
ExprNode parse_expr(const std::string& text);
/// Canonical text; parse_expr(pretty_print(e)) == e.
std::string pretty_print(const ExprNode& e);

bool is_known_symbol(const std::string& name);

enum class Backend { Exact, Float, Symbolic };
Backend parse_backend(const std::string& s);
std::string to_string(Backend b);

// ---- configuration -----------------------------------------------------------

struct RunConfig {
  std::string command = "verify";
  int n = 3;
  Backend backend = Backend::Exact;
  std::array<Rational, 4> coeffs{1, 1, 1, 1};
  std::optional<std::array<Rational, 4>> coeffs2;  // second copy; defaults to coeffs
  std::optional<int> k;
  std::string q = "2";
  int two_j = 2;
  std::string suite = "qmatrix";
  bool json = false;
  unsigned long seed = 20261016;
  std::string expression;

  std::array<Rational, 4> second_coeffs() const { return coeffs2.value_or(coeffs); }
};

std::array<Rational, 4> parse_coeffs(const std::string& text);

/// Thrown for configurations that are syntactically fine but unusable (exit 2).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---- evaluation -----------------------------------------------------------------

struct ExprVerdict {
  bool holds = false;
  std::string status;  // holds | fails | holds_with_phase
  std::optional<int> phase;
  nlohmann::json residual;  // null when the relation holds
};

/// Evaluates lhs − rhs (or a bare expression, read as "expr == 0") on the
/// configured backend. Throws ExprError for symbols the backend cannot bind.
ExprVerdict eval_expr(const ExprNode& ast, const RunConfig& config);

// ---- JSON exports -----------------------------------------------------------------

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const CyclotomicNumber& c);
nlohmann::json to_json(const LocalMonomial& m);
nlohmann::json to_json(const SlotOperator& op);
nlohmann::json to_json(const OperatorSum& s);
/// Float rounded to 6 significant digits, |v| < 1e-13 flushed to 0, so reports
/// do not depend on last-bit noise.
double stable_double(double v);
nlohmann::json dense_to_json(const DenseMatrix& m, double cutoff = 1e-12);
nlohmann::json to_json(const RelationReport& r);

// ---- suites -------------------------------------------------------------------------

/// Assertions decide the exit code; findings are reported only.
struct SuiteResult {
  explicit SuiteResult(std::string suite_name = {}) : name(std::move(suite_name)) {}

  std::string name;
  nlohmann::json report = nlohmann::json::object();
  std::vector<std::pair<std::string, bool>> assertions;

  void check(const std::string& id, bool ok) { assertions.emplace_back(id, ok); }
  bool passed() const;
};

const std::vector<std::string>& suite_names();
SuiteResult run_single_suite(const std::string& name, const RunConfig& config);

struct RunOutcome {
  int exit_code = 0;
  nlohmann::json report;
};

/// Runs the command of config (suites in parallel), assembling the report in
/// a fixed order.
RunOutcome run_suite(const RunConfig& config);

std::string render_text(const nlohmann::json& report);

/// Full command-line entry point: exit 0 pass, 1 assertion failure, 2 usage.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cliffq
