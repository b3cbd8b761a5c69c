#include "cliffq/qsu2.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "cliffq/cyclotomic.hpp"

namespace cliffq {

namespace {

double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

QParam QParam::root_of_unity(int n) {
  if (n < 1) throw std::invalid_argument("QParam::root_of_unity: n must be positive");
  return phase(2.0 * std::numbers::pi / n);
}

std::complex<double> QParam::to_complex() const {
  return kind == Kind::Real ? std::complex<double>(value, 0.0) : std::polar(1.0, value);
}

std::string QParam::to_string() const {
  if (kind == Kind::Real) return format_double(value);
  return "exp(i*" + format_double(value) + ")";
}

QParam parse_qparam(const std::string& text) {
  if (text.rfind("phase:", 0) == 0) {
    return QParam::phase(std::numbers::pi * parse_rational(text.substr(6)).get_d());
  }
  if (text.rfind("root:", 0) == 0) {
    std::size_t used = 0;
    const int n = std::stoi(text.substr(5), &used);
    if (used != text.size() - 5) throw std::invalid_argument("parse_qparam: malformed root order");
    return QParam::root_of_unity(n);
  }
  double q = 0.0;
  if (text.find('.') != std::string::npos || text.find('e') != std::string::npos) {
    std::size_t used = 0;
    q = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("parse_qparam: malformed number '" + text + "'");
  } else {
    q = parse_rational(text).get_d();
  }
  if (!(q > 0.0)) throw std::invalid_argument("parse_qparam: real q must be positive");
  return QParam::real(q);
}

double qnum(double x, const QParam& q) {
  if (q.kind == QParam::Kind::Real) {
    if (!(q.value > 0.0)) throw std::domain_error("qnum: q must be positive (q = 0 has no q-numbers)");
    const double h = std::log(q.value);
    if (h == 0.0) return x;
    // sinh form avoids the cancellation in (qˣ − q⁻ˣ)/(q − q⁻¹) near q = 1.
    return std::sinh(x * h) / std::sinh(h);
  }
  const double theta = q.value;
  const double s = std::sin(theta);
  if (std::abs(s) < 1e-300 || std::abs(s) < 1e-15 * std::max(1.0, std::abs(theta))) {
    // θ ∈ πZ: limit of sin(xθ)/sin θ, i.e. x·cos(xθ)/cos θ.
    return x * std::cos(x * theta) / std::cos(theta);
  }
  return std::sin(x * theta) / s;
}

AngularMomentumRep build_rep(int two_j, const QParam& q) {
  if (two_j < 0) throw std::invalid_argument("build_rep: two_j must be non-negative");
  const int d = two_j + 1;
  const double j = two_j / 2.0;
  AngularMomentumRep rep{two_j,
                         q,
                         ComplexMatrix::Zero(d, d),
                         ComplexMatrix::Zero(d, d),
                         ComplexMatrix::Zero(d, d),
                         std::vector<double>(static_cast<std::size_t>(d)),
                         std::vector<double>(static_cast<std::size_t>(d))};
  for (int row = 0; row < d; ++row) {
    const double m = rep.m_of(row);
    rep.J3(row, row) = m;
    const double plus = qnum(j - m, q) * qnum(j + m + 1, q);
    const double minus = qnum(j + m, q) * qnum(j - m + 1, q);
    rep.plus_squared[static_cast<std::size_t>(row)] = plus;
    rep.minus_squared[static_cast<std::size_t>(row)] = minus;
    // m → m+1 is row → row−1; m → m−1 is row → row+1.
    if (row > 0) rep.Jplus(row - 1, row) = std::sqrt(std::complex<double>(plus, 0.0));
    if (row + 1 < d) rep.Jminus(row + 1, row) = std::sqrt(std::complex<double>(minus, 0.0));
  }
  return rep;
}

double CommutatorResiduals::max() const { return std::max({j3_plus, j3_minus, plus_minus}); }

CommutatorResiduals verify_commutators(const AngularMomentumRep& rep) {
  const ComplexMatrix& J3 = rep.J3;
  const ComplexMatrix& Jp = rep.Jplus;
  const ComplexMatrix& Jm = rep.Jminus;
  ComplexMatrix two_j3 = ComplexMatrix::Zero(rep.dim(), rep.dim());
  for (int row = 0; row < rep.dim(); ++row) two_j3(row, row) = qnum(2.0 * rep.m_of(row), rep.q);
  return {max_abs(J3 * Jp - Jp * J3 - Jp), max_abs(J3 * Jm - Jm * J3 + Jm), max_abs(Jp * Jm - Jm * Jp - two_j3)};
}

ComplexMatrix shift_matrix(int n) {
  ComplexMatrix s = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) s((i + 1) % n, i) = 1.0;
  return s;
}

double PolarDecomposition::max_residual() const { return *std::max_element(residuals.begin(), residuals.end()); }

PolarDecomposition polar_decompose(const AngularMomentumRep& rep) {
  const int d = rep.dim();
  PolarDecomposition best;
  best.modulus_plus = ComplexMatrix::Zero(d, d);
  best.modulus_minus = ComplexMatrix::Zero(d, d);
  for (int row = 0; row < d; ++row) {
    best.modulus_plus(row, row) = std::sqrt(std::complex<double>(rep.minus_squared[static_cast<std::size_t>(row)], 0.0));
    best.modulus_minus(row, row) = std::sqrt(std::complex<double>(rep.plus_squared[static_cast<std::size_t>(row)], 0.0));
  }
  for (int x = 1; x <= rep.two_j; ++x) {
    if (std::abs(qnum(x, rep.q)) < 1e-12) best.degenerate = true;
  }

  const ComplexMatrix& Jp = rep.Jplus;
  const ComplexMatrix& Jm = rep.Jminus;
  const ComplexMatrix& Mp = best.modulus_plus;
  const ComplexMatrix& Mm = best.modulus_minus;
  double best_total = -1.0;
  const ComplexMatrix f = shift_matrix(d);
  for (const auto& [name, s] : {std::pair<std::string, ComplexMatrix>{"shift", f},
                                std::pair<std::string, ComplexMatrix>{"shift^-1", f.adjoint()}}) {
    const ComplexMatrix sinv = s.adjoint();  // permutation matrices are unitary
    const std::array<double, 4> r{max_abs(Jp - Mp * sinv), max_abs(Jp - sinv * Mm), max_abs(Jm - s * Mp),
                                  max_abs(Jm - Mm * s)};
    const double total = r[0] + r[1] + r[2] + r[3];
    if (best_total < 0.0 || total < best_total) {
      best_total = total;
      best.shift = s;
      best.orientation = name;
      best.residuals = r;
      best.printed_minus_residuals = {max_abs(Jm - Mp * s), max_abs(Jm - s * Mm)};
    }
  }
  return best;
}

}  // namespace cliffq
