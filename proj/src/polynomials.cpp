#include "rcoulomb/polynomials.hpp"

#include <cmath>
#include <mutex>
#include <sstream>
#include <utility>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/erf.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "rcoulomb/errors.hpp"
#include "rcoulomb/potential.hpp"
#include "rcoulomb/special_functions.hpp"

namespace rcoulomb {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) {
  return RationalPolynomial({c});
}

RationalPolynomial RationalPolynomial::linear(const Rational& a, const Rational& b) {
  return RationalPolynomial({a, b});
}

void RationalPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Rational RationalPolynomial::coefficient(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coefficients_[static_cast<std::size_t>(i)];
}

double RationalPolynomial::operator()(double y) const {
  double acc = 0.0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * y + it->convert_to<double>();
  }
  return acc;
}

Rational RationalPolynomial::evaluate_exact(const Rational& y) const {
  Rational acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * y + *it;
  return acc;
}

double RationalPolynomial::absolute_sum(double y) const {
  double acc = 0.0;
  const double ay = std::abs(y);
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * ay + std::abs(it->convert_to<double>());
  }
  return acc;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) coefficients_.resize(rhs.coefficients_.size());
  for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) coefficients_[i] += rhs.coefficients_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) coefficients_.resize(rhs.coefficients_.size());
  for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) coefficients_[i] -= rhs.coefficients_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& c) {
  for (auto& coefficient : coefficients_) coefficient *= c;
  trim();
  return *this;
}

RationalPolynomial operator*(const RationalPolynomial& lhs, const RationalPolynomial& rhs) {
  if (lhs.coefficients_.empty() || rhs.coefficients_.empty()) return {};
  std::vector<Rational> out(lhs.coefficients_.size() + rhs.coefficients_.size() - 1);
  for (std::size_t i = 0; i < lhs.coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coefficients_.size(); ++j) {
      out[i + j] += lhs.coefficients_[i] * rhs.coefficients_[j];
    }
  }
  return RationalPolynomial(std::move(out));
}

std::string RationalPolynomial::to_string() const {
  if (coefficients_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    Rational c = coefficients_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = (c == 1);
    if (i == 0 || !unit) os << c;
    if (i > 0) {
      if (!unit) os << "*";
      os << "y";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

namespace {

// Memo of (P_k, Q_{k-1}) for k = 0, 1, ...; index 0 holds (P_0, Q_{-1}) = (1, 0).
struct PolynomialTable {
  std::mutex mutex;
  std::vector<PolynomialPair> pairs;
};

PolynomialTable& table() {
  static PolynomialTable t;
  return t;
}

}  // namespace

PolynomialPair pm_qm(int m) {
  if (m < 1) throw DomainError("pm_qm requires integer m >= 1");
  auto& t = table();
  std::lock_guard<std::mutex> lock(t.mutex);
  if (t.pairs.empty()) {
    t.pairs.push_back({RationalPolynomial::constant(1), RationalPolynomial{}});
    // V_1 = (1/2 - y) V_0 + x, from the recursion with V_{-1} = 1/x.
    t.pairs.push_back({RationalPolynomial::linear(Rational(1, 2), -1),
                       RationalPolynomial::constant(1)});
  }
  while (static_cast<int>(t.pairs.size()) <= m) {
    const int k = static_cast<int>(t.pairs.size());
    const auto& prev1 = t.pairs[static_cast<std::size_t>(k - 1)];
    const auto& prev2 = t.pairs[static_cast<std::size_t>(k - 2)];
    // (k - 1/2 - y) and y, divided by k.
    const auto a = RationalPolynomial::linear(Rational(2 * k - 1, 2), -1);
    const auto b = RationalPolynomial::linear(0, 1);
    const Rational inv_k(1, k);
    PolynomialPair next{(a * prev1.p + b * prev2.p) * inv_k, (a * prev1.q + b * prev2.q) * inv_k};
    t.pairs.push_back(std::move(next));
  }
  return t.pairs[static_cast<std::size_t>(m)];
}

double pm_reconstruct(int m, double x) {
  if (!(x >= 0.0)) throw DomainError("pm_reconstruct requires x >= 0");
  const PolynomialPair pq = pm_qm(m);
  const double y = x * x;
  return pq.p(y) * v_closed_m0(x) + x * pq.q(y);
}

double pm_reconstruct_extended(int m, double x) {
  if (!(x >= 0.0)) throw DomainError("pm_reconstruct_extended requires x >= 0");
  using Float = boost::multiprecision::cpp_bin_float_100;
  const PolynomialPair pq = pm_qm(m);
  const Float xf(x);
  const Float y = xf * xf;
  auto horner = [&](const RationalPolynomial& poly) {
    Float acc = 0;
    const auto& c = poly.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      acc = acc * y + Float(numerator(*it)) / Float(denominator(*it));
    }
    return acc;
  };
  const Float v0 = boost::math::constants::root_pi<Float>() * exp(y) * boost::math::erfc(xf);
  const Float result = horner(pq.p) * v0 + xf * horner(pq.q);
  return result.convert_to<double>();
}

double reconstruction_condition(int m, double x) {
  const PolynomialPair pq = pm_qm(m);
  const double y = x * x;
  const double v0 = v_closed_m0(x);
  const double scale = std::abs(pq.p(y)) * v0 + x * std::abs(pq.q(y));
  return scale / std::abs(pm_reconstruct_extended(m, x));
}

double pm_via_kummer(int m, double y) {
  if (m < 1) throw DomainError("pm_via_kummer requires integer m >= 1");
  if (!(y >= 0.0)) throw DomainError("pm_via_kummer requires y >= 0");
  const double prefactor = 1.0 / (m * betafn(m, 0.5));
  return prefactor * kummer_terminating(-m, 0.5 - m, -y);
}

}  // namespace rcoulomb
