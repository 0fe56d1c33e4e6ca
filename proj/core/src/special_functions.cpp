// Copyright 2026 The sylvtypes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sylvtypes/special_functions.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss.hpp>

#include <limits>
#include <stdexcept>
#include <string>

#include "sylvtypes/errors.hpp"

namespace sylvtypes::special {
namespace {

namespace bmc = boost::math::double_constants;

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
// Beyond this |y| the asymptotic series for D is used instead of the
// power series for H.
constexpr double kDawsonSwitch = 9.0;
// Grid for the tabulated inner integral; past kTableEnd cosh(y) equals
// exp(y)/2 to double precision.
constexpr double kTableEnd = 40.0;
constexpr double kTableStep = 1.0 / 16.0;

double log_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

// log(exp(z) - 1) for z > 0.
double log_expm1(double z) {
  return z > 30.0 ? z + std::log1p(-std::exp(-z)) : std::log(std::expm1(z));
}

// Sum of y^(2k+1) / (2^k k! (2k+1)), evaluated for |y| so all terms are
// positive.
double h_series(double y) {
  const double a = std::abs(y);
  const double y2 = 0.5 * a * a;
  double term = a;
  double sum = a;
  for (int k = 1; k < 1000; ++k) {
    term *= y2 / k;
    const double add = term / (2 * k + 1);
    sum += add;
    if (k > y2 && add < 1e-17 * sum) break;
  }
  return std::copysign(sum, y);
}

// D(y) ~ (1/y) sum_k (2k-1)!! / y^(2k), truncated at the smallest term.
double dawson_asymptotic(double y) {
  const double inv2 = 1.0 / (y * y);
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double next = term * (2 * k - 1) * inv2;
    if (next > term || next < 1e-18) break;
    term = next;
    sum += term;
  }
  return sum / y;
}

double require_finite(double value, const char* what) {
  if (!std::isfinite(value)) throw DomainError(std::string(what) + ": non-finite result");
  return value;
}

}  // namespace

double erfi_like(double y) {
  const double a = std::abs(y);
  if (a <= kDawsonSwitch) return h_series(y);
  const double log_h = 0.5 * a * a + std::log(dawson_asymptotic(a));
  if (log_h > std::log(std::numeric_limits<double>::max())) {
    throw std::overflow_error("erfi_like: H(" + std::to_string(y) + ") overflows");
  }
  return std::copysign(std::exp(log_h), y);
}

double scaled_dawson(double y) {
  const double a = std::abs(y);
  if (a <= kDawsonSwitch) return std::exp(-0.5 * a * a) * h_series(y);
  return std::copysign(dawson_asymptotic(a), y);
}

Complex scaled_phi(double x, int n, int sign) {
  if (n < 1) throw DomainError("scaled_phi: n must be positive");
  if (sign != 1 && sign != -1) throw DomainError("scaled_phi: sign must be +1 or -1");
  const double y = x / std::sqrt(static_cast<double>(n));
  return {0.5 * std::exp(-0.5 * y * y), sign * scaled_dawson(y) * bmc::one_div_root_two_pi};
}

Polar scaled_phi_polar(double x, int n) {
  const Complex psi = scaled_phi(x, n, +1);
  return {std::log(std::abs(psi)), std::arg(psi)};
}

double c_const(double beta) {
  if (!(beta > -1.0)) throw DomainError("c_const: beta must exceed -1");
  return require_finite(
      std::exp(std::lgamma(beta + 1.5) - std::lgamma(beta + 1.0)) / bmc::root_pi, "c_const");
}

double c_tilde_const(double beta) {
  if (!(beta > 0.5)) throw DomainError("c_tilde_const: beta must exceed 1/2");
  return require_finite(
      std::exp(std::lgamma(beta) - std::lgamma(beta - 0.5)) / bmc::root_pi, "c_tilde_const");
}

double c_ball(int d, double beta) {
  if (d < 1) throw DomainError("c_ball: dimension must be positive");
  if (!(beta > -1.0)) throw DomainError("c_ball: beta must exceed -1");
  const double half = 0.5 * d;
  return require_finite(std::exp(std::lgamma(half + beta + 1.0) - std::lgamma(beta + 1.0) -
                                 half * std::log(bmc::pi)),
                        "c_ball");
}

double c_tilde_ball(int d, double beta) {
  if (d < 1) throw DomainError("c_tilde_ball: dimension must be positive");
  const double half = 0.5 * d;
  if (!(beta > half)) throw DomainError("c_tilde_ball: beta must exceed d/2");
  return require_finite(std::exp(std::lgamma(beta) - std::lgamma(beta - half) -
                                 half * std::log(bmc::pi)),
                        "c_tilde_ball");
}

double log_cosh(double x) {
  const double a = std::abs(x);
  return a + std::log1p(std::exp(-2.0 * a)) - bmc::ln_two;
}

GEvaluator::GEvaluator(GKind kind, double alpha) : kind_(kind), alpha_(alpha) {
  if (!std::isfinite(alpha)) throw DomainError("GEvaluator: alpha must be finite");
  if (kind == GKind::beta) {
    if (!(alpha >= 0.0)) throw DomainError("GEvaluator: beta kind needs alpha >= 0");
    kappa_ = alpha;
    log_c_ = std::log(c_const(0.5 * (alpha - 1.0)));
  } else {
    if (!(alpha > 0.0)) throw DomainError("GEvaluator: beta-prime kind needs alpha > 0");
    kappa_ = alpha - 1.0;
    log_c_ = std::log(c_tilde_const(0.5 * (alpha + 1.0)));
  }
  step_ = kTableStep;
  const int cells = static_cast<int>(std::lround(kTableEnd / step_));
  log_table_.assign(cells + 1, kNegInf);
  for (int j = 0; j < cells; ++j) {
    log_table_[j + 1] = log_add(log_table_[j], cell_log_integral(j * step_, (j + 1) * step_));
  }
}

double GEvaluator::cell_log_integral(double a, double b) const {
  if (!(b > a)) return kNegInf;
  if (kappa_ == 0.0) return std::log(b - a);
  // Scale by the largest value of cosh^kappa on the cell.
  const double ref = kappa_ * log_cosh(kappa_ > 0.0 ? b : a);
  const double kappa = kappa_;
  auto scaled = [kappa, ref](double y) { return std::exp(kappa * log_cosh(y) - ref); };
  const double integral = boost::math::quadrature::gauss<double, 20>::integrate(scaled, a, b);
  return ref + std::log(integral);
}

double GEvaluator::log_inner_integral(double x) const {
  x = std::abs(x);
  if (x == 0.0) return kNegInf;
  if (kappa_ == 0.0) return std::log(x);
  if (x <= kTableEnd) {
    const auto j = std::min<std::size_t>(static_cast<std::size_t>(x / step_),
                                         log_table_.size() - 1);
    return log_add(log_table_[j], cell_log_integral(j * step_, x));
  }
  const double z = kappa_ * (x - kTableEnd);
  const double lead = kappa_ * (kTableEnd - bmc::ln_two);
  const double tail = kappa_ > 0.0 ? lead + log_expm1(z) - std::log(kappa_)
                                   : lead + std::log(-std::expm1(z)) - std::log(-kappa_);
  return log_add(log_table_.back(), tail);
}

Polar GEvaluator::evaluate_log(double x) const {
  const double la = log_c_ + log_inner_integral(x);
  if (la == kNegInf) return {-bmc::ln_two, 0.0};
  // |G|^2 = (1 + 4 exp(2 la)) / 4
  const double u = 2.0 * la + 2.0 * bmc::ln_two;
  const double half_log = u < 0.0 ? 0.5 * std::log1p(std::exp(u))
                                   : 0.5 * (u + std::log1p(std::exp(-u)));
  const double phase = std::atan(std::exp(la + bmc::ln_two));
  return {half_log - bmc::ln_two, x < 0.0 ? -phase : phase};
}

Complex GEvaluator::evaluate(double x) const {
  const double la = log_c_ + log_inner_integral(x);
  const double im = la == kNegInf ? 0.0 : std::exp(la);
  return {0.5, x < 0.0 ? -im : im};
}

}  // namespace sylvtypes::special
