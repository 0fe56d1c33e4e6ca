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

#include "sylvtypes/model_formulas.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <cmath>
#include <span>
#include <string>

#include "sylvtypes/errors.hpp"
#include "sylvtypes/exact_combinatorics.hpp"
#include "sylvtypes/quadrature.hpp"
#include "sylvtypes/special_functions.hpp"

namespace sylvtypes::formulas {
namespace {

namespace bmc = boost::math::double_constants;
namespace comb = sylvtypes::combinatorics;
using quadrature::Complex;
using special::GEvaluator;
using special::GKind;
using types::Setting;

// Exponential decay is reported as the weakest admissible polynomial rate.
constexpr int kExponentialDecay = 2;
constexpr int kMaxPanels = 20000;

double binomial_double(int n, int k) { return comb::binomial(n, k).convert_to<double>(); }

double resolve_tol(int d, double tol) { return tol > 0.0 ? tol : default_tolerance(d); }

TypeDistribution<double> finalize(int d, Setting setting, std::vector<double> values) {
  TypeDistribution<double> dist;
  dist.d = d;
  dist.setting = setting;
  dist.values = std::move(values);
  for (int m = dist.first(); m <= dist.last(); ++m) {
    double& p = dist.at(m);
    if (!std::isfinite(p) || p < -types::kNegativeTolerance ||
        p > 1.0 + types::kNegativeTolerance) {
      throw InconsistentInput("type " + std::to_string(m) + " evaluated to " +
                              std::to_string(p));
    }
    if (p < 0.0) {
      p = 0.0;
      dist.clamped.push_back(m);
    }
  }
  return dist;
}

TypeDistribution<BigRational> exact_distribution(int d, Setting setting,
                                                 std::vector<BigRational> values) {
  TypeDistribution<BigRational> dist;
  dist.d = d;
  dist.setting = setting;
  dist.values = std::move(values);
  return dist;
}

void require_dim(int d) {
  if (d < 2) throw DomainError("dimension d must be at least 2");
}

quadrature::QuadratureOptions line_options(double abs_tol) {
  quadrature::QuadratureOptions options;
  options.abs_tol = abs_tol;
  options.max_panels = kMaxPanels;
  return options;
}

// Real parts of  int exp(log_c + power log|psi_+(x;n)| - shift x^2/(2n)) * combine(c, arg)
// for c in [0, dim), where psi is the scaled Gaussian factor.
template <class Combine>
std::vector<double> gaussian_integrals(int n, int power, int shift, std::size_t dim,
                                       int decay, double abs_tol, Combine combine) {
  quadrature::VectorIntegrand f = [=](double x, std::span<Complex> out) {
    const auto polar = special::scaled_phi_polar(x, n);
    const double amp =
        std::exp(power * polar.log_modulus - shift * x * x / (2.0 * n));
    for (std::size_t c = 0; c < dim; ++c) out[c] = amp * combine(c, polar.phase);
  };
  const auto result = quadrature::integrate_line(f, dim, decay, line_options(abs_tol));
  std::vector<double> values(dim);
  for (std::size_t c = 0; c < dim; ++c) values[c] = result.values[c].real();
  return values;
}

// Same for  c_out |G|^power cosh(x)^-outer * combine(c, arg G).
template <class Combine>
std::vector<double> g_integrals(const GEvaluator& g, double log_c_out, double outer,
                                int power, std::size_t dim, double abs_tol,
                                Combine combine) {
  quadrature::VectorIntegrand f = [&, log_c_out, outer, power, dim](
                                      double x, std::span<Complex> out) {
    const auto polar = g.evaluate_log(x);
    const double amp = std::exp(log_c_out + power * polar.log_modulus -
                                outer * special::log_cosh(x));
    for (std::size_t c = 0; c < dim; ++c) out[c] = amp * combine(c, polar.phase);
  };
  const auto result =
      quadrature::integrate_line(f, dim, kExponentialDecay, line_options(abs_tol));
  std::vector<double> values(dim);
  for (std::size_t c = 0; c < dim; ++c) values[c] = result.values[c].real();
  return values;
}

// Type probabilities from G: eta C(d+2, m+1) int c_out |G|^(d+2) cosh^-outer
// [cos((d-2m) theta) + (-1)^m cos((d+2) theta)].
TypeDistribution<double> g_type_probs(int d, const GEvaluator& g, double log_c_out,
                                      double outer, double tol) {
  const int count = d / 2 + 1;
  std::vector<double> weight(count);
  for (int m = 0; m < count; ++m) weight[m] = types::eta(d, m) * binomial_double(d + 2, m + 1);
  const double wmax = *std::max_element(weight.begin(), weight.end());
  auto combine = [d](std::size_t c, double theta) {
    const int m = static_cast<int>(c);
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    return std::cos((d - 2 * m) * theta) + sign * std::cos((d + 2) * theta);
  };
  auto values = g_integrals(g, log_c_out, outer, d + 2, count, 0.25 * tol / wmax, combine);
  for (int m = 0; m < count; ++m) values[m] *= weight[m];
  return finalize(d, Setting::affine, std::move(values));
}

void check_angle_args(int n, int k) {
  if (n < 2) throw DomainError("angle sum needs n >= 2");
  if (k < 1 || k > n) throw DomainError("angle sum needs 1 <= k <= n");
}

BigRational power_of_two(int e) {
  BigInteger p = 1;
  p <<= std::abs(e);
  return e >= 0 ? BigRational(p) : BigRational(BigInteger(1), p);
}

}  // namespace

double default_tolerance(int d) { return d <= 8 ? 1e-10 : 1e-8; }

TypeDistribution<double> gaussian_type_probs(int d, double tol) {
  validate(ModelSpec::gaussian(d));
  tol = resolve_tol(d, tol);
  const int n = d + 2;
  const int count = d / 2 + 1;
  std::vector<double> weight(count);
  for (int m = 0; m < count; ++m) {
    weight[m] = types::eta(d, m) * binomial_double(n, m + 1) * bmc::one_div_root_two_pi;
  }
  const double wmax = *std::max_element(weight.begin(), weight.end());
  auto combine = [d](std::size_t c, double phi) {
    return std::cos((2 * static_cast<int>(c) - d) * phi);
  };
  auto values = gaussian_integrals(n, n, 0, count, n, 0.25 * tol / wmax, combine);
  for (int m = 0; m < count; ++m) values[m] *= weight[m];
  return finalize(d, Setting::affine, std::move(values));
}

double youden(int n, int k, double tol) {
  if (n < 2) throw DomainError("youden: n must be at least 2");
  if (k < 0 || k > n) throw DomainError("youden: k must lie in [0, n]");
  if (!(tol > 0.0)) throw DomainError("youden: tolerance must be positive");
  const double weight = binomial_double(n, k) * bmc::one_div_root_two_pi;
  auto combine = [n, k](std::size_t, double phi) { return std::cos((2 * k - n) * phi); };
  return weight * gaussian_integrals(n, n, 0, 1, n, 0.5 * tol / weight, combine).front();
}

TypeDistribution<double> beta_type_probs(int d, double beta, double tol) {
  validate(ModelSpec::beta_model(d, beta));
  tol = resolve_tol(d, tol);
  const double alpha = 2.0 * beta + d;
  const GEvaluator g(GKind::beta, alpha);
  const double log_c_out = std::log(special::c_const(0.5 * alpha * (d + 2)));
  return g_type_probs(d, g, log_c_out, alpha * (d + 2) + 2.0, tol);
}

TypeDistribution<double> beta_prime_type_probs(int d, double beta, double tol) {
  validate(ModelSpec::beta_prime(d, beta));
  tol = resolve_tol(d, tol);
  const double alpha = 2.0 * beta - d;
  const GEvaluator g(GKind::beta_prime, alpha);
  const double log_c_out = std::log(special::c_tilde_const(0.5 * alpha * (d + 2)));
  return g_type_probs(d, g, log_c_out, alpha * (d + 2) - 1.0, tol);
}

double kingman_simplex_prob(int d) {
  if (d < 1) throw DomainError("kingman_simplex_prob: d must be positive");
  // Generalized binomial C(a, b) = Gamma(a+1) / (Gamma(b+1) Gamma(a-b+1)).
  auto log_binom = [](double a, double b) {
    return std::lgamma(a + 1.0) - std::lgamma(b + 1.0) - std::lgamma(a - b + 1.0);
  };
  const double a = d + 1.0;
  const double sq = a * a;
  return std::exp(std::log(d + 2.0) - d * bmc::ln_two + a * log_binom(a, 0.5 * a) -
                  log_binom(sq, 0.5 * sq));
}

AngleSum angle_sum_gauss(int n, int k, double tol) {
  check_angle_args(n, k);
  if (k == n) return {n, k, 1.0, 0.0};
  const double weight = binomial_double(n, k) * bmc::one_div_root_two_pi;
  auto combine = [n, k](std::size_t, double phi) { return std::cos((n - k) * phi); };
  const double value =
      weight * gaussian_integrals(n, n - k, k, 1, kExponentialDecay, 0.5 * tol / weight,
                                  combine)
                   .front();
  return {n, k, value, tol};
}

AngleSum angle_sum_beta(int n, int k, double beta, double tol) {
  check_angle_args(n, k);
  const double alpha = 2.0 * beta + n - 1.0;
  if (!(alpha >= std::max(0.0, n - 3.0))) {
    throw DomainError("angle_sum_beta: needs 2 beta + n - 1 >= max(0, n - 3)");
  }
  if (k == n) return {n, k, 1.0, 0.0};
  const double weight = binomial_double(n, k);
  const GEvaluator g(GKind::beta, alpha);
  const double log_c_out = std::log(special::c_const(0.5 * alpha * n));
  auto combine = [n, k](std::size_t, double theta) { return std::cos((n - k) * theta); };
  const double value = weight * g_integrals(g, log_c_out, alpha * n + 2.0, n - k, 1,
                                            0.5 * tol / weight, combine)
                                    .front();
  return {n, k, value, tol};
}

AngleSum angle_sum_beta_prime(int n, int k, double beta, double tol) {
  check_angle_args(n, k);
  const double alpha = 2.0 * beta - n + 1.0;
  if (!(alpha > 1.0 / n)) throw DomainError("angle_sum_beta_prime: needs 2 beta - n + 1 > 1/n");
  if (k == n) return {n, k, 1.0, 0.0};
  const double weight = binomial_double(n, k);
  const GEvaluator g(GKind::beta_prime, alpha);
  const double log_c_out = std::log(special::c_tilde_const(0.5 * alpha * n));
  auto combine = [n, k](std::size_t, double theta) { return std::cos((n - k) * theta); };
  const double value = weight * g_integrals(g, log_c_out, alpha * n - 1.0, n - k, 1,
                                            0.5 * tol / weight, combine)
                                    .front();
  return {n, k, value, tol};
}

TypeDistribution<BigRational> conv_rw_type_probs(int d) {
  require_dim(d);
  const BigInteger denom = comb::factorial(d + 1);
  std::vector<BigRational> values;
  for (int m = 0; m <= d / 2; ++m) {
    values.emplace_back(types::eta(d, m) * comb::eulerian(d + 1, m), denom);
  }
  return exact_distribution(d, Setting::affine, std::move(values));
}

TypeDistribution<BigRational> wendel_type_probs(int d) {
  require_dim(d);
  BigInteger denom = 1;
  denom <<= (d + 2);
  std::vector<BigRational> values;
  for (int m = -1; m <= d / 2; ++m) {
    values.emplace_back(types::eta(d, m) * comb::binomial(d + 2, m + 1), denom);
  }
  return exact_distribution(d, Setting::conic, std::move(values));
}

TypeDistribution<BigRational> pos_bridge_type_probs(int d) {
  require_dim(d);
  const BigInteger denom = comb::factorial(d + 3);
  std::vector<BigRational> values;
  for (int m = -1; m <= d / 2; ++m) {
    values.emplace_back(types::eta(d, m) * comb::eulerian(d + 3, m + 1), denom);
  }
  return exact_distribution(d, Setting::conic, std::move(values));
}

TypeDistribution<BigRational> pos_walk_type_probs(int d) {
  require_dim(d);
  BigInteger denom = comb::factorial(d + 2);
  denom <<= (d + 2);
  std::vector<BigRational> values;
  for (int m = -1; m <= d / 2; ++m) {
    values.emplace_back(types::eta(d, m) * comb::b_eulerian(d + 2, m + 1), denom);
  }
  return exact_distribution(d, Setting::conic, std::move(values));
}

BigRational expected_f_walk(int n, int d, int l) {
  if (d < 1 || n < d || l < 0 || l > d - 1) {
    throw DomainError("expected_f_walk needs n >= d >= 1 and 0 <= l <= d-1");
  }
  BigInteger sum = 0;
  for (int i = d; i >= 0; i -= 2) {
    sum += comb::stirling_first_unsigned(n + 1, i) * comb::stirling_second(i, l + 1);
  }
  return BigRational(2 * comb::factorial(l) * sum, comb::factorial(n));
}

BigRational walk_deficit(int n, int d, int l) {
  if (d < 1 || n < d || l < 0 || l > d - 1) {
    throw DomainError("walk_deficit needs n >= d >= 1 and 0 <= l <= d-1");
  }
  BigInteger sum = 0;
  for (int i = d + 2; i <= n + 1; i += 2) {
    sum += comb::stirling_first_unsigned(n + 1, i) * comb::stirling_second(i, l + 1);
  }
  return BigRational(2 * comb::factorial(l) * sum, comb::factorial(n));
}

BigRational wendel_deficit(int n, int d, int j) {
  if (d < 0 || n < 1 || j < 0 || j > d) {
    throw DomainError("wendel_deficit needs n >= 1 and 0 <= j <= d");
  }
  if (n < d + 2) return BigRational(0);
  BigInteger sum = 0;
  for (int r = 0; r <= n - d - 2; ++r) sum += comb::binomial(n - j - 1, r);
  return power_of_two(-(n - j - 1)) * BigRational(comb::binomial(n, j) * sum);
}

BigRational expected_f_wendel(int n, int d, int j) {
  return BigRational(comb::binomial(n, j)) - wendel_deficit(n, d, j);
}

BigRational wendel_full_sphere_prob(int n, int d) {
  if (d < 0 || n < 1) throw DomainError("wendel_full_sphere_prob needs n >= 1, d >= 0");
  BigInteger sum = 0;
  for (int r = d + 1; r <= n - 1; ++r) sum += comb::binomial(n - 1, r);
  return power_of_two(-(n - 1)) * BigRational(sum);
}

BigRational expected_f_conic_bridge(int n, int d, int j) {
  if (d < 0 || n < 1 || j < 0 || j > d) {
    throw DomainError("expected_f_conic_bridge needs n >= 1 and 0 <= j <= d");
  }
  BigInteger sum = 0;
  for (int i = d + 1; i >= 0; i -= 2) {
    sum += comb::stirling_first_unsigned(n, i) * comb::stirling_second(i, j + 1);
  }
  return BigRational(2 * comb::factorial(j + 1) * sum, comb::factorial(n));
}

BigRational conic_bridge_deficit(int n, int d, int j) {
  if (d < 0 || n < 1 || j < 0 || j > d) {
    throw DomainError("conic_bridge_deficit needs n >= 1 and 0 <= j <= d");
  }
  BigInteger sum = 0;
  for (int i = d + 3; i <= n; i += 2) {
    sum += comb::stirling_first_unsigned(n, i) * comb::stirling_second(i, j + 1);
  }
  return BigRational(2 * comb::factorial(j + 1) * sum, comb::factorial(n));
}

BigRational expected_f_conic_walk(int n, int d, int j) {
  if (d < 0 || n < 1 || j < 0 || j > d) {
    throw DomainError("expected_f_conic_walk needs n >= 1 and 0 <= j <= d");
  }
  BigInteger sum = 0;
  for (int i = d; i >= 0; i -= 2) {
    sum += comb::b_stirling_first(n, i) * comb::b_stirling_second(i, j);
  }
  BigInteger denom = comb::factorial(n);
  denom <<= n;
  BigInteger num = 2 * comb::factorial(j) * sum;
  num <<= j;
  return BigRational(num, denom);
}

BigRational conic_walk_deficit(int n, int d, int j) {
  if (d < 0 || n < 1 || j < 0 || j > d) {
    throw DomainError("conic_walk_deficit needs n >= 1 and 0 <= j <= d");
  }
  BigInteger sum = 0;
  for (int i = d + 2; i <= n; i += 2) {
    sum += comb::b_stirling_first(n, i) * comb::b_stirling_second(i, j);
  }
  BigInteger denom = comb::factorial(n);
  denom <<= n;
  BigInteger num = 2 * comb::factorial(j) * sum;
  num <<= j;
  return BigRational(num, denom);
}

DeficitVector<BigRational> conv_rw_deficits(int d) {
  require_dim(d);
  std::vector<BigRational> y;
  for (int l = 0; l <= d / 2; ++l) y.push_back(walk_deficit(d + 1, d, l));
  return types::make_deficits(d, Setting::affine, std::move(y));
}

DeficitVector<BigRational> wendel_deficits(int d) {
  require_dim(d);
  std::vector<BigRational> y;
  for (int l = -1; l <= d / 2; ++l) y.push_back(wendel_deficit(d + 2, d, l + 1));
  return types::make_deficits(d, Setting::conic, std::move(y));
}

DeficitVector<BigRational> pos_bridge_deficits(int d) {
  require_dim(d);
  std::vector<BigRational> y;
  for (int l = -1; l <= d / 2; ++l) y.push_back(conic_bridge_deficit(d + 3, d, l + 1));
  return types::make_deficits(d, Setting::conic, std::move(y));
}

DeficitVector<BigRational> pos_walk_deficits(int d) {
  require_dim(d);
  std::vector<BigRational> y;
  for (int l = -1; l <= d / 2; ++l) y.push_back(conic_walk_deficit(d + 2, d, l + 1));
  return types::make_deficits(d, Setting::conic, std::move(y));
}

TypeDistribution<BigRational> exact_type_probs(const ModelSpec& spec) {
  validate(spec);
  switch (spec.kind) {
    case ModelKind::conv_rw:
      return conv_rw_type_probs(spec.d);
    case ModelKind::wendel:
      return wendel_type_probs(spec.d);
    case ModelKind::pos_bridge:
      return pos_bridge_type_probs(spec.d);
    case ModelKind::pos_walk:
      return pos_walk_type_probs(spec.d);
    default:
      throw DomainError(to_string(spec.kind) + " has no exact rational type law");
  }
}

TypeDistribution<double> type_probs(const ModelSpec& spec, double tol) {
  validate(spec);
  switch (spec.kind) {
    case ModelKind::gaussian:
      return gaussian_type_probs(spec.d, tol);
    case ModelKind::beta:
      return beta_type_probs(spec.d, spec.beta, tol);
    case ModelKind::beta_prime:
      return beta_prime_type_probs(spec.d, spec.beta, tol);
    case ModelKind::sphere:
      return beta_type_probs(spec.d, -1.0, tol);
    case ModelKind::half_sphere:
      return beta_prime_type_probs(spec.d, 0.5 * (spec.d + 1), tol);
    default:
      return types::to_double(exact_type_probs(spec));
  }
}

BigRational clt_cumulative(ModelKind kind, int d, double t) {
  if (!is_exact(kind)) throw DomainError("CLT profiles are defined for exact models only");
  const double spread = kind == ModelKind::wendel ? 4.0 : 12.0;
  const double threshold = 0.5 * d - t * std::sqrt(d / spread);
  const auto dist = exact_type_probs(ModelSpec::of(kind, d));
  BigRational sum = 0;
  for (int m = dist.first(); m <= dist.last(); ++m) {
    if (m >= threshold) sum += dist.at(m);
  }
  return sum;
}

std::vector<CltRow> clt_profile(ModelKind kind, const std::vector<int>& dims,
                                const std::vector<double>& ts) {
  if (!is_exact(kind)) throw DomainError("CLT profiles are defined for exact models only");
  std::vector<CltRow> rows;
  for (int d : dims) {
    for (double t : ts) {
      CltRow row;
      row.d = d;
      row.t = t;
      row.cumulative = to_double(clt_cumulative(kind, d, t));
      row.limit = std::erf(t / bmc::root_two);
      row.gap = std::abs(row.cumulative - row.limit);
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace sylvtypes::formulas
