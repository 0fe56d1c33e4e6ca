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

#include "sylvtypes/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

#include "sylvtypes/errors.hpp"

namespace sylvtypes::quadrature {
namespace {

// 21-point Kronrod abscissae (descending, last is the centre) and weights;
// odd positions are the nodes of the embedded 10-point Gauss rule.
constexpr std::array<double, 11> kKronrodNodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kKronrodWeights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kGaussWeights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr double kEpsilon = std::numeric_limits<double>::epsilon();

struct Panel {
  double a = 0.0;
  double b = 0.0;
  std::vector<Complex> value;
  double error = 0.0;

  bool operator<(const Panel& other) const { return error < other.error; }
};

// Integrand on the panel variable, already including the Jacobian.
using PanelFunction = std::function<void(double, std::span<Complex>)>;

class Integrator {
 public:
  Integrator(PanelFunction f, std::size_t dim) : f_(std::move(f)), dim_(dim) {
    fc_.resize(dim_);
    f1_.resize(dim_);
    f2_.resize(dim_);
  }

  Panel rule(double a, double b) {
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    std::vector<Complex> kronrod(dim_), gauss(dim_);
    std::vector<double> abs_sum(dim_, 0.0);

    f_(centre, fc_);
    for (std::size_t c = 0; c < dim_; ++c) {
      kronrod[c] = kKronrodWeights[10] * fc_[c];
      abs_sum[c] = kKronrodWeights[10] * std::abs(fc_[c]);
    }
    for (std::size_t i = 0; i < 10; ++i) {
      const double dx = half * kKronrodNodes[i];
      f_(centre - dx, f1_);
      f_(centre + dx, f2_);
      for (std::size_t c = 0; c < dim_; ++c) {
        const Complex sum = f1_[c] + f2_[c];
        kronrod[c] += kKronrodWeights[i] * sum;
        abs_sum[c] += kKronrodWeights[i] * (std::abs(f1_[c]) + std::abs(f2_[c]));
        if (i % 2 == 1) gauss[c] += kGaussWeights[i / 2] * sum;
      }
    }
    evaluations_ += 21;

    Panel panel{a, b, std::vector<Complex>(dim_), 0.0};
    for (std::size_t c = 0; c < dim_; ++c) {
      panel.value[c] = kronrod[c] * half;
      const double err = std::abs((kronrod[c] - gauss[c]) * half);
      const double floor = 50.0 * kEpsilon * abs_sum[c] * std::abs(half);
      panel.error = std::max(panel.error, std::max(err, floor));
    }
    return panel;
  }

  long evaluations() const { return evaluations_; }

 private:
  PanelFunction f_;
  std::size_t dim_;
  std::vector<Complex> fc_, f1_, f2_;
  long evaluations_ = 0;
};

VectorQuadratureResult adapt(PanelFunction f, std::size_t dim, double a, double b,
                             const QuadratureOptions& options) {
  if (dim == 0) throw DomainError("quadrature: integrand dimension must be positive");
  if (!(options.abs_tol > 0.0) && !(options.rel_tol > 0.0)) {
    throw DomainError("quadrature: tolerance must be positive");
  }
  Integrator integrator(std::move(f), dim);
  std::priority_queue<Panel> panels;
  const int initial = std::max(1, options.initial_panels);
  for (int i = 0; i < initial; ++i) {
    const double lo = a + (b - a) * i / initial;
    const double hi = (i + 1 == initial) ? b : a + (b - a) * (i + 1) / initial;
    panels.push(integrator.rule(lo, hi));
  }

  auto totals = [&] {
    VectorQuadratureResult result;
    result.values.assign(dim, Complex{});
    auto copy = panels;
    double error = 0.0;
    while (!copy.empty()) {
      const Panel& p = copy.top();
      for (std::size_t c = 0; c < dim; ++c) result.values[c] += p.value[c];
      error += p.error;
      copy.pop();
    }
    result.error_estimate = error;
    result.evaluations = integrator.evaluations();
    return result;
  };

  // Running sums avoid re-walking the heap on every iteration.
  double error_sum = 0.0;
  std::vector<Complex> value_sum(dim);
  {
    auto copy = panels;
    while (!copy.empty()) {
      error_sum += copy.top().error;
      for (std::size_t c = 0; c < dim; ++c) value_sum[c] += copy.top().value[c];
      copy.pop();
    }
  }

  auto target = [&] {
    double scale = 0.0;
    for (const auto& v : value_sum) scale = std::max(scale, std::abs(v));
    return std::max(options.abs_tol, options.rel_tol * scale);
  };

  while (error_sum > target()) {
    if (static_cast<int>(panels.size()) >= options.max_panels) {
      auto best = totals();
      throw QuadratureError("quadrature did not converge: error estimate " +
                                std::to_string(best.error_estimate) + " after " +
                                std::to_string(best.evaluations) + " evaluations",
                            best);
    }
    Panel worst = panels.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      auto best = totals();
      throw QuadratureError("quadrature: panel cannot be subdivided further", best);
    }
    panels.pop();
    Panel left = integrator.rule(worst.a, mid);
    Panel right = integrator.rule(mid, worst.b);
    error_sum += left.error + right.error - worst.error;
    for (std::size_t c = 0; c < dim; ++c) {
      value_sum[c] += left.value[c] + right.value[c] - worst.value[c];
    }
    panels.push(std::move(left));
    panels.push(std::move(right));
  }

  auto result = totals();
  result.converged = true;
  return result;
}

QuadratureResult scalar_result(const VectorQuadratureResult& r) {
  return QuadratureResult{r.values.front(), r.error_estimate, r.evaluations, r.converged};
}

}  // namespace

VectorQuadratureResult integrate_line(const VectorIntegrand& f, std::size_t dim,
                                      int decay, const QuadratureOptions& options) {
  if (decay < 2) {
    throw DomainError("integrate_line: integrand must decay at least like |x|^-2");
  }
  std::vector<Complex> buffer(dim);
  PanelFunction mapped = [&f, buffer, dim](double t, std::span<Complex> out) mutable {
    const double s = 1.0 - t * t;
    const double x = t / s;
    const double jacobian = (1.0 + t * t) / (s * s);
    if (!std::isfinite(x) || !std::isfinite(jacobian)) {
      for (std::size_t c = 0; c < dim; ++c) out[c] = 0.0;
      return;
    }
    f(x, out);
    for (std::size_t c = 0; c < dim; ++c) out[c] *= jacobian;
  };
  return adapt(std::move(mapped), dim, -1.0, 1.0, options);
}

QuadratureResult integrate_line(const Integrand& f, int decay, double tol) {
  QuadratureOptions options;
  options.abs_tol = tol;
  VectorIntegrand wrapped = [&f](double x, std::span<Complex> out) { out[0] = f(x); };
  return scalar_result(integrate_line(wrapped, 1, decay, options));
}

VectorQuadratureResult integrate_interval(const VectorIntegrand& f, std::size_t dim,
                                          double a, double b,
                                          const QuadratureOptions& options) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("integrate_interval: bounds must be finite");
  }
  if (a == b) {
    VectorQuadratureResult r;
    r.values.assign(dim, Complex{});
    r.converged = true;
    return r;
  }
  PanelFunction direct = [&f](double x, std::span<Complex> out) { f(x, out); };
  return adapt(std::move(direct), dim, a, b, options);
}

QuadratureResult integrate_interval(const Integrand& f, double a, double b, double tol) {
  QuadratureOptions options;
  options.abs_tol = tol;
  options.initial_panels = 1;
  VectorIntegrand wrapped = [&f](double x, std::span<Complex> out) { out[0] = f(x); };
  return scalar_result(integrate_interval(wrapped, 1, a, b, options));
}

}  // namespace sylvtypes::quadrature
