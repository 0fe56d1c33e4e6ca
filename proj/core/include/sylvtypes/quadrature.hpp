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

#pragma once

// Adaptive Gauss-Kronrod (10/21) quadrature for complex- and vector-valued
// integrands on the whole real line and on finite intervals.
//
// The real line is mapped onto (-1, 1) by x = t / (1 - t^2). An integrand
// decaying like |x|^-p with p >= 2 becomes bounded under this map, and one
// that is smooth in 1/x at infinity stays smooth at t = +-1, so the adaptive
// rule converges on the full line without truncation. Panels are refined in
// order of decreasing error until the summed estimate meets the tolerance.

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace sylvtypes::quadrature {

using Complex = std::complex<double>;
using Integrand = std::function<Complex(double)>;
/// Writes dim values for one abscissa into the output span.
using VectorIntegrand = std::function<void(double, std::span<Complex>)>;

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 0.0;
  int max_panels = 4000;
  int initial_panels = 16;
};

struct QuadratureResult {
  Complex value;
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = false;
};

struct VectorQuadratureResult {
  std::vector<Complex> values;
  /// Largest component error estimate.
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = false;
};

/// Thrown when the panel budget runs out; carries the best estimate.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, VectorQuadratureResult best)
      : std::runtime_error(what), best_(std::move(best)) {}
  const VectorQuadratureResult& best() const { return best_; }

 private:
  VectorQuadratureResult best_;
};

/// Integral of f over the real line with absolute error estimate <= tol.
/// `decay` is the guaranteed polynomial decay exponent of |f| (at least 2).
QuadratureResult integrate_line(const Integrand& f, int decay, double tol);

VectorQuadratureResult integrate_line(const VectorIntegrand& f, std::size_t dim,
                                      int decay, const QuadratureOptions& options);

/// Integral of f over the finite interval [a, b].
QuadratureResult integrate_interval(const Integrand& f, double a, double b, double tol);

VectorQuadratureResult integrate_interval(const VectorIntegrand& f, std::size_t dim,
                                          double a, double b,
                                          const QuadratureOptions& options);

}  // namespace sylvtypes::quadrature
