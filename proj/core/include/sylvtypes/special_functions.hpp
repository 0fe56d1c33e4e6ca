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

// Overflow-safe building blocks for the Gaussian and beta-type integrals.
//
// Phi denotes the standard normal distribution function continued to the
// complex plane; on the imaginary axis Phi(iy) = 1/2 + i H(y) / sqrt(2 pi)
// with H(y) = int_0^y exp(t^2 / 2) dt. The Gaussian integrands only ever
// need psi(x; n) = exp(-x^2 / (2n)) Phi(i x / sqrt(n)), whose imaginary part
// is the bounded function D(y) = exp(-y^2 / 2) H(y) at y = x / sqrt(n).

#include <cmath>
#include <complex>
#include <vector>

namespace sylvtypes::special {

using Complex = std::complex<double>;

/// H(y) = int_0^y exp(t^2/2) dt. Throws std::overflow_error once the value
/// leaves double range (|y| above about 37.6); use scaled_dawson there.
double erfi_like(double y);

/// D(y) = exp(-y^2/2) H(y), finite for every real y.
double scaled_dawson(double y);

/// psi_sign(x; n) = exp(-x^2/(2n)) Phi(sign * i x / sqrt(n)), sign = +1 or -1.
Complex scaled_phi(double x, int n, int sign = +1);

/// psi_+(x; n) as log-modulus and argument.
struct Polar {
  double log_modulus = 0.0;
  double phase = 0.0;

  Complex value() const { return std::polar(std::exp(log_modulus), phase); }
};

Polar scaled_phi_polar(double x, int n);

/// Gamma(beta + 3/2) / (sqrt(pi) Gamma(beta + 1)), beta > -1.
double c_const(double beta);
/// Gamma(beta) / (sqrt(pi) Gamma(beta - 1/2)), beta > 1/2.
double c_tilde_const(double beta);
/// Normalizer of the d-dimensional beta density, beta > -1.
double c_ball(int d, double beta);
/// Normalizer of the d-dimensional beta-prime density, beta > d/2.
double c_tilde_ball(int d, double beta);

/// log cosh(x) without overflow.
double log_cosh(double x);

enum class GKind { beta, beta_prime };

/// G(x) = 1/2 + i c int_0^x cosh(y)^kappa dy, with (c, kappa) fixed by the
/// kind and the parameter alpha:
///   beta:       c = c_const((alpha - 1) / 2),       kappa = alpha
///   beta_prime: c = c_tilde_const((alpha + 1) / 2), kappa = alpha - 1
///
/// The inner integral is tabulated in log form on a uniform grid and refined
/// by Gauss-Legendre inside a cell, so G is available as (log|G|, arg G) for
/// arguments where G itself would overflow.
class GEvaluator {
 public:
  GEvaluator(GKind kind, double alpha);

  GKind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  double kappa() const { return kappa_; }
  double log_inner_constant() const { return log_c_; }

  /// log of int_0^|x| cosh(y)^kappa dy; -infinity at x = 0.
  double log_inner_integral(double x) const;

  Polar evaluate_log(double x) const;
  Complex evaluate(double x) const;

 private:
  double cell_log_integral(double a, double b) const;

  GKind kind_;
  double alpha_;
  double kappa_;
  double log_c_;
  double step_;
  std::vector<double> log_table_;
};

}  // namespace sylvtypes::special
