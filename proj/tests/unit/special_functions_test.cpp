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

#include <doctest.h>

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "sylvtypes/errors.hpp"
#include "sylvtypes/special_functions.hpp"

using namespace sylvtypes;
using namespace sylvtypes::special;
using boost::math::constants::pi;

namespace {

// D(y) = int_0^y exp((t^2 - y^2) / 2) dt has an integrand bounded by 1.
double dawson_oracle(double y) {
  boost::math::quadrature::tanh_sinh<double> ts;
  const double a = std::abs(y);
  const double v = ts.integrate([a](double t) { return std::exp((t - a) * (t + a) / 2); }, 0.0, a);
  return std::copysign(v, y);
}

double inner_oracle(double kappa, double x) {
  boost::math::quadrature::tanh_sinh<double> ts;
  return ts.integrate([kappa](double y) { return std::pow(std::cosh(y), kappa); }, 0.0, x);
}

}  // namespace

TEST_CASE("H(1) from an independent quadrature") {
  boost::math::quadrature::tanh_sinh<double> ts;
  const double h1 = ts.integrate([](double t) { return std::exp(t * t / 2); }, 0.0, 1.0);
  CHECK(erfi_like(1.0) == doctest::Approx(h1).epsilon(1e-14));
  CHECK(erfi_like(1.0) == doctest::Approx(1.1949577).epsilon(1e-7));
}

TEST_CASE("D(y) against the bounded-integrand oracle") {
  for (double y : {-12.0, -4.5, -1.0, -0.1, 0.0, 1e-8, 0.3, 1.0, 2.5, 5.0, 8.9, 9.1, 15.0, 40.0, 400.0}) {
    CAPTURE(y);
    CHECK(scaled_dawson(y) == doctest::Approx(dawson_oracle(y)).epsilon(1e-13));
  }
  // Leading asymptotics D(y) ~ 1/y + 1/y^3.
  CHECK(scaled_dawson(1e4) == doctest::Approx(1e-4).epsilon(1e-8));
}

TEST_CASE("H is odd and overflows loudly") {
  for (double y : {0.2, 1.7, 6.0, 20.0}) CHECK(erfi_like(-y) == -erfi_like(y));
  CHECK(erfi_like(0.0) == 0.0);
  CHECK_THROWS_AS(erfi_like(40.0), std::overflow_error);
}

TEST_CASE("scaled Phi symmetries") {
  for (int n : {1, 2, 5, 12}) {
    for (double x : {-7.0, -0.4, 0.0, 1.3, 22.0}) {
      const Complex plus = scaled_phi(x, n, +1);
      const Complex minus = scaled_phi(x, n, -1);
      CHECK(minus.real() == doctest::Approx(plus.real()));
      CHECK(minus.imag() == doctest::Approx(-plus.imag()));
      const Complex mirrored = scaled_phi(-x, n, +1);
      CHECK(mirrored.imag() == doctest::Approx(minus.imag()));
      const Complex polar = scaled_phi_polar(x, n).value();
      CHECK(std::abs(polar - plus) < 1e-14);
      CHECK(plus.real() == doctest::Approx(0.5 * std::exp(-x * x / (2.0 * n))));
    }
  }
  CHECK_THROWS_AS(scaled_phi(1.0, 0), DomainError);
  CHECK_THROWS_AS(scaled_phi(1.0, 2, 0), DomainError);
}

TEST_CASE("normalizing constants integrate to one") {
  boost::math::quadrature::tanh_sinh<double> ts;
  for (double beta : {-0.5, 0.0, 0.5, 2.0, 7.5}) {
    // xc is the signed distance to the nearer endpoint, so 1 - t^2 keeps full precision.
    const double mass = ts.integrate(
        [beta](double, double xc) {
          const double u = std::abs(xc);
          return std::pow(u * (2 - u), beta);
        },
        -1.0, 1.0);
    CHECK(c_const(beta) * mass == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(c_ball(1, beta) == doctest::Approx(c_const(beta)));
  }
  for (double beta : {1.0, 1.5, 3.0}) {
    const double mass = ts.integrate([beta](double t) { return std::pow(1 + t * t, -beta); },
                                     -std::numeric_limits<double>::infinity(),
                                     std::numeric_limits<double>::infinity());
    CHECK(c_tilde_const(beta) * mass == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(c_tilde_ball(1, beta) == doctest::Approx(c_tilde_const(beta)));
  }
  CHECK(c_const(0.0) == doctest::Approx(0.5));
  CHECK(c_tilde_const(1.0) == doctest::Approx(1 / pi<double>()));
  CHECK(c_ball(2, 0.0) == doctest::Approx(1 / pi<double>()));
  CHECK(c_ball(3, 0.0) == doctest::Approx(3 / (4 * pi<double>())));
  CHECK(c_tilde_ball(2, 1.5) == doctest::Approx(1 / (2 * pi<double>())));
  CHECK_THROWS_AS(c_const(-1.0), DomainError);
  CHECK_THROWS_AS(c_tilde_ball(3, 1.5), DomainError);
}

TEST_CASE("log_cosh") {
  for (double x : {0.0, 0.1, -3.0, 20.0}) CHECK(log_cosh(x) == doctest::Approx(std::log(std::cosh(x))));
  CHECK(log_cosh(1000.0) == doctest::Approx(1000.0 - std::log(2.0)));
  CHECK(log_cosh(-1000.0) == log_cosh(1000.0));
}

TEST_CASE("G in closed form for small parameters") {
  const GEvaluator ball(GKind::beta, 1.0);  // 1/2 + i sinh(x)/2
  const GEvaluator cauchy(GKind::beta_prime, 1.0);  // 1/2 + i x/pi
  for (double x : {-3.0, -0.5, 0.0, 0.25, 2.0, 6.0}) {
    const Complex g = ball.evaluate(x);
    CHECK(g.real() == doctest::Approx(0.5));
    CHECK(g.imag() == doctest::Approx(std::sinh(x) / 2).epsilon(1e-12));
    const Complex h = cauchy.evaluate(x);
    CHECK(h.real() == doctest::Approx(0.5));
    CHECK(h.imag() == doctest::Approx(x / pi<double>()).epsilon(1e-12));
  }
  CHECK(std::isinf(ball.log_inner_integral(0.0)));
}

TEST_CASE("G against direct quadrature of cosh powers") {
  for (auto [kind, alpha] : {std::pair{GKind::beta, 5.0}, std::pair{GKind::beta, 2.5},
                             std::pair{GKind::beta_prime, 3.0}, std::pair{GKind::beta_prime, 0.7}}) {
    const GEvaluator g(kind, alpha);
    const double c = kind == GKind::beta ? c_const((alpha - 1) / 2) : c_tilde_const((alpha + 1) / 2);
    CHECK(std::exp(g.log_inner_constant()) == doctest::Approx(c));
    for (double x : {0.05, 0.7, 3.0, 11.0, 39.9, 41.0, 55.0}) {
      CAPTURE(alpha);
      CAPTURE(x);
      const double expected = std::log(inner_oracle(g.kappa(), x));
      CHECK(g.log_inner_integral(x) == doctest::Approx(expected).epsilon(1e-12));
      CHECK(g.log_inner_integral(-x) == g.log_inner_integral(x));
    }
    const Polar p = g.evaluate_log(3.0);
    const Complex direct = g.evaluate(3.0);
    CHECK(std::abs(p.value() - direct) < 1e-12 * std::abs(direct));
    CHECK(g.evaluate(-3.0).imag() == doctest::Approx(-direct.imag()));
  }
  // Far out G overflows in value but not in log form.
  const GEvaluator big(GKind::beta, 12.0);
  const Polar far = big.evaluate_log(80.0);
  CHECK(std::isfinite(far.log_modulus));
  CHECK(far.log_modulus > 700.0);
  CHECK(far.phase == doctest::Approx(pi<double>() / 2).epsilon(1e-12));
  CHECK_THROWS_AS(GEvaluator(GKind::beta_prime, 0.0), DomainError);
}
