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

#include <cmath>
#include <numbers>

#include "sylvtypes/errors.hpp"
#include "sylvtypes/quadrature.hpp"

using namespace sylvtypes;
using namespace sylvtypes::quadrature;

TEST_CASE("Gaussian integral over the line") {
  const auto r = integrate_line([](double x) { return Complex(std::exp(-x * x / 2), 0.0); }, 2, 1e-12);
  CHECK(r.converged);
  CHECK(std::abs(r.value - std::sqrt(2 * std::numbers::pi)) < 1e-12);
  CHECK(r.error_estimate <= 1e-12);
  CHECK(r.evaluations > 0);
}

TEST_CASE("algebraic decay") {
  // int dx / (1 + x^2) = pi, int x^2 / (1 + x^2)^2 = pi / 2
  const auto a = integrate_line([](double x) { return Complex(1 / (1 + x * x)); }, 2, 1e-11);
  CHECK(std::abs(a.value - std::numbers::pi) < 1e-10);
  const auto b = integrate_line([](double x) { return Complex(x * x / ((1 + x * x) * (1 + x * x))); }, 2, 1e-11);
  CHECK(std::abs(b.value - std::numbers::pi / 2) < 1e-10);
}

TEST_CASE("oscillatory complex integrand") {
  // int exp(-x^2/2 + 3 i x) dx = sqrt(2 pi) exp(-9/2)
  const auto r = integrate_line([](double x) { return std::exp(Complex(-x * x / 2, 3 * x)); }, 2, 1e-13);
  CHECK(std::abs(r.value - std::sqrt(2 * std::numbers::pi) * std::exp(-4.5)) < 1e-12);
}

TEST_CASE("vector integrand on an interval") {
  QuadratureOptions options;
  options.abs_tol = 1e-12;
  const auto r = integrate_interval(
      [](double x, std::span<Complex> out) {
        out[0] = std::sin(x);
        out[1] = x * x;
        out[2] = Complex(0, std::cos(x));
      },
      3, 0.0, std::numbers::pi, options);
  REQUIRE(r.values.size() == 3);
  CHECK(std::abs(r.values[0] - 2.0) < 1e-12);
  CHECK(std::abs(r.values[1] - std::pow(std::numbers::pi, 3) / 3) < 1e-11);
  CHECK(std::abs(r.values[2]) < 1e-12);
  const auto s = integrate_interval([](double x) { return Complex(std::sqrt(x)); }, 0.0, 1.0, 1e-10);
  CHECK(std::abs(s.value - 2.0 / 3) < 1e-10);
}

TEST_CASE("budget exhaustion reports the best estimate") {
  QuadratureOptions options;
  options.abs_tol = 1e-14;
  options.max_panels = 20;
  try {
    integrate_interval([](double x, std::span<Complex> out) { out[0] = std::sin(1 / (x + 1e-3)); }, 1, 0.0, 1.0,
                       options);
    FAIL("expected QuadratureError");
  } catch (const QuadratureError& e) {
    CHECK_FALSE(e.best().converged);
    CHECK(e.best().values.size() == 1);
    CHECK(e.best().error_estimate > 1e-14);
  }
}

TEST_CASE("argument validation") {
  auto f = [](double x) { return Complex(std::exp(-x * x)); };
  CHECK_THROWS_AS(integrate_line(f, 1, 1e-8), DomainError);
  CHECK_THROWS_AS(integrate_line(f, 2, 0.0), DomainError);
  CHECK_THROWS_AS(integrate_interval(f, 0.0, INFINITY, 1e-8), DomainError);
}
