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

#include "sylvtypes/verification.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <complex>
#include <functional>
#include <span>
#include <sstream>

#include "sylvtypes/errors.hpp"
#include "sylvtypes/exact_combinatorics.hpp"
#include "sylvtypes/model_formulas.hpp"
#include "sylvtypes/monte_carlo.hpp"
#include "sylvtypes/quadrature.hpp"
#include "sylvtypes/special_functions.hpp"
#include "sylvtypes/type_algebra.hpp"

namespace sylvtypes::verify {
namespace {

namespace comb = sylvtypes::combinatorics;
namespace bmc = boost::math::double_constants;
using types::Setting;

// Collects comparisons and remembers the first failure.
class Tally {
 public:
  Tally(std::string suite, std::string name) : suite_(std::move(suite)), name_(std::move(name)) {}

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++checked_;
    if (!ok && failures_++ == 0) first_failure_ = describe();
  }

  CheckResult result() const {
    CheckResult r{suite_, name_, failures_ == 0, {}};
    std::ostringstream detail;
    if (failures_ == 0) {
      detail << checked_ << " comparisons";
    } else {
      detail << failures_ << " of " << checked_ << " failed; first: " << first_failure_;
    }
    r.detail = detail.str();
    return r;
  }

 private:
  std::string suite_;
  std::string name_;
  long checked_ = 0;
  long failures_ = 0;
  std::string first_failure_;
};

std::string at(int n, int k) { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; }

int sign(int e) { return e % 2 == 0 ? 1 : -1; }

BigInteger pow2(int e) {
  BigInteger p = 1;
  p <<= e;
  return p;
}

BigRational pow_rational(const BigRational& base, int e) {
  BigRational p = 1;
  for (int i = 0; i < e; ++i) p *= base;
  return p;
}

// Polynomial in z with integer coefficients, index = degree.
using Poly = std::vector<BigInteger>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, BigInteger(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly monomial(int degree, const BigInteger& c = 1) {
  Poly p(degree + 1, BigInteger(0));
  p[degree] = c;
  return p;
}

Poly one_minus_z_power(int e) {
  Poly p{BigInteger(1)};
  for (int i = 0; i < e; ++i) p = poly_mul(p, Poly{BigInteger(1), BigInteger(-1)});
  return p;
}

template <class Fn>
CheckResult pipeline(const std::string& name, int max_d, Fn fn) {
  Tally t("pipeline", name);
  for (int d = 2; d <= max_d; ++d) {
    const auto [solved, closed] = fn(d);
    t.expect(solved.values == closed.values, [&, d = d] {
      return "d=" + std::to_string(d) + " solver and closed form differ";
    });
  }
  return t.result();
}

CheckResult vanishing_integrals() {
  Tally t("quadrature", "vanishing_phi_powers");
  for (int n = 2; n <= 12; ++n) {
    for (int s : {+1, -1}) {
      auto f = [n, s](double x) { return std::pow(special::scaled_phi(x, n, s), n); };
      const auto r = quadrature::integrate_line(f, n, 1e-11);
      t.expect(std::abs(r.value) <= 1e-9, [&] {
        return "n=" + std::to_string(n) + " gives |I|=" + std::to_string(std::abs(r.value));
      });
    }
  }
  return t.result();
}

CheckResult vanishing_moments() {
  Tally t("quadrature", "vanishing_weighted_moments");
  for (int n = 2; n <= 8; ++n) {
    for (int l = 0; l <= n - 2; ++l) {
      auto f = [n, l](double x) {
        return std::pow(special::scaled_phi(x, 1, +1), n) * std::pow(x, l);
      };
      const auto r = quadrature::integrate_line(f, n - l, 1e-11);
      t.expect(std::abs(r.value) <= 1e-9, [&] {
        return at(n, l) + " gives |I|=" + std::to_string(std::abs(r.value));
      });
    }
  }
  return t.result();
}

CheckResult gaussian_integral() {
  Tally t("quadrature", "gaussian_integral");
  auto f = [](double x) { return quadrature::Complex(std::exp(-0.5 * x * x)); };
  const auto r = quadrature::integrate_line(f, 2, 1e-13);
  t.expect(std::abs(r.value.real() - bmc::root_two_pi) <= 1e-12,
           [&] { return "value " + std::to_string(r.value.real()); });
  return t.result();
}

CheckResult phi_reflection() {
  Tally t("quadrature", "phi_reflection");
  for (int n : {2, 5, 12}) {
    for (double x = -30.0; x <= 30.0; x += 0.37) {
      const double lhs = special::scaled_phi(x, n, +1).real() + special::scaled_phi(x, n, -1).real();
      const double rhs = std::exp(-x * x / (2.0 * n));
      t.expect(std::abs(lhs - rhs) <= 1e-12, [&] { return "x=" + std::to_string(x); });
    }
  }
  return t.result();
}

CheckResult gaussian_sums() {
  Tally t("quadrature", "gaussian_probabilities_sum_to_one");
  for (int d = 2; d <= 10; ++d) {
    const double total = formulas::gaussian_type_probs(d).total();
    t.expect(std::abs(total - 1.0) <= 1e-8,
             [&] { return "d=" + std::to_string(d) + " total " + std::to_string(total); });
  }
  return t.result();
}

CheckResult youden_boundaries() {
  Tally t("quadrature", "youden_boundaries");
  const double p21 = formulas::youden(2, 1);
  t.expect(std::abs(p21 - 1.0) <= 1e-10, [&] { return "P(2,1)=" + std::to_string(p21); });
  for (int n = 2; n <= 10; ++n) {
    for (int k : {0, n}) {
      const double p = formulas::youden(n, k);
      t.expect(std::abs(p) <= 1e-9, [&] { return "P" + at(n, k) + "=" + std::to_string(p); });
    }
  }
  return t.result();
}

CheckResult g_evaluator_identities() {
  Tally t("quadrature", "g_evaluator_identities");
  const special::GEvaluator cauchy(special::GKind::beta_prime, 1.0);
  for (double x = -50.0; x <= 50.0; x += 0.73) {
    const auto g = cauchy.evaluate(x);
    t.expect(std::abs(g - quadrature::Complex(0.5, x / bmc::pi)) <= 1e-12 * (1.0 + std::abs(x)),
             [&] { return "cauchy line at x=" + std::to_string(x); });
  }
  const special::GEvaluator beta(special::GKind::beta, 5.0);
  for (double x : {0.3, 1.0, 3.0}) {
    const auto sum = beta.evaluate(x) + beta.evaluate(-x);
    t.expect(std::abs(sum - 1.0) <= 1e-12, [&] { return "reflection at x=" + std::to_string(x); });
  }
  return t.result();
}

CheckResult honest_errors() {
  Tally t("quadrature", "honest_error_estimates");
  std::vector<std::function<quadrature::Complex(double)>> integrands = {
      [](double x) { return std::pow(special::scaled_phi(x, 5, +1), 5); },
      [](double x) { return std::pow(special::scaled_phi(x, 1, +1), 4) * x * x; },
      [](double x) { return quadrature::Complex(1.0 / (1.0 + x * x)); },
  };
  const int decays[] = {5, 2, 2};
  for (std::size_t i = 0; i < integrands.size(); ++i) {
    const auto coarse = quadrature::integrate_line(integrands[i], decays[i], 1e-8);
    const auto fine = quadrature::integrate_line(integrands[i], decays[i], 5e-9);
    t.expect(std::abs(coarse.value - fine.value) <= coarse.error_estimate,
             [&] { return "integrand " + std::to_string(i); });
  }
  return t.result();
}

CheckResult mc_coverage(const ModelSpec& spec, const std::vector<double>& target,
                        const VerifyOptions& options) {
  mc::McOptions mo;
  mo.samples = options.samples;
  mo.seed = options.seed;
  mo.workers = options.workers;
  mo.z = options.z;
  const auto report = mc::estimate(spec, mo);
  Tally t("mc", "coverage " + describe(spec));
  for (std::size_t i = 0; i < target.size(); ++i) {
    const int m = report.first_type + static_cast<int>(i);
    t.expect(report.intervals[i].contains(target[i]), [&] {
      std::ostringstream os;
      os << "m=" << m << " target " << target[i] << " outside [" << report.intervals[i].lo
         << ", " << report.intervals[i].hi << "]";
      return os.str();
    });
  }
  t.expect(report.healthy, [&] {
    return "degenerate fraction " + std::to_string(report.degenerate_fraction());
  });
  return t.result();
}

CheckResult oracle_agreement(const VerifyOptions& options) {
  Tally t("mc", "radon_type_vs_facet_oracle");
  for (int d = 2; d <= 4; ++d) {
    mc::RngStream rng(options.seed, 1000 + d);
    for (int i = 0; i < 2000; ++i) {
      const auto cloud = mc::sample(ModelSpec::gaussian(d), rng);
      const auto m = mc::radon_type(cloud);
      const auto facets = mc::facet_count_oracle(cloud);
      if (!m || !facets) continue;
      t.expect(*facets == types::facet_count(d, *m), [&] {
        return "d=" + std::to_string(d) + " type " + std::to_string(*m) + " but " +
               std::to_string(*facets) + " facets";
      });
    }
  }
  return t.result();
}

std::vector<double> as_vector(const types::TypeDistribution<double>& dist) { return dist.values; }

}  // namespace

CheckResult check_frobenius_type_a(int max_n) {
  Tally t("identities", "frobenius_type_a");
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 0; k <= n; ++k) {
      BigInteger sum = 0;
      for (int j = 0; j <= n; ++j) {
        sum += sign(n + j + k) * comb::binomial(n - j, k) * comb::stirling_second(n, j) *
               comb::factorial(j);
      }
      t.expect(sum == comb::eulerian(n, k), [&] { return at(n, k); });
    }
  }
  return t.result();
}

CheckResult check_frobenius_zero(int max_n) {
  Tally t("identities", "frobenius_variant_zero");
  for (int n = 1; n <= max_n; ++n) {
    for (int m = 0; m <= n - 1; ++m) {
      BigInteger sum = 0;
      for (int l = 0; l <= m; ++l) {
        sum += sign(m + l) * comb::binomial(n - l, n - m) * comb::factorial(l) *
               comb::stirling_second(n + 1, l + 1);
      }
      t.expect(sum == comb::eulerian(n, m), [&] { return at(n, m); });
    }
  }
  return t.result();
}

CheckResult check_frobenius_type_b(int max_n) {
  Tally t("identities", "frobenius_type_b");
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 0; k <= n; ++k) {
      BigInteger sum = 0;
      for (int j = 0; j <= n; ++j) {
        sum += sign(n + j + k) * comb::binomial(n - j, k) * comb::b_stirling_second(n, j) *
               pow2(j) * comb::factorial(j);
      }
      t.expect(sum == comb::b_eulerian(n, k), [&] { return at(n, k); });
    }
  }
  return t.result();
}

CheckResult check_euler_frobenius_symmetry(int max_n) {
  Tally t("identities", "euler_frobenius_symmetry");
  const BigRational rhos[] = {make_rational(0), make_rational(1, 3), make_rational(1, 2)};
  for (const auto& rho : rhos) {
    for (int n = 0; n <= max_n; ++n) {
      for (int k = 0; k <= n; ++k) {
        t.expect(comb::euler_frobenius(n, k, rho) == comb::euler_frobenius(n, n - k, 1 - rho),
                 [&] { return at(n, k) + " rho=" + to_string(rho); });
      }
    }
  }
  return t.result();
}

CheckResult check_euler_frobenius_special_values(int max_n) {
  Tally t("identities", "euler_frobenius_special_values");
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 0; k <= n; ++k) {
      const BigRational e(comb::eulerian(n, k));
      t.expect(comb::euler_frobenius(n, k, 1) == e, [&] { return "rho=1 " + at(n, k); });
      t.expect(comb::euler_frobenius(n, k + 1, 0) == e, [&] { return "rho=0 " + at(n, k); });
      const BigRational b = BigRational(pow2(n)) * comb::euler_frobenius(n, k, make_rational(1, 2));
      t.expect(b == BigRational(comb::b_eulerian(n, k)), [&] { return "rho=1/2 " + at(n, k); });
    }
  }
  return t.result();
}

CheckResult check_row_sums(int max_n) {
  Tally t("identities", "row_sums");
  for (int n = 1; n <= max_n; ++n) {
    BigInteger e = 0, b = 0, c = 0;
    for (int k = 0; k <= n; ++k) {
      e += comb::eulerian(n, k);
      b += comb::b_eulerian(n, k);
      c += comb::stirling_first_unsigned(n, k);
    }
    const BigInteger f = comb::factorial(n);
    t.expect(e == f, [&] { return "eulerian row " + std::to_string(n); });
    t.expect(b == pow2(n) * f, [&] { return "B-eulerian row " + std::to_string(n); });
    t.expect(c == f, [&] { return "cycle row " + std::to_string(n); });
  }
  return t.result();
}

CheckResult check_eulerian_symmetry(int max_n) {
  Tally t("identities", "eulerian_symmetry");
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      t.expect(comb::eulerian(n, k) == comb::eulerian(n, n - k - 1), [&] { return at(n, k); });
    }
    for (int k = 0; k <= n; ++k) {
      t.expect(comb::b_eulerian(n, k) == comb::b_eulerian(n, n - k),
               [&] { return "B" + at(n, k); });
    }
  }
  return t.result();
}

CheckResult check_orthogonality_a(int max_n) {
  Tally t("identities", "orthogonality_type_a");
  for (int n = 2; n <= max_n; ++n) {
    for (int m = 1; m < n; ++m) {
      BigInteger even = 0, odd = 0;
      for (int i = 0; i <= n; ++i) {
        const BigInteger term = comb::stirling_first_unsigned(n, i) * comb::stirling_second(i, m);
        (i % 2 == 0 ? even : odd) += term;
      }
      const BigRational expected(comb::factorial(n - 1) * comb::binomial(n, m),
                                 2 * comb::factorial(m - 1));
      t.expect(BigRational(even) == expected && BigRational(odd) == expected,
               [&] { return at(n, m); });
    }
  }
  return t.result();
}

CheckResult check_orthogonality_b(int max_n) {
  Tally t("identities", "orthogonality_type_b");
  for (int n = 1; n <= max_n; ++n) {
    for (int m = 0; m < n; ++m) {
      BigInteger even = 0, odd = 0;
      for (int i = 0; i <= n; ++i) {
        const BigInteger term = comb::b_stirling_first(n, i) * comb::b_stirling_second(i, m);
        (i % 2 == 0 ? even : odd) += term;
      }
      const BigRational expected(pow2(n) * comb::factorial(n) * comb::binomial(n, m),
                                 2 * pow2(m) * comb::factorial(m));
      t.expect(BigRational(even) == expected && BigRational(odd) == expected,
               [&] { return at(n, m); });
    }
  }
  return t.result();
}

CheckResult check_generating_function(int max_n, int terms) {
  Tally t("identities", "euler_frobenius_generating_function");
  const BigRational half = make_rational(1, 2);
  const BigRational rhos[] = {make_rational(0), make_rational(1, 3), make_rational(1, 2),
                              make_rational(1)};
  for (const auto& rho : rhos) {
    for (int n = 1; n <= max_n; ++n) {
      // P(1/2) / (1/2)^(n+1) against the truncated series at x = 1/2.
      BigRational lhs = 0;
      for (int k = 0; k <= n; ++k) lhs += comb::euler_frobenius(n, k, rho) * pow_rational(half, k);
      lhs *= BigRational(pow2(n + 1));
      BigRational partial = 0;
      for (int j = 0; j <= terms; ++j) {
        partial += pow_rational(rho + j, n) * pow_rational(half, j);
      }
      // Consecutive tail terms shrink at least by `ratio`, so the tail is
      // at most first / (1 - ratio).
      const BigRational first = pow_rational(rho + terms + 1, n) * pow_rational(half, terms + 1);
      const BigRational ratio =
          pow_rational((rho + terms + 2) / (rho + terms + 1), n) * half;
      const BigRational bound = first / (1 - ratio);
      const BigRational gap = lhs - partial;
      t.expect(ratio < 1 && gap >= 0 && gap <= bound,
               [&] { return "n=" + std::to_string(n) + " rho=" + to_string(rho); });
    }
  }
  return t.result();
}

CheckResult check_b_stirling_integrality(int max_n) {
  Tally t("identities", "b_stirling_integrality");
  const BigRational half = make_rational(1, 2);
  for (int n = 0; n <= max_n; ++n) {
    for (int k = 0; k <= n; ++k) {
      const BigRational scaled = BigRational(pow2(n - k)) * comb::r_stirling_second(n, k, half);
      t.expect(is_integral(scaled) && numerator_of(scaled) == comb::b_stirling_second(n, k),
               [&] { return at(n, k); });
    }
  }
  return t.result();
}

CheckResult check_type_matrix_identity(int max_d) {
  Tally t("identities", "type_matrix_inverse");
  for (int d = 1; d <= max_d; ++d) {
    for (Setting s : {Setting::affine, Setting::conic}) {
      const int lo = types::min_type(s);
      const int hi = types::max_type(d);
      for (int j = lo; j <= hi; ++j) {
        for (int l = lo; l <= hi; ++l) {
          BigRational sum = 0;
          for (int m = std::max(l, lo); m <= j; ++m) {
            sum += BigRational(types::forward_coefficient(d, j, m)) *
                   types::inverse_coefficient(d, m, l);
          }
          t.expect(sum == (j == l ? 1 : 0), [&] {
            return "d=" + std::to_string(d) + " " + types::to_string(s) + " " + at(j, l);
          });
        }
      }
    }
  }
  return t.result();
}

CheckResult check_binomial_lemma(int max_d) {
  Tally t("identities", "binomial_polynomial_lemma");
  for (int d = 0; d <= max_d; ++d) {
    for (int m = 0; m <= d + 1; ++m) {
      Poly lhs(d + 3, BigInteger(0));
      for (int l = 0; l <= m; ++l) {
        lhs[d + 1 - l] += sign(m + l) * comb::binomial(d + 1 - l, d + 1 - m) *
                          comb::binomial(d + 2, l + 1);
      }
      Poly rhs = poly_mul(monomial(d + 1 - m), one_minus_z_power(m + 1));
      rhs.resize(d + 3, BigInteger(0));
      rhs[d + 2] += sign(m);
      for (auto& c : rhs) c *= comb::binomial(d + 2, m + 1);
      t.expect(lhs == rhs, [&] { return "d=" + std::to_string(d) + " m=" + std::to_string(m); });
    }
  }
  return t.result();
}

CheckResult check_pipeline_conv_rw(int max_d) {
  return pipeline("conv_rw_walk_deficits", max_d, [](int d) {
    return std::pair{types::solve_affine(formulas::conv_rw_deficits(d)),
                     formulas::conv_rw_type_probs(d)};
  });
}

CheckResult check_pipeline_wendel(int max_d) {
  return pipeline("wendel_donoho_tanner_deficits", max_d, [](int d) {
    return std::pair{types::solve_conic(formulas::wendel_deficits(d)),
                     formulas::wendel_type_probs(d)};
  });
}

CheckResult check_pipeline_pos_bridge(int max_d) {
  return pipeline("pos_bridge_deficits", max_d, [](int d) {
    return std::pair{types::solve_conic(formulas::pos_bridge_deficits(d)),
                     formulas::pos_bridge_type_probs(d)};
  });
}

CheckResult check_pipeline_pos_walk(int max_d) {
  return pipeline("pos_walk_deficits", max_d, [](int d) {
    return std::pair{types::solve_conic(formulas::pos_walk_deficits(d)),
                     formulas::pos_walk_type_probs(d)};
  });
}

CheckResult check_exact_sums(int max_d) {
  Tally t("pipeline", "exact_distributions_sum_to_one");
  for (int d = 2; d <= max_d; ++d) {
    for (ModelKind kind : {ModelKind::conv_rw, ModelKind::wendel, ModelKind::pos_bridge,
                           ModelKind::pos_walk}) {
      const auto dist = formulas::exact_type_probs(ModelSpec::of(kind, d));
      bool nonnegative = true;
      for (const auto& p : dist.values) nonnegative = nonnegative && p >= 0;
      t.expect(nonnegative && dist.total() == 1,
               [&] { return to_string(kind) + " d=" + std::to_string(d); });
    }
  }
  return t.result();
}

CheckResult check_complement_pairs(int max_n) {
  Tally t("pipeline", "expected_f_complement_pairs");
  for (int n = 1; n <= max_n; ++n) {
    for (int d = 1; d <= n; ++d) {
      for (int l = 0; l <= d - 1; ++l) {
        t.expect(formulas::expected_f_walk(n, d, l) + formulas::walk_deficit(n, d, l) ==
                     BigRational(comb::binomial(n + 1, l + 1)),
                 [&] { return "walk n=" + std::to_string(n) + " d=" + std::to_string(d); });
      }
    }
    for (int d = 0; d + 1 <= n; ++d) {
      for (int j = 0; j <= d; ++j) {
        // A bridge of n steps spans at most n - 1 directions, so general
        // position in R^(d+1) needs n >= d + 2.
        if (n >= d + 2) {
          t.expect(formulas::expected_f_conic_bridge(n, d, j) + formulas::conic_bridge_deficit(n, d, j) ==
                       BigRational(comb::binomial(n - 1, j)),
                   [&] { return "bridge n=" + std::to_string(n) + " d=" + std::to_string(d); });
        }
        t.expect(formulas::expected_f_conic_walk(n, d, j) + formulas::conic_walk_deficit(n, d, j) ==
                     BigRational(comb::binomial(n, j)),
                 [&] { return "conic walk n=" + std::to_string(n) + " d=" + std::to_string(d); });
      }
    }
  }
  return t.result();
}

CheckResult check_overdetermined_equations(int max_d) {
  Tally t("pipeline", "discarded_equations_hold");
  for (int d = 2; d <= max_d; ++d) {
    auto compare = [&](const types::TypeDistribution<BigRational>& dist, const char* label,
                       const std::function<BigRational(int)>& deficit) {
      const auto f = types::expected_f_vector(dist);
      for (int j = dist.first(); j <= d - 1; ++j) {
        const BigRational expected = BigRational(comb::binomial(d + 2, j + 1)) - deficit(j);
        t.expect(f[j - dist.first()] == expected, [&] {
          return std::string(label) + " d=" + std::to_string(d) + " j=" + std::to_string(j);
        });
      }
    };
    compare(formulas::conv_rw_type_probs(d), "conv-rw",
            [d](int j) { return formulas::walk_deficit(d + 1, d, j); });
    compare(formulas::wendel_type_probs(d), "wendel",
            [d](int j) { return formulas::wendel_deficit(d + 2, d, j + 1); });
    compare(formulas::pos_bridge_type_probs(d), "pos-bridge",
            [d](int j) { return formulas::conic_bridge_deficit(d + 3, d, j + 1); });
    compare(formulas::pos_walk_type_probs(d), "pos-walk",
            [d](int j) { return formulas::conic_walk_deficit(d + 2, d, j + 1); });
  }
  return t.result();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"identities", "quadrature", "pipeline", "mc"};
  return names;
}

std::vector<CheckResult> run_suite(std::string_view suite, const VerifyOptions& options) {
  if (suite == "identities") {
    return {check_frobenius_type_a(30),       check_frobenius_zero(30),
            check_frobenius_type_b(25),       check_euler_frobenius_symmetry(10),
            check_euler_frobenius_special_values(12), check_row_sums(30),
            check_eulerian_symmetry(30),      check_orthogonality_a(15),
            check_orthogonality_b(12),        check_generating_function(8, 40),
            check_b_stirling_integrality(20), check_type_matrix_identity(50),
            check_binomial_lemma(20)};
  }
  if (suite == "quadrature") {
    return {gaussian_integral(), vanishing_integrals(), vanishing_moments(), phi_reflection(),
            gaussian_sums(),     youden_boundaries(),   g_evaluator_identities(),
            honest_errors()};
  }
  if (suite == "pipeline") {
    return {check_pipeline_conv_rw(12),  check_pipeline_wendel(12), check_pipeline_pos_bridge(12),
            check_pipeline_pos_walk(12), check_exact_sums(40),      check_complement_pairs(10),
            check_overdetermined_equations(8)};
  }
  if (suite == "mc") {
    std::vector<CheckResult> out;
    out.push_back(mc_coverage(ModelSpec::gaussian(2), as_vector(formulas::gaussian_type_probs(2)),
                              options));
    out.push_back(mc_coverage(ModelSpec::beta_model(3, 0.0),
                              as_vector(formulas::beta_type_probs(3, 0.0)), options));
    out.push_back(mc_coverage(ModelSpec::of(ModelKind::half_sphere, 3),
                              as_vector(formulas::type_probs(ModelSpec::of(ModelKind::half_sphere, 3))),
                              options));
    for (auto [kind, d] : {std::pair{ModelKind::conv_rw, 3}, std::pair{ModelKind::wendel, 2},
                           std::pair{ModelKind::pos_walk, 2}, std::pair{ModelKind::pos_bridge, 2}}) {
      const auto spec = ModelSpec::of(kind, d);
      out.push_back(mc_coverage(spec, as_vector(types::to_double(formulas::exact_type_probs(spec))),
                                options));
    }
    out.push_back(oracle_agreement(options));
    return out;
  }
  throw DomainError("unknown verification suite '" + std::string(suite) + "'");
}

}  // namespace sylvtypes::verify
