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

#include <vector>

#include "sylvtypes/big_number.hpp"
#include "sylvtypes/model_spec.hpp"
#include "sylvtypes/type_algebra.hpp"

namespace sylvtypes::formulas {

using types::DeficitVector;
using types::TypeDistribution;

/// Absolute accuracy used when a caller passes tol <= 0: 1e-10 up to d = 8,
/// 1e-8 above.
double default_tolerance(int d);

// Continuous models, evaluated by quadrature.

/// Gaussian points, 2 <= d <= 12.
TypeDistribution<double> gaussian_type_probs(int d, double tol = 0.0);

/// Probability that the mean of n standard Gaussians lies between the k-th
/// and (k+1)-st order statistics. Defined for 0 <= k <= n, where the
/// boundary values vanish.
double youden(int n, int k, double tol = 1e-11);

/// Beta points with density proportional to (1 - |x|^2)^beta on the unit
/// ball; beta = -1 is the uniform law on the sphere.
TypeDistribution<double> beta_type_probs(int d, double beta, double tol = 0.0);

/// Beta-prime points with density proportional to (1 + |x|^2)^-beta.
TypeDistribution<double> beta_prime_type_probs(int d, double beta, double tol = 0.0);

/// Probability that d+2 uniform points in a d-ball form a simplex.
double kingman_simplex_prob(int d);

struct AngleSum {
  int n = 0;
  int k = 0;
  double value = 0.0;
  double error_estimate = 0.0;
};

/// Expected internal angle sums at the k-vertex faces of a random simplex
/// with n vertices (Gaussian, beta and beta-prime vertices).
AngleSum angle_sum_gauss(int n, int k, double tol = 1e-12);
AngleSum angle_sum_beta(int n, int k, double beta, double tol = 1e-12);
AngleSum angle_sum_beta_prime(int n, int k, double beta, double tol = 1e-12);

// Discrete models, exact.

TypeDistribution<BigRational> conv_rw_type_probs(int d);
TypeDistribution<BigRational> wendel_type_probs(int d);
TypeDistribution<BigRational> pos_bridge_type_probs(int d);
TypeDistribution<BigRational> pos_walk_type_probs(int d);

/// Expected number of l-faces of the convex hull of a walk S_0..S_n in R^d,
/// and the complementary deficit C(n+1, l+1) - E f_l.
BigRational expected_f_walk(int n, int d, int l);
BigRational walk_deficit(int n, int d, int l);

/// Expected number of j-faces of the positive hull of n symmetric random
/// vectors in R^(d+1), and the deficit C(n, j) - E f_j.
BigRational expected_f_wendel(int n, int d, int j);
BigRational wendel_deficit(int n, int d, int j);
/// Probability that n symmetric vectors in R^(d+1) positively span everything.
BigRational wendel_full_sphere_prob(int n, int d);

/// Positive hull of a bridge with n steps in R^(d+1) (n - 1 nonzero vectors):
/// expected j-face count and the deficit C(n-1, j) - E f_j.
BigRational expected_f_conic_bridge(int n, int d, int j);
BigRational conic_bridge_deficit(int n, int d, int j);
/// Positive hull of a symmetric walk with n steps in R^(d+1).
BigRational expected_f_conic_walk(int n, int d, int j);
BigRational conic_walk_deficit(int n, int d, int j);

/// Deficit vectors of d+2 points or vectors, ready for the type solver.
DeficitVector<BigRational> conv_rw_deficits(int d);
DeficitVector<BigRational> wendel_deficits(int d);
DeficitVector<BigRational> pos_bridge_deficits(int d);
DeficitVector<BigRational> pos_walk_deficits(int d);

// Dispatch on a model description.

TypeDistribution<BigRational> exact_type_probs(const ModelSpec& spec);
TypeDistribution<double> type_probs(const ModelSpec& spec, double tol = 0.0);

// Limit theorem for the type of the exact models.

struct CltConfig {
  /// Accepted distance to the limit at the top of the dimension range.
  double tolerance = 0.05;
};

struct CltRow {
  int d = 0;
  double t = 0.0;
  double cumulative = 0.0;
  double limit = 0.0;
  double gap = 0.0;
};

/// Probability that the type m satisfies m >= d/2 - t sqrt(d/12) (walks and
/// bridges) or m >= d/2 - t sqrt(d/4) (Wendel cones), for each d and t.
std::vector<CltRow> clt_profile(ModelKind kind, const std::vector<int>& dims,
                                const std::vector<double>& ts);

/// Exact value of the cumulative probability above.
BigRational clt_cumulative(ModelKind kind, int d, double t);

}  // namespace sylvtypes::formulas
