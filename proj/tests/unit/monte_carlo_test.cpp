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

#include <boost/math/special_functions/beta.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "sylvtypes/model_formulas.hpp"
#include "sylvtypes/model_spec.hpp"
#include "sylvtypes/monte_carlo.hpp"

using namespace sylvtypes;
using namespace sylvtypes::mc;

namespace {

// Kolmogorov-Smirnov statistic of the sample against a continuous CDF.
double ks_statistic(std::vector<double> xs, const std::function<double(double)>& cdf) {
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = cdf(xs[i]);
    worst = std::max({worst, f - i / n, (i + 1) / n - f});
  }
  return worst;
}

// Pools the squared norms of every sampled point.
std::vector<double> squared_radii(const ModelSpec& spec, int clouds, std::uint64_t seed) {
  RngStream rng(seed, 0);
  std::vector<double> out;
  for (int i = 0; i < clouds; ++i) {
    const auto cloud = sample(spec, rng);
    for (Eigen::Index j = 0; j < cloud.points.cols(); ++j) out.push_back(cloud.points.col(j).squaredNorm());
  }
  return out;
}

// 1% critical value of the KS statistic.
double ks_critical(std::size_t n) { return 1.628 / std::sqrt(static_cast<double>(n)); }

PointCloud cloud_of(int d, std::initializer_list<std::initializer_list<double>> columns,
                    types::Setting setting = types::Setting::affine) {
  PointCloud cloud;
  cloud.d = d;
  cloud.setting = setting;
  const int dim = static_cast<int>(columns.begin()->size());
  cloud.points.resize(dim, static_cast<Eigen::Index>(columns.size()));
  int j = 0;
  for (const auto& col : columns) {
    int i = 0;
    for (double v : col) cloud.points(i++, j) = v;
    ++j;
  }
  return cloud;
}

}  // namespace

TEST_CASE("streams are reproducible and distinct") {
  RngStream a(11, 3), b(11, 3), c(11, 4), e(12, 3);
  for (int i = 0; i < 100; ++i) {
    const double x = a.uniform();
    CHECK(x == b.uniform());
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
  CHECK(a.normal() != c.normal());
  CHECK(b.normal() != e.normal());
}

TEST_CASE("radial laws pass a Kolmogorov-Smirnov test") {
  using boost::math::ibeta;
  SUBCASE("uniform ball: R^2 ~ Beta(d/2, 1)") {
    const auto r2 = squared_radii(ModelSpec::beta_model(3, 0.0), 4000, 1);
    CHECK(ks_statistic(r2, [](double u) { return ibeta(1.5, 1.0, u); }) < ks_critical(r2.size()));
  }
  SUBCASE("beta: R^2 ~ Beta(d/2, beta + 1)") {
    const auto r2 = squared_radii(ModelSpec::beta_model(2, 1.5), 4000, 2);
    CHECK(ks_statistic(r2, [](double u) { return ibeta(1.0, 2.5, u); }) < ks_critical(r2.size()));
  }
  SUBCASE("beta-prime: R^2 / (1 + R^2) ~ Beta(d/2, beta - d/2)") {
    auto r2 = squared_radii(ModelSpec::beta_prime(3, 2.5), 4000, 3);
    for (double& v : r2) v = v / (1 + v);
    CHECK(ks_statistic(r2, [](double u) { return ibeta(1.5, 1.0, u); }) < ks_critical(r2.size()));
  }
  SUBCASE("half-sphere projects to Cauchy") {
    auto r2 = squared_radii(ModelSpec::of(ModelKind::half_sphere, 3), 4000, 4);
    for (double& v : r2) v = v / (1 + v);
    CHECK(ks_statistic(r2, [](double u) { return ibeta(1.5, 0.5, u); }) < ks_critical(r2.size()));
  }
  SUBCASE("Gaussian: R^2 ~ chi^2 with d degrees of freedom") {
    const auto r2 = squared_radii(ModelSpec::gaussian(2), 4000, 5);
    CHECK(ks_statistic(r2, [](double u) { return 1 - std::exp(-u / 2); }) < ks_critical(r2.size()));
  }
  SUBCASE("sphere points have unit norm") {
    for (double v : squared_radii(ModelSpec::of(ModelKind::sphere, 4), 100, 6)) {
      CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("cloud shapes") {
  RngStream rng(5, 0);
  const auto walk = sample(ModelSpec::of(ModelKind::conv_rw, 3), rng);
  CHECK(walk.points.rows() == 3);
  CHECK(walk.points.cols() == 5);
  CHECK(walk.points.col(0).norm() == 0.0);
  const auto cone = sample(ModelSpec::of(ModelKind::wendel, 3), rng);
  CHECK(cone.setting == types::Setting::conic);
  CHECK(cone.points.rows() == 4);
  CHECK(cone.points.cols() == 5);
}

TEST_CASE("types of hand-made clouds") {
  const auto square = cloud_of(2, {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(radon_type(square) == 1);
  CHECK(facet_count_oracle(square) == types::facet_count(2, 1));
  const auto triangle = cloud_of(2, {{0, 0}, {4, 0}, {0, 4}, {1, 1}});
  CHECK(radon_type(triangle) == 0);
  CHECK(facet_count_oracle(triangle) == types::facet_count(2, 0));
  const auto collinear = cloud_of(2, {{0, 0}, {1, 0}, {1, 0}, {0, 1}});
  CHECK_FALSE(radon_type(collinear).has_value());

  const auto spanning = cloud_of(2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}, types::Setting::conic);
  CHECK(conic_type(spanning) == -1);
  const auto pointed = cloud_of(2, {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}}, types::Setting::conic);
  CHECK(conic_type(pointed) == 1);
  CHECK(cloud_type(pointed) == 1);
}

TEST_CASE("Radon type agrees with facet enumeration on random clouds") {
  RngStream rng(99, 0);
  for (int d = 2; d <= 5; ++d) {
    for (int i = 0; i < 500; ++i) {
      const auto cloud = sample(ModelSpec::gaussian(d), rng);
      const auto m = radon_type(cloud);
      const auto facets = facet_count_oracle(cloud);
      REQUIRE(m.has_value());
      REQUIRE(facets.has_value());
      CHECK(types::facet_count(d, *m) == *facets);
    }
  }
}

TEST_CASE("Wilson interval") {
  const auto iv = wilson_interval(0, 10, 1.96);
  CHECK(iv.lo == doctest::Approx(0.0));
  CHECK(iv.hi == doctest::Approx(0.27753).epsilon(1e-4));
  const auto mid = wilson_interval(50, 100, 1.96);
  CHECK(mid.lo == doctest::Approx(1 - mid.hi));
  CHECK(mid.contains(0.5));
  CHECK(wilson_interval(30, 100).contains(0.3));
}

TEST_CASE("estimates do not depend on the worker count") {
  McOptions options;
  options.samples = 20000;
  options.seed = 17;
  options.block_size = 1000;
  options.workers = 1;
  const auto one = estimate(ModelSpec::gaussian(3), options);
  options.workers = 3;
  const auto three = estimate(ModelSpec::gaussian(3), options);
  CHECK(one.counts == three.counts);
  CHECK(one.degenerate == three.degenerate);
  long total = one.degenerate;
  for (long c : one.counts) total += c;
  CHECK(total == options.samples);
}

TEST_CASE("Monte-Carlo intervals cover the exact laws") {
  McOptions options;
  options.samples = 50000;
  options.seed = 3;
  options.z = 4.0;
  for (auto spec : {ModelSpec::of(ModelKind::conv_rw, 3), ModelSpec::of(ModelKind::wendel, 3),
                    ModelSpec::of(ModelKind::pos_walk, 2), ModelSpec::of(ModelKind::pos_bridge, 3)}) {
    CAPTURE(to_string(spec.kind));
    const auto report = estimate(spec, options);
    const auto target = formulas::type_probs(spec);
    CHECK(report.healthy);
    CHECK(uncovered(report.intervals, target.values, report.first_type).empty());
  }
}

TEST_CASE("Youden ranks") {
  McOptions options;
  options.samples = 50000;
  options.seed = 8;
  options.z = 4.0;
  const auto report = estimate_youden(5, false, options);
  std::vector<double> target;
  for (int k = 0; k <= 5; ++k) target.push_back(formulas::youden(5, k));
  CHECK(uncovered(report.intervals, target).empty());
  CHECK(report.counts.front() == 0);
  CHECK(report.counts.back() == 0);
}
