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

// Stochastic oracles: samplers for every model, type detection through the
// sign pattern of the affine (or linear) dependence of d+2 points, a facet
// counting cross-check, and Wilson confidence intervals.

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "sylvtypes/model_spec.hpp"
#include "sylvtypes/type_algebra.hpp"

namespace sylvtypes::mc {

/// Random stream identified by (seed, stream id). The engine and all
/// distributions are fully specified, so a stream yields the same numbers on
/// every platform.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  double normal();
  double uniform();  // [0, 1)
  double cauchy();
  double gamma(double shape);

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

/// d+2 points stored as columns; d rows in the affine setting, d+1 in the
/// conic one.
struct PointCloud {
  int d = 0;
  types::Setting setting = types::Setting::affine;
  Eigen::MatrixXd points;
};

PointCloud sample(const ModelSpec& spec, RngStream& rng);

struct KernelOptions {
  /// A dependence coefficient below this fraction of the largest one counts
  /// as zero and marks the draw degenerate.
  double zero_threshold = 1e-9;
  /// Smallest accepted ratio |R(last,last)| / |R(0,0)| in the pivoted QR.
  double rank_threshold = 1e-12;
};

/// Unit vector spanning the kernel of a (k) x (k+1) matrix, or nullopt when
/// the kernel is not one-dimensional or has a zero coefficient.
std::optional<Eigen::VectorXd> dependence_vector(const Eigen::MatrixXd& matrix,
                                                 const KernelOptions& options = {});

/// Type m of the convex hull of an affine cloud.
std::optional<int> radon_type(const PointCloud& cloud, const KernelOptions& options = {});

/// Type m of the positive hull of a conic cloud; -1 when it is all of R^(d+1).
std::optional<int> conic_type(const PointCloud& cloud, const KernelOptions& options = {});

/// Dispatches on the cloud's setting.
std::optional<int> cloud_type(const PointCloud& cloud, const KernelOptions& options = {});

/// Number of facets, found by testing every d-subset for a supporting
/// hyperplane. nullopt if some orientation determinant is numerically zero.
std::optional<int> facet_count_oracle(const PointCloud& cloud, double det_threshold = 1e-12);

/// Number of values among n standard Gaussians below their mean.
int youden_rank(int n, RngStream& rng);
/// Number of n uniforms below (0 + sum U + 1) / (n + 2).
int uniform_youden_rank(int n, RngStream& rng);

inline constexpr double kZ99 = 2.5758293035489;

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
  bool contains(double x) const { return lo <= x && x <= hi; }
};

Interval wilson_interval(long successes, long trials, double z = kZ99);

struct McOptions {
  long samples = 100000;
  std::uint64_t seed = 1;
  int workers = 1;
  long block_size = 4096;
  double z = kZ99;
  KernelOptions kernel;
  double max_degenerate_fraction = 1e-3;
};

struct McReport {
  ModelSpec model;
  long samples = 0;
  std::uint64_t seed = 0;
  int workers = 1;
  double z = kZ99;
  int first_type = 0;
  std::vector<long> counts;
  long degenerate = 0;
  std::vector<double> estimates;
  std::vector<Interval> intervals;
  bool healthy = true;

  int last_type() const { return first_type + static_cast<int>(counts.size()) - 1; }
  double degenerate_fraction() const {
    return samples > 0 ? static_cast<double>(degenerate) / samples : 0.0;
  }
};

/// Counts the types of `samples` independent draws. Draws are split into
/// blocks of block_size, block b using stream (seed, b), so the report does
/// not depend on the number of workers.
McReport estimate(const ModelSpec& spec, const McOptions& options);

struct YoudenReport {
  int n = 0;
  bool uniform = false;
  long samples = 0;
  std::uint64_t seed = 0;
  std::vector<long> counts;  // k = 0..n
  std::vector<double> estimates;
  std::vector<Interval> intervals;
};

YoudenReport estimate_youden(int n, bool uniform, const McOptions& options);

/// Indices (offset by the first index) whose interval misses the target.
std::vector<int> uncovered(const std::vector<Interval>& intervals,
                           std::span<const double> target, int first_index = 0);

}  // namespace sylvtypes::mc
