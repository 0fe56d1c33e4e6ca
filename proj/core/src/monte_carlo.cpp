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

#include "sylvtypes/monte_carlo.hpp"

#include <boost/random/cauchy_distribution.hpp>
#include <boost/random/gamma_distribution.hpp>
#include <boost/random/normal_distribution.hpp>
#include <boost/random/uniform_01.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "sylvtypes/errors.hpp"

namespace sylvtypes::mc {
namespace {

using types::Setting;

std::seed_seq make_seed_seq(std::uint64_t seed, std::uint64_t stream) {
  return std::seed_seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                       static_cast<std::uint32_t>(stream),
                       static_cast<std::uint32_t>(stream >> 32)};
}

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream) {
  auto seq = make_seed_seq(seed, stream);
  return std::mt19937_64(seq);
}

Eigen::VectorXd gaussian_vector(int dim, RngStream& rng) {
  Eigen::VectorXd v(dim);
  for (int i = 0; i < dim; ++i) v(i) = rng.normal();
  return v;
}

Eigen::VectorXd unit_vector(int dim, RngStream& rng) {
  for (;;) {
    Eigen::VectorXd v = gaussian_vector(dim, rng);
    const double norm = v.norm();
    if (norm > 0.0) return v / norm;
  }
}

Eigen::VectorXd increment(int dim, IncrementLaw law, RngStream& rng) {
  Eigen::VectorXd v(dim);
  for (int i = 0; i < dim; ++i) {
    switch (law) {
      case IncrementLaw::gaussian:
        v(i) = rng.normal();
        break;
      case IncrementLaw::cauchy:
        v(i) = rng.cauchy();
        break;
      case IncrementLaw::uniform_cube:
        v(i) = 2.0 * rng.uniform() - 1.0;
        break;
    }
  }
  return v;
}

// Partial sums S_1..S_count of the given increments (columns).
Eigen::MatrixXd partial_sums(const Eigen::MatrixXd& steps, int count) {
  Eigen::MatrixXd sums(steps.rows(), count);
  Eigen::VectorXd s = Eigen::VectorXd::Zero(steps.rows());
  for (int i = 0; i < count; ++i) {
    s += steps.col(i);
    sums.col(i) = s;
  }
  return sums;
}

struct SignCounts {
  int positive = 0;
  int negative = 0;
};

std::optional<SignCounts> kernel_signs(const Eigen::MatrixXd& matrix,
                                       const KernelOptions& options) {
  const auto lambda = dependence_vector(matrix, options);
  if (!lambda) return std::nullopt;
  SignCounts counts;
  for (Eigen::Index i = 0; i < lambda->size(); ++i) {
    ((*lambda)(i) > 0.0 ? counts.positive : counts.negative)++;
  }
  return counts;
}

// Counts for one block of draws; slot 0 of `counts` is the first type.
struct BlockResult {
  std::vector<long> counts;
  long degenerate = 0;
};

template <class Body>
void run_blocks(long samples, long block_size, int workers, Body body) {
  const long blocks = (samples + block_size - 1) / block_size;
  std::atomic<long> next{0};
  auto worker = [&] {
    for (long b = next++; b < blocks; b = next++) {
      const long begin = b * block_size;
      body(b, std::min(block_size, samples - begin));
    }
  };
  const int threads = std::max(1, std::min<int>(workers, static_cast<int>(blocks)));
  if (threads == 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

void check_options(const McOptions& options) {
  if (options.samples < 1) throw DomainError("Monte-Carlo needs at least one sample");
  if (options.block_size < 1) throw DomainError("block size must be positive");
  if (options.workers < 1) throw DomainError("worker count must be positive");
}

std::vector<Interval> intervals_for(const std::vector<long>& counts, long trials, double z) {
  std::vector<Interval> out;
  for (long c : counts) out.push_back(wilson_interval(c, trials, z));
  return out;
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), engine_(make_engine(seed, stream)) {}

double RngStream::normal() { return boost::random::normal_distribution<double>()(engine_); }

double RngStream::uniform() { return boost::random::uniform_01<double>()(engine_); }

double RngStream::cauchy() { return boost::random::cauchy_distribution<double>()(engine_); }

double RngStream::gamma(double shape) {
  return boost::random::gamma_distribution<double>(shape)(engine_);
}

PointCloud sample(const ModelSpec& spec, RngStream& rng) {
  validate(spec);
  const int d = spec.d;
  const int count = d + 2;
  PointCloud cloud;
  cloud.d = d;
  cloud.setting = setting_of(spec.kind);
  switch (spec.kind) {
    case ModelKind::gaussian: {
      cloud.points.resize(d, count);
      for (int i = 0; i < count; ++i) cloud.points.col(i) = gaussian_vector(d, rng);
      break;
    }
    case ModelKind::beta:
    case ModelKind::sphere: {
      const double beta = spec.kind == ModelKind::sphere ? -1.0 : spec.beta;
      cloud.points.resize(d, count);
      for (int i = 0; i < count; ++i) {
        double radius = 1.0;
        if (beta > -1.0) {
          // |X|^2 ~ Beta(d/2, beta + 1)
          const double a = rng.gamma(0.5 * d);
          const double b = rng.gamma(beta + 1.0);
          radius = std::sqrt(a / (a + b));
        }
        cloud.points.col(i) = radius * unit_vector(d, rng);
      }
      break;
    }
    case ModelKind::beta_prime: {
      cloud.points.resize(d, count);
      for (int i = 0; i < count; ++i) {
        // |X|^2 ~ BetaPrime(d/2, beta - d/2)
        const double a = rng.gamma(0.5 * d);
        const double b = rng.gamma(spec.beta - 0.5 * d);
        cloud.points.col(i) = std::sqrt(a / b) * unit_vector(d, rng);
      }
      break;
    }
    case ModelKind::half_sphere: {
      cloud.points.resize(d, count);
      for (int i = 0; i < count; ++i) {
        // Uniform on the upper half-sphere, then central projection onto
        // the tangent plane at the pole.
        Eigen::VectorXd u = unit_vector(d + 1, rng);
        const double height = std::abs(u(0));
        cloud.points.col(i) = u.tail(d) / height;
      }
      break;
    }
    case ModelKind::conv_rw: {
      Eigen::MatrixXd steps(d, d + 1);
      for (int i = 0; i <= d; ++i) steps.col(i) = increment(d, spec.increments, rng);
      cloud.points.resize(d, count);
      cloud.points.col(0).setZero();
      cloud.points.rightCols(d + 1) = partial_sums(steps, d + 1);
      break;
    }
    case ModelKind::wendel: {
      cloud.points.resize(d + 1, count);
      for (int i = 0; i < count; ++i) cloud.points.col(i) = gaussian_vector(d + 1, rng);
      break;
    }
    case ModelKind::pos_walk: {
      Eigen::MatrixXd steps(d + 1, count);
      for (int i = 0; i < count; ++i) steps.col(i) = increment(d + 1, spec.increments, rng);
      cloud.points = partial_sums(steps, count);
      break;
    }
    case ModelKind::pos_bridge: {
      const int n = d + 3;
      Eigen::MatrixXd steps(d + 1, n);
      for (int i = 0; i < n; ++i) steps.col(i) = increment(d + 1, spec.increments, rng);
      const Eigen::VectorXd mean = steps.rowwise().mean();
      steps.colwise() -= mean;
      cloud.points = partial_sums(steps, count);
      break;
    }
  }
  return cloud;
}

std::optional<Eigen::VectorXd> dependence_vector(const Eigen::MatrixXd& matrix,
                                                 const KernelOptions& options) {
  const Eigen::Index rows = matrix.rows();
  const Eigen::Index cols = matrix.cols();
  if (cols != rows + 1) throw DomainError("dependence_vector expects a k x (k+1) matrix");
  if (!matrix.allFinite()) return std::nullopt;
  // The kernel of M is the orthogonal complement of the column space of M^T,
  // i.e. the last column of Q in M^T P = Q R.
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(matrix.transpose());
  const auto& r = qr.matrixQR();
  const double lead = std::abs(r(0, 0));
  const double tail = std::abs(r(rows - 1, rows - 1));
  if (!(lead > 0.0) || tail < options.rank_threshold * lead) return std::nullopt;
  Eigen::MatrixXd q = qr.householderQ();
  Eigen::VectorXd lambda = q.col(cols - 1);
  const double largest = lambda.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (std::abs(lambda(i)) < options.zero_threshold * largest) return std::nullopt;
  }
  return lambda;
}

std::optional<int> radon_type(const PointCloud& cloud, const KernelOptions& options) {
  const int d = cloud.d;
  if (cloud.points.rows() != d || cloud.points.cols() != d + 2) {
    throw DomainError("radon_type expects d+2 points in R^d");
  }
  Eigen::MatrixXd m(d + 1, d + 2);
  m.topRows(d) = cloud.points;
  m.row(d).setOnes();
  const auto signs = kernel_signs(m, options);
  if (!signs) return std::nullopt;
  return std::min(signs->positive, signs->negative) - 1;
}

std::optional<int> conic_type(const PointCloud& cloud, const KernelOptions& options) {
  const int d = cloud.d;
  if (cloud.points.rows() != d + 1 || cloud.points.cols() != d + 2) {
    throw DomainError("conic_type expects d+2 vectors in R^(d+1)");
  }
  const auto signs = kernel_signs(cloud.points, options);
  if (!signs) return std::nullopt;
  return std::min(signs->positive, signs->negative) - 1;
}

std::optional<int> cloud_type(const PointCloud& cloud, const KernelOptions& options) {
  return cloud.setting == Setting::affine ? radon_type(cloud, options)
                                          : conic_type(cloud, options);
}

std::optional<int> facet_count_oracle(const PointCloud& cloud, double det_threshold) {
  const int d = cloud.d;
  const int count = d + 2;
  const bool affine = cloud.setting == Setting::affine;
  const int dim = affine ? d : d + 1;
  if (cloud.points.rows() != dim || cloud.points.cols() != count) {
    throw DomainError("facet_count_oracle: cloud has the wrong shape");
  }
  std::vector<int> subset;
  int facets = 0;
  Eigen::MatrixXd frame(dim, dim);
  for (int a = 0; a < count; ++a) {
    for (int b = a + 1; b < count; ++b) {
      subset.clear();
      for (int i = 0; i < count; ++i) {
        if (i != a && i != b) subset.push_back(i);
      }
      // Columns spanning the candidate hyperplane, then the test point.
      auto side = [&](int p) -> std::optional<int> {
        if (affine) {
          const Eigen::VectorXd base = cloud.points.col(subset[0]);
          for (int c = 1; c < d; ++c) frame.col(c - 1) = cloud.points.col(subset[c]) - base;
          frame.col(d - 1) = cloud.points.col(p) - base;
        } else {
          for (int c = 0; c < d; ++c) frame.col(c) = cloud.points.col(subset[c]);
          frame.col(d) = cloud.points.col(p);
        }
        double scale = 1.0;
        for (int c = 0; c < dim; ++c) scale *= frame.col(c).norm();
        const double det = frame.partialPivLu().determinant();
        if (!std::isfinite(det) || std::abs(det) <= det_threshold * scale) return std::nullopt;
        return det > 0.0 ? 1 : -1;
      };
      const auto sa = side(a);
      const auto sb = side(b);
      if (!sa || !sb) return std::nullopt;
      if (*sa == *sb) ++facets;
    }
  }
  return facets;
}

int youden_rank(int n, RngStream& rng) {
  if (n < 2) throw DomainError("youden_rank needs n >= 2");
  std::vector<double> xs(n);
  double sum = 0.0;
  for (auto& x : xs) {
    x = rng.normal();
    sum += x;
  }
  const double mean = sum / n;
  return static_cast<int>(std::count_if(xs.begin(), xs.end(), [&](double x) { return x < mean; }));
}

int uniform_youden_rank(int n, RngStream& rng) {
  if (n < 1) throw DomainError("uniform_youden_rank needs n >= 1");
  std::vector<double> us(n);
  double sum = 0.0;
  for (auto& u : us) {
    u = rng.uniform();
    sum += u;
  }
  const double pivot = (sum + 1.0) / (n + 2);
  return static_cast<int>(std::count_if(us.begin(), us.end(), [&](double u) { return u < pivot; }));
}

Interval wilson_interval(long successes, long trials, double z) {
  if (trials <= 0 || successes < 0 || successes > trials) {
    throw DomainError("wilson_interval: need 0 <= successes <= trials, trials > 0");
  }
  const double n = static_cast<double>(trials);
  const double p = successes / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double centre = (p + z2 / (2.0 * n)) / denom;
  const double half = z / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

McReport estimate(const ModelSpec& spec, const McOptions& options) {
  validate(spec);
  check_options(options);
  const auto setting = setting_of(spec.kind);
  const int first = types::min_type(setting);
  const int types_n = types::type_count(spec.d, setting);
  const long blocks = (options.samples + options.block_size - 1) / options.block_size;
  std::vector<BlockResult> results(blocks);

  run_blocks(options.samples, options.block_size, options.workers, [&](long b, long size) {
    RngStream rng(options.seed, static_cast<std::uint64_t>(b));
    BlockResult& out = results[b];
    out.counts.assign(types_n, 0);
    for (long i = 0; i < size; ++i) {
      const auto m = cloud_type(sample(spec, rng), options.kernel);
      if (m) {
        ++out.counts[*m - first];
      } else {
        ++out.degenerate;
      }
    }
  });

  McReport report;
  report.model = spec;
  report.samples = options.samples;
  report.seed = options.seed;
  report.workers = options.workers;
  report.z = options.z;
  report.first_type = first;
  report.counts.assign(types_n, 0);
  for (const auto& r : results) {
    for (int i = 0; i < types_n; ++i) report.counts[i] += r.counts[i];
    report.degenerate += r.degenerate;
  }
  // Estimates are conditional on a non-degenerate draw.
  const long valid = options.samples - report.degenerate;
  for (long c : report.counts) {
    report.estimates.push_back(valid > 0 ? static_cast<double>(c) / valid : 0.0);
  }
  if (valid > 0) report.intervals = intervals_for(report.counts, valid, options.z);
  else report.intervals.assign(types_n, Interval{});
  report.healthy = report.degenerate_fraction() <= options.max_degenerate_fraction;
  return report;
}

YoudenReport estimate_youden(int n, bool uniform, const McOptions& options) {
  if (n < 2) throw DomainError("estimate_youden needs n >= 2");
  check_options(options);
  const long blocks = (options.samples + options.block_size - 1) / options.block_size;
  std::vector<std::vector<long>> results(blocks);
  run_blocks(options.samples, options.block_size, options.workers, [&](long b, long size) {
    RngStream rng(options.seed, static_cast<std::uint64_t>(b));
    auto& counts = results[b];
    counts.assign(n + 1, 0);
    for (long i = 0; i < size; ++i) {
      ++counts[uniform ? uniform_youden_rank(n, rng) : youden_rank(n, rng)];
    }
  });
  YoudenReport report;
  report.n = n;
  report.uniform = uniform;
  report.samples = options.samples;
  report.seed = options.seed;
  report.counts.assign(n + 1, 0);
  for (const auto& counts : results) {
    for (int k = 0; k <= n; ++k) report.counts[k] += counts[k];
  }
  for (long c : report.counts) {
    report.estimates.push_back(static_cast<double>(c) / options.samples);
  }
  report.intervals = intervals_for(report.counts, options.samples, options.z);
  return report;
}

std::vector<int> uncovered(const std::vector<Interval>& intervals,
                           std::span<const double> target, int first_index) {
  if (intervals.size() != target.size()) {
    throw DomainError("uncovered: interval and target sizes differ");
  }
  std::vector<int> misses;
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    if (!intervals[i].contains(target[i])) misses.push_back(first_index + static_cast<int>(i));
  }
  return misses;
}

}  // namespace sylvtypes::mc
