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

#include "sylvtypes/type_algebra.hpp"

namespace sylvtypes::types {
namespace {

void check_type(int d, int m, Setting setting) {
  if (d < 1) throw DomainError("dimension must be at least 1");
  if (m < min_type(setting) || m > max_type(d)) {
    throw DomainError("type index m=" + std::to_string(m) + " out of range for d=" +
                      std::to_string(d));
  }
}

}  // namespace

std::string to_string(Setting setting) {
  return setting == Setting::affine ? "affine" : "conic";
}

int eta(int d, int m) {
  check_type(d, m, Setting::conic);
  return 2 * m == d ? 1 : 2;
}

BigInteger face_count(int d, int m, int k, Setting setting) {
  check_type(d, m, setting);
  const int first = setting == Setting::affine ? 0 : -1;
  if (k < first || k > d - 1) {
    throw DomainError("face dimension k=" + std::to_string(k) + " out of range for d=" +
                      std::to_string(d));
  }
  using combinatorics::binomial;
  // Valid for m = -1 and k = -1 as well.
  return binomial(d + 2, k + 1) - binomial(d - m + 1, d - k + 1) - binomial(m + 1, d - k + 1);
}

BigInteger forward_coefficient(int d, int j, int m) {
  if (m > j || j - m > d - m + 1) return 0;
  BigInteger a = combinatorics::binomial(d - m + 1, j - m);
  if (j == m && 2 * m == d) a += 1;
  return a;
}

BigRational inverse_coefficient(int d, int m, int l) {
  if (l > m) return 0;
  BigRational b(combinatorics::binomial(d - l + 1, m - l));
  if ((m + l) % 2 != 0) b = -b;
  if (2 * m == d) b /= 2;
  return b;
}

TypeDistribution<double> to_double(const TypeDistribution<BigRational>& dist) {
  TypeDistribution<double> out;
  out.d = dist.d;
  out.setting = dist.setting;
  for (const auto& p : dist.values) out.values.push_back(sylvtypes::to_double(p));
  return out;
}

}  // namespace sylvtypes::types
