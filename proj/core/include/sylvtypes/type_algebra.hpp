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

// Face numbers of the combinatorial types T_m^d of simplicial d-polytopes
// with at most d+2 vertices, and the triangular linear map between type
// probabilities and expected f-vector deficits
//
//   y_j = C(d+2, j+1) - E f_j = sum_{m <= j} a(j, m) p_m,
//   a(j, m) = C(d-m+1, j-m) + [j = m = d/2],
//
// together with its explicit inverse
//
//   p_m = (eta(d, m) / 2) sum_{l <= m} (-1)^(m+l) C(d-l+1, m-l) y_l.
//
// The affine setting indexes types and deficits by 0..floor(d/2); the conic
// (spherical) setting adds index -1 for the full sphere and f_{-1}.
// Everything is templated over the scalar so exact models stay in
// BigRational while quadrature-based models run in double.

#include <cmath>
#include <string>
#include <type_traits>
#include <vector>

#include "sylvtypes/big_number.hpp"
#include "sylvtypes/errors.hpp"
#include "sylvtypes/exact_combinatorics.hpp"

namespace sylvtypes::types {

enum class Setting { affine, conic };

std::string to_string(Setting setting);

inline int min_type(Setting setting) { return setting == Setting::affine ? 0 : -1; }
inline int max_type(int d) { return d / 2; }
inline int type_count(int d, Setting setting) { return max_type(d) - min_type(setting) + 1; }

/// 2 if m != d/2, else 1. Accepts -1 <= m <= floor(d/2).
int eta(int d, int m);

/// Number of k-faces of T_m^d. Affine: 0 <= m <= d/2, 0 <= k <= d-1. Conic
/// additionally allows m = -1 (the full sphere, no proper faces) and k = -1
/// (the empty face, present unless m = -1).
BigInteger face_count(int d, int m, int k, Setting setting = Setting::affine);

/// Facet count (m+1)(d-m+1); zero for the full sphere.
inline int facet_count(int d, int m) { return (m + 1) * (d - m + 1); }

/// a(j, m) of the forward map.
BigInteger forward_coefficient(int d, int j, int m);
/// b(m, l) of the inverse map.
BigRational inverse_coefficient(int d, int m, int l);

/// Negative probabilities from float inputs down to this value are clamped
/// to zero; anything below is rejected.
inline constexpr double kNegativeTolerance = 1e-9;

template <class Scalar>
Scalar scalar_from(const BigInteger& z) {
  if constexpr (std::is_same_v<Scalar, double>) {
    return z.template convert_to<double>();
  } else {
    return Scalar(z);
  }
}

template <class Scalar>
Scalar scalar_from(const BigRational& q) {
  if constexpr (std::is_same_v<Scalar, double>) {
    return to_double(q);
  } else {
    return Scalar(q);
  }
}

/// Values indexed by a contiguous integer range starting at `first`.
template <class Scalar>
struct IndexedValues {
  int d = 0;
  Setting setting = Setting::affine;
  std::vector<Scalar> values;

  int first() const { return min_type(setting); }
  int last() const { return first() + static_cast<int>(values.size()) - 1; }
  const Scalar& at(int index) const { return values.at(index - first()); }
  Scalar& at(int index) { return values.at(index - first()); }
  std::size_t size() const { return values.size(); }
};

/// C(d+2, l+1) - E f_l for l in the square index range of the setting.
template <class Scalar>
struct DeficitVector : IndexedValues<Scalar> {};

/// Type probabilities p_{d,m} (affine) or q_{d,m} (conic).
template <class Scalar>
struct TypeDistribution : IndexedValues<Scalar> {
  /// Types whose float probability was clamped from a small negative value.
  std::vector<int> clamped;

  Scalar total() const {
    Scalar sum = 0;
    for (const auto& p : this->values) sum += p;
    return sum;
  }
};

template <class Scalar>
DeficitVector<Scalar> make_deficits(int d, Setting setting, std::vector<Scalar> values) {
  if (d < 1) throw DomainError("dimension must be at least 1");
  if (static_cast<int>(values.size()) != type_count(d, setting)) {
    throw DomainError("deficit vector has " + std::to_string(values.size()) +
                      " entries, expected " + std::to_string(type_count(d, setting)));
  }
  DeficitVector<Scalar> out;
  out.d = d;
  out.setting = setting;
  out.values = std::move(values);
  return out;
}

/// B y without validating the result.
template <class Scalar>
std::vector<Scalar> apply_inverse(const DeficitVector<Scalar>& deficits) {
  const int d = deficits.d;
  std::vector<Scalar> out;
  out.reserve(deficits.size());
  for (int m = deficits.first(); m <= deficits.last(); ++m) {
    Scalar sum = 0;
    for (int l = deficits.first(); l <= m; ++l) {
      sum += scalar_from<Scalar>(inverse_coefficient(d, m, l)) * deficits.at(l);
    }
    out.push_back(sum);
  }
  return out;
}

/// A p: the deficits implied by a type distribution.
template <class Scalar>
DeficitVector<Scalar> forward_f(const TypeDistribution<Scalar>& dist) {
  std::vector<Scalar> y;
  y.reserve(dist.size());
  for (int j = dist.first(); j <= dist.last(); ++j) {
    Scalar sum = 0;
    for (int m = dist.first(); m <= j; ++m) {
      sum += scalar_from<Scalar>(forward_coefficient(dist.d, j, m)) * dist.at(m);
    }
    y.push_back(sum);
  }
  return make_deficits<Scalar>(dist.d, dist.setting, std::move(y));
}

/// Expected face numbers E f_j for every j from first() up to d-1.
template <class Scalar>
std::vector<Scalar> expected_f_vector(const TypeDistribution<Scalar>& dist) {
  std::vector<Scalar> f;
  for (int j = dist.first(); j <= dist.d - 1; ++j) {
    Scalar sum = 0;
    for (int m = dist.first(); m <= dist.last(); ++m) {
      sum += scalar_from<Scalar>(face_count(dist.d, m, j, dist.setting)) * dist.at(m);
    }
    f.push_back(sum);
  }
  return f;
}

template <class Scalar>
TypeDistribution<Scalar> solve(const DeficitVector<Scalar>& deficits) {
  TypeDistribution<Scalar> dist;
  dist.d = deficits.d;
  dist.setting = deficits.setting;
  dist.values = apply_inverse(deficits);
  for (int m = dist.first(); m <= dist.last(); ++m) {
    auto& p = dist.at(m);
    if constexpr (std::is_same_v<Scalar, double>) {
      if (!std::isfinite(p) || p < -kNegativeTolerance || p > 1.0 + kNegativeTolerance) {
        throw InconsistentInput("type " + std::to_string(m) +
                                " has probability " + std::to_string(p));
      }
      if (p < 0.0) {
        p = 0.0;
        dist.clamped.push_back(m);
      }
    } else {
      if (p < 0 || p > 1) {
        throw InconsistentInput("type " + std::to_string(m) + " has probability " +
                                sylvtypes::to_string(p));
      }
    }
  }
  return dist;
}

template <class Scalar>
TypeDistribution<Scalar> solve_affine(const DeficitVector<Scalar>& deficits) {
  if (deficits.setting != Setting::affine) throw DomainError("solve_affine: conic deficits");
  return solve(deficits);
}

template <class Scalar>
TypeDistribution<Scalar> solve_conic(const DeficitVector<Scalar>& deficits) {
  if (deficits.setting != Setting::conic) throw DomainError("solve_conic: affine deficits");
  return solve(deficits);
}

template <class Scalar>
TypeDistribution<Scalar> point_mass(int d, Setting setting, int m) {
  TypeDistribution<Scalar> dist;
  dist.d = d;
  dist.setting = setting;
  dist.values.assign(type_count(d, setting), Scalar(0));
  dist.at(m) = 1;
  return dist;
}

/// Float copy of an exact distribution.
TypeDistribution<double> to_double(const TypeDistribution<BigRational>& dist);

}  // namespace sylvtypes::types
