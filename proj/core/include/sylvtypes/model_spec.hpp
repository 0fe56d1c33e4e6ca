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

#include <optional>
#include <string>
#include <string_view>

#include "sylvtypes/type_algebra.hpp"

namespace sylvtypes {

enum class ModelKind {
  gaussian,
  beta,
  beta_prime,
  sphere,
  conv_rw,
  wendel,
  pos_walk,
  pos_bridge,
  half_sphere,
};

/// Step distribution for the walk and bridge models.
enum class IncrementLaw { gaussian, cauchy, uniform_cube };

struct ModelSpec {
  ModelKind kind = ModelKind::gaussian;
  int d = 2;
  /// Shape parameter; used by beta and beta_prime only.
  double beta = 0.0;
  IncrementLaw increments = IncrementLaw::gaussian;

  static ModelSpec gaussian(int d) { return {ModelKind::gaussian, d, 0.0, {}}; }
  static ModelSpec beta_model(int d, double beta) { return {ModelKind::beta, d, beta, {}}; }
  static ModelSpec beta_prime(int d, double beta) {
    return {ModelKind::beta_prime, d, beta, {}};
  }
  static ModelSpec of(ModelKind kind, int d) { return {kind, d, 0.0, {}}; }
};

std::string to_string(ModelKind kind);
std::string to_string(IncrementLaw law);
std::optional<ModelKind> parse_model_kind(std::string_view name);
std::optional<IncrementLaw> parse_increment_law(std::string_view name);

/// Human-readable description, e.g. "beta(d=3, beta=0)".
std::string describe(const ModelSpec& spec);

types::Setting setting_of(ModelKind kind);

/// True for the models with exact rational type probabilities.
bool is_exact(ModelKind kind);

/// Throws DomainError when the parameters leave the supported range.
void validate(const ModelSpec& spec);

/// Supported parameter ranges of the quadrature-based models.
inline constexpr int kGaussianMaxDim = 12;
inline constexpr double kBetaMin = -1.0;
inline constexpr double kBetaMax = 10.0;
inline constexpr double kBetaPrimeMaxAlpha = 20.0;

}  // namespace sylvtypes
