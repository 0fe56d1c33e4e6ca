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

// Named self-check suites behind the `verify` command.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sylvtypes::verify {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  long samples = 100000;
  std::uint64_t seed = 7;
  int workers = 1;
  /// Interval width, in standard deviations, for Monte-Carlo coverage.
  double z = 4.0;
};

/// identities, quadrature, pipeline, mc
const std::vector<std::string>& suite_names();

/// Throws DomainError for an unknown suite name.
std::vector<CheckResult> run_suite(std::string_view suite, const VerifyOptions& options = {});

// Individual exact checks, also used by the acceptance tests.
CheckResult check_frobenius_type_a(int max_n);
CheckResult check_frobenius_zero(int max_n);
CheckResult check_frobenius_type_b(int max_n);
CheckResult check_euler_frobenius_symmetry(int max_n);
CheckResult check_euler_frobenius_special_values(int max_n);
CheckResult check_row_sums(int max_n);
CheckResult check_eulerian_symmetry(int max_n);
CheckResult check_orthogonality_a(int max_n);
CheckResult check_orthogonality_b(int max_n);
CheckResult check_generating_function(int max_n, int terms);
CheckResult check_b_stirling_integrality(int max_n);
CheckResult check_type_matrix_identity(int max_d);
CheckResult check_binomial_lemma(int max_d);

CheckResult check_pipeline_conv_rw(int max_d);
CheckResult check_pipeline_wendel(int max_d);
CheckResult check_pipeline_pos_bridge(int max_d);
CheckResult check_pipeline_pos_walk(int max_d);
CheckResult check_exact_sums(int max_d);
CheckResult check_complement_pairs(int max_n);
CheckResult check_overdetermined_equations(int max_d);

}  // namespace sylvtypes::verify
