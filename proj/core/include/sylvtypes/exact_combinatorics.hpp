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

// Exact number triangles: binomials, Stirling numbers of both kinds and their
// r- and type-B variants, Eulerian and type-B Eulerian numbers, and the
// Euler-Frobenius numbers A(n, k, rho) that interpolate between them.
//
// Integer triangles are built row by row from their recurrences and memoized
// in a process-wide cache guarded by a shared mutex. Triangles that depend on
// a rational parameter are recomputed per call. Every function returns 0
// outside the support of its triangle (negative k, k > n, ...).

#include "sylvtypes/big_number.hpp"

namespace sylvtypes::combinatorics {

/// Upper bound on n accepted by the memoized triangles.
inline constexpr int kMaxTriangleRow = 4096;

BigInteger factorial(int n);
BigInteger binomial(int n, int k);

/// Partition Stirling numbers {n k}.
BigInteger stirling_second(int n, int k);
/// Cycle Stirling numbers [n k]: permutations of n elements with k cycles.
BigInteger stirling_first_unsigned(int n, int k);

/// r-Stirling numbers of the second kind with rational r, from
/// S_r(n, k) = S_r(n-1, k-1) + (k + r) S_r(n-1, k), S_r(0, 0) = 1.
BigRational r_stirling_second(int n, int k, const BigRational& r);

/// Type-B partition Stirling numbers, SB(n, k) = 2^(n-k) S_{1/2}(n, k).
BigInteger b_stirling_second(int n, int k);
/// Type-B cycle Stirling numbers: coefficients of prod_{j<n} (t + 2j + 1).
BigInteger b_stirling_first(int n, int k);

/// Eulerian numbers <n k>: permutations of {1..n} with k ascents.
BigInteger eulerian(int n, int k);
/// Type-B Eulerian numbers: signed permutations of {1..n} with k type-B
/// ascents (including the ascent 0 < w(1)).
BigInteger b_eulerian(int n, int k);

/// Euler-Frobenius number A(n, k, rho), the coefficient of x^k in P_{n,rho}
/// where sum_j (j + rho)^n x^j = P_{n,rho}(x) / (1 - x)^(n+1).
///
/// Evaluated through the r-Stirling expansion
///   A(n, k, rho) = sum_j (-1)^(n+j+k) C(n-j, k) S_{1-rho}(n, j) j!.
BigRational euler_frobenius(int n, int k, const BigRational& rho);

}  // namespace sylvtypes::combinatorics
