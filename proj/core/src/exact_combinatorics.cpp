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

#include "sylvtypes/exact_combinatorics.hpp"

#include <gmp.h>

#include <functional>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "sylvtypes/errors.hpp"

namespace sylvtypes::combinatorics {
namespace {

void check_row(int n) {
  if (n < 0 || n > kMaxTriangleRow) {
    throw DomainError("triangle row out of range: n=" + std::to_string(n));
  }
}

// Row n of a triangle holds entries k = 0..n. `next_row` fills row n from
// row n-1; entries outside the row are read as zero.
class MemoTriangle {
 public:
  using Row = std::vector<BigInteger>;
  using Step = std::function<BigInteger(int n, int k, const Row& prev)>;

  MemoTriangle(BigInteger origin, Step step) : step_(std::move(step)) {
    rows_.push_back(Row{std::move(origin)});
  }

  BigInteger at(int n, int k) {
    check_row(n);
    if (k < 0 || k > n) return 0;
    {
      std::shared_lock lock(mutex_);
      if (n < static_cast<int>(rows_.size())) return rows_[n][k];
    }
    std::unique_lock lock(mutex_);
    while (static_cast<int>(rows_.size()) <= n) {
      const int row = static_cast<int>(rows_.size());
      const Row& prev = rows_.back();
      Row next(row + 1);
      for (int j = 0; j <= row; ++j) next[j] = step_(row, j, prev);
      rows_.push_back(std::move(next));
    }
    return rows_[n][k];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<Row> rows_;
  Step step_;
};

BigInteger entry(const MemoTriangle::Row& row, int k) {
  if (k < 0 || k >= static_cast<int>(row.size())) return 0;
  return row[k];
}

MemoTriangle& stirling2_table() {
  static MemoTriangle table(1, [](int, int k, const MemoTriangle::Row& prev) {
    return entry(prev, k - 1) + k * entry(prev, k);
  });
  return table;
}

MemoTriangle& stirling1_table() {
  static MemoTriangle table(1, [](int n, int k, const MemoTriangle::Row& prev) {
    return entry(prev, k - 1) + (n - 1) * entry(prev, k);
  });
  return table;
}

MemoTriangle& b_stirling2_table() {
  static MemoTriangle table(1, [](int, int k, const MemoTriangle::Row& prev) {
    return entry(prev, k - 1) + (2 * k + 1) * entry(prev, k);
  });
  return table;
}

MemoTriangle& b_stirling1_table() {
  static MemoTriangle table(1, [](int n, int k, const MemoTriangle::Row& prev) {
    return entry(prev, k - 1) + (2 * n - 1) * entry(prev, k);
  });
  return table;
}

MemoTriangle& eulerian_table() {
  static MemoTriangle table(1, [](int n, int k, const MemoTriangle::Row& prev) {
    return (k + 1) * entry(prev, k) + (n - k) * entry(prev, k - 1);
  });
  return table;
}

MemoTriangle& b_eulerian_table() {
  static MemoTriangle table(1, [](int n, int k, const MemoTriangle::Row& prev) {
    return (2 * k + 1) * entry(prev, k) + (2 * n - 2 * k + 1) * entry(prev, k - 1);
  });
  return table;
}

// Full row S_r(n, 0..n) of the r-Stirling triangle.
std::vector<BigRational> r_stirling_row(int n, const BigRational& r) {
  check_row(n);
  std::vector<BigRational> row{BigRational(1)};
  for (int i = 1; i <= n; ++i) {
    std::vector<BigRational> next(i + 1);
    for (int k = 0; k <= i; ++k) {
      BigRational value = 0;
      if (k >= 1) value += row[k - 1];
      if (k < i) value += (BigRational(k) + r) * row[k];
      next[k] = std::move(value);
    }
    row = std::move(next);
  }
  return row;
}

}  // namespace

BigInteger factorial(int n) {
  check_row(n);
  BigInteger result;
  mpz_fac_ui(result.backend().data(), static_cast<unsigned long>(n));
  return result;
}

BigInteger binomial(int n, int k) {
  if (n < 0) throw DomainError("binomial: n must be non-negative");
  if (k < 0 || k > n) return 0;
  BigInteger result;
  mpz_bin_uiui(result.backend().data(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

BigInteger stirling_second(int n, int k) { return stirling2_table().at(n, k); }

BigInteger stirling_first_unsigned(int n, int k) {
  return stirling1_table().at(n, k);
}

BigRational r_stirling_second(int n, int k, const BigRational& r) {
  if (k < 0 || k > n) {
    check_row(n);
    return 0;
  }
  return r_stirling_row(n, r)[k];
}

BigInteger b_stirling_second(int n, int k) {
  return b_stirling2_table().at(n, k);
}

BigInteger b_stirling_first(int n, int k) {
  return b_stirling1_table().at(n, k);
}

BigInteger eulerian(int n, int k) {
  if (n >= 1 && k == n) return 0;
  return eulerian_table().at(n, k);
}

BigInteger b_eulerian(int n, int k) { return b_eulerian_table().at(n, k); }

BigRational euler_frobenius(int n, int k, const BigRational& rho) {
  check_row(n);
  if (k < 0 || k > n) return 0;
  const auto stirling = r_stirling_row(n, BigRational(1) - rho);
  BigRational sum = 0;
  BigInteger j_factorial = 1;
  for (int j = 0; j <= n; ++j) {
    if (j > 0) j_factorial *= j;
    const BigInteger c = binomial(n - j, k);
    if (c == 0 || stirling[j] == 0) continue;
    BigRational term = stirling[j] * BigRational(c * j_factorial);
    if ((n + j + k) % 2 != 0) term = -term;
    sum += term;
  }
  return sum;
}

}  // namespace sylvtypes::combinatorics
