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

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

namespace sylvtypes {

using BigInteger = boost::multiprecision::mpz_int;
/// Always canonical: lowest terms, positive denominator.
using BigRational = boost::multiprecision::mpq_rational;

inline BigRational make_rational(std::int64_t num, std::int64_t den = 1) {
  return BigRational(BigInteger(num), BigInteger(den));
}

inline BigInteger numerator_of(const BigRational& q) {
  return boost::multiprecision::numerator(q);
}
inline BigInteger denominator_of(const BigRational& q) {
  return boost::multiprecision::denominator(q);
}

inline bool is_integral(const BigRational& q) { return denominator_of(q) == 1; }

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const BigRational& q);
std::string to_string(const BigInteger& z);

/// Nearest double; exact for values whose numerator and denominator fit.
double to_double(const BigRational& q);

/// Parses "p", "-p", "p/q"; throws std::invalid_argument otherwise.
BigRational parse_rational(const std::string& text);

}  // namespace sylvtypes
