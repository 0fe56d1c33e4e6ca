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

#include "sylvtypes/big_number.hpp"

#include <regex>
#include <stdexcept>

namespace sylvtypes {

std::string to_string(const BigInteger& z) { return z.str(); }

std::string to_string(const BigRational& q) {
  if (is_integral(q)) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

double to_double(const BigRational& q) { return q.convert_to<double>(); }

BigRational parse_rational(const std::string& text) {
  static const std::regex pattern(R"(\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*)");
  std::smatch match;
  if (!std::regex_match(text, match, pattern)) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  const BigInteger num(match[1].str());
  const BigInteger den(match[2].matched ? match[2].str() : std::string("1"));
  if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  return BigRational(num, den);
}

}  // namespace sylvtypes
