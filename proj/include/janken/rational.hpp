// Copyright 2026 The Janken Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef JANKEN_RATIONAL_HPP_
#define JANKEN_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace janken {

// Exact probabilities. Always kept canonical (lowest terms, positive
// denominator) by every helper in this header.
using Rational = mpq_class;

// Parses "3", "-2/7", "0.125" into a canonical rational.
// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

double to_double(const Rational& value);
inline double to_double(double value) { return value; }

// base^exponent for exponent >= 0.
Rational pow(const Rational& base, unsigned long exponent);

// Binomial coefficient C(n, k) as an exact integer (0 outside 0 <= k <= n).
mpz_class binomial(unsigned long n, unsigned long k);

}  // namespace janken

#endif  // JANKEN_RATIONAL_HPP_
