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

#include "janken/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace janken {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    mpz_class d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    result = Rational(mpz_class(std::string(num)), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      throw std::invalid_argument("malformed decimal: '" + std::string(text) + "'");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class w = whole.empty() ? mpz_class(0) : mpz_class(std::string(whole));
    mpz_class f = frac.empty() ? mpz_class(0) : mpz_class(std::string(frac));
    result = Rational(w * scale + f, scale);
  } else {
    if (!all_digits(s)) {
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    result = Rational(mpz_class(std::string(s)));
  }
  result.canonicalize();
  if (negative) result = -result;
  return result;
}

std::string to_string(const Rational& value) { return value.get_str(); }

double to_double(const Rational& value) {
  // mpq_get_d truncates; this rounds to nearest. The quotient is scaled to
  // 63 or 64 bits and a sticky bit records any remainder, so the single
  // uint64 -> double conversion rounds correctly.
  const int sign = sgn(value);
  if (sign == 0) return 0.0;
  mpz_class num = abs(value.get_num());
  mpz_class den = value.get_den();
  const long shift = 63 - (static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
                           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)));
  if (shift >= 0) {
    num <<= static_cast<mp_bitcnt_t>(shift);
  } else {
    den <<= static_cast<mp_bitcnt_t>(-shift);
  }
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  std::uint64_t bits = 0;
  mpz_export(&bits, nullptr, -1, sizeof bits, 0, 0, q.get_mpz_t());
  if (r != 0) bits |= 1u;
  const double magnitude = std::ldexp(static_cast<double>(bits), static_cast<int>(-shift));
  return sign < 0 ? -magnitude : magnitude;
}

Rational pow(const Rational& base, unsigned long exponent) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  out.canonicalize();
  return out;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  if (k > n) return out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace janken
