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

#ifndef JANKEN_ASYMPTOTICS_HPP_
#define JANKEN_ASYMPTOTICS_HPP_

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "janken/game.hpp"

namespace janken {

enum class Quantity { XMean, XVar, YMean, YVar, ZMean, LimitCdf };
std::string_view to_string(Quantity q);

struct Prediction {
  Quantity quantity = Quantity::XMean;
  double leading = 0.0;
  std::optional<double> correction;
  std::string validity;
};

class WrongKind : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Leading-order growth of `quantity` at n players. Additive periodic terms
// are not included. Throws WrongKind when no closed form applies to the
// game kind and std::invalid_argument when n < 2.
Prediction predict(const Classification& c, Quantity quantity, int n);

// t / (e^t - 1) with t = 2^({log2 n} - ell); 1 in the t -> 0 limit.
double limit_cdf_unbiased_ctls(long long n, int ell);
// Same with base m; {log_m n} is computed from the exact integer power below n.
double limit_cdf_acyclic_clique(int m, long long n, int ell);

// floor(log_m n) computed in integers.
int floor_log(long long n, int m);

struct FluctuationPoint {
  int n = 0;
  double phase = 0.0;  // {log_{1/alpha} n}, in [0, 1)
  double residual = 0.0;
};

struct FluctuationProfile {
  int n_lo = 0;
  int n_hi = 0;
  std::vector<FluctuationPoint> points;
  double amplitude = 0.0;           // max |residual|
  double offset = 0.0;              // mean residual
  double centered_amplitude = 0.0;  // max |residual - offset|
};

// residual(n) = seq[n] - leading(n) for n in [n_lo, n_hi]. Needs 0 < alpha < 1
// and n_hi < seq.size().
FluctuationProfile fluctuation_profile(std::span<const double> seq, double alpha,
                                       const std::function<double(int)>& leading, int n_lo, int n_hi);

struct TieFreeSlope {
  double h_nu = 0.0;
  // True when every rho/alpha_l is an integer power of one rational base.
  bool all_rational = false;
  std::optional<Rational> base;
  std::vector<int> exponents;
};

TieFreeSlope tie_free_slope(const Classification& c);

// Largest r with a = r^i and b = r^j for positive integers i, j, when one
// exists; a, b > 1. The search is exact and stops after
// bits(num a) + bits(num b) quotient steps, which suffices for any pair with
// a common base.
std::optional<Rational> common_power_base(const Rational& a, const Rational& b);

}  // namespace janken

#endif  // JANKEN_ASYMPTOTICS_HPP_
