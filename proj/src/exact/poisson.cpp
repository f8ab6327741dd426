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

#include <algorithm>
#include <cmath>

#include "janken/exact.hpp"

namespace janken {

PoissonizedValue poissonize(std::span<const double> seq, double x) {
  if (!(x >= 0.0)) throw NumericError(NumericError::Kind::InvalidArgument, "poissonize needs x >= 0");
  if (seq.empty()) throw NumericError(NumericError::Kind::InvalidArgument, "poissonize needs a nonempty sequence");
  const double half_width = 10.0 * std::sqrt(x);
  PoissonizedValue out;
  out.lo = static_cast<int>(std::max(0.0, std::ceil(x - half_width)));
  out.hi = static_cast<int>(std::floor(x + half_width));
  const int last = static_cast<int>(seq.size()) - 1;
  if (out.hi > last) {
    throw NumericError(NumericError::Kind::WindowExceedsHorizon,
                       "Poisson window up to n=" + std::to_string(out.hi) + " exceeds horizon " + std::to_string(last));
  }
  const double log_x = x > 0.0 ? std::log(x) : 0.0;
  double total = 0.0;
  double largest = 0.0;
  for (int n = out.lo; n <= out.hi; ++n) {
    const double a = seq[static_cast<std::size_t>(n)];
    const double log_weight = n == 0 ? -x : -x + n * log_x - std::lgamma(n + 1.0);
    total += a * std::exp(log_weight);
  }
  for (double a : seq) largest = std::max(largest, std::abs(a));
  // Bernstein bounds for the Poisson tails beyond x +- half_width.
  double tail = 0.0;
  if (x > 0.0) {
    const double t = half_width;
    tail += std::exp(-t * t / (2.0 * (x + t / 3.0)));
    if (x - t > 0.0) tail += std::exp(-t * t / (2.0 * x));
  }
  out.value = total;
  out.tail_mass = tail;
  out.truncation_bound = tail * largest;
  return out;
}

}  // namespace janken
