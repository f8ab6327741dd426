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
#include <numbers>

#include "janken/sim.hpp"

namespace janken {
namespace {

template <typename Cdf>
double ks_distance(std::vector<double>& samples, Cdf cdf) {
  std::sort(samples.begin(), samples.end());
  const double count = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, f - static_cast<double>(i) / count, static_cast<double>(i + 1) / count - f});
  }
  return d;
}

}  // namespace

double ks_exp1(std::vector<double> samples) {
  if (samples.empty()) throw std::invalid_argument("ks_exp1 needs samples");
  return ks_distance(samples, [](double x) { return x <= 0.0 ? 0.0 : -std::expm1(-x); });
}

double ks_normal(std::vector<double> samples) {
  if (samples.empty()) throw std::invalid_argument("ks_normal needs samples");
  const MeasureSummary s = summarize(samples);
  if (!(s.variance > 0.0)) throw std::invalid_argument("ks_normal needs samples with nonzero spread");
  const double sd = std::sqrt(s.variance);
  for (double& x : samples) x = (x - s.mean) / sd;
  return ks_distance(samples, [](double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); });
}

bool on_one_semicircle(std::vector<double> angles) {
  if (angles.size() < 2) return true;
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  for (double& a : angles) a = std::fmod(std::fmod(a, kTwoPi) + kTwoPi, kTwoPi);
  std::sort(angles.begin(), angles.end());
  double gap = angles.front() + kTwoPi - angles.back();
  for (std::size_t i = 1; i < angles.size(); ++i) gap = std::max(gap, angles[i] - angles[i - 1]);
  return gap >= std::numbers::pi;
}

namespace {

bool draw_semicircle_round(int n, Rng& rng, std::vector<double>& angles) {
  for (int i = 0; i < n; ++i) angles[static_cast<std::size_t>(i)] = 2.0 * std::numbers::pi * rng.uniform();
  return on_one_semicircle(angles);
}

}  // namespace

SimSummary semicircle_game(int n, std::int64_t trials, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("semicircle game needs n >= 2");
  SimSummary out;
  out.config.n = n;
  out.config.trials = trials;
  out.config.seed = seed;
  out.config.mode = SimMode::PerRound;
  require_valid(out.config);
  out.game = "semicircle";
  out.samples.resize(static_cast<std::size_t>(trials));
  std::vector<double> angles(static_cast<std::size_t>(n));
  for (std::int64_t t = 0; t < trials; ++t) {
    Rng rng(seed, static_cast<std::uint64_t>(t));
    TrialSample& s = out.samples[static_cast<std::size_t>(t)];
    s.trial = t;
    while (!draw_semicircle_round(n, rng, angles)) ++s.x;
    s.y = static_cast<std::uint64_t>(n) * (s.x + 1);
    s.z = 1;
  }
  std::vector<double> values(out.samples.size());
  auto measure = [&](auto field) {
    std::transform(out.samples.begin(), out.samples.end(), values.begin(),
                   [&](const TrialSample& s) { return static_cast<double>(field(s)); });
    return summarize(values);
  };
  out.x = measure([](const TrialSample& s) { return s.x; });
  out.y = measure([](const TrialSample& s) { return s.y; });
  out.z = measure([](const TrialSample& s) { return s.z; });
  return out;
}

double semicircle_success_rate(int n, std::int64_t draws, std::uint64_t seed) {
  if (n < 2 || draws < 1) throw std::invalid_argument("semicircle rate needs n >= 2 and draws >= 1");
  std::vector<double> angles(static_cast<std::size_t>(n));
  std::int64_t hits = 0;
  for (std::int64_t d = 0; d < draws; ++d) {
    Rng rng(seed, static_cast<std::uint64_t>(d));
    hits += draw_semicircle_round(n, rng, angles) ? 1 : 0;
  }
  return static_cast<double>(hits) / static_cast<double>(draws);
}

}  // namespace janken
