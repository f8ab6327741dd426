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

#ifndef JANKEN_SIM_HPP_
#define JANKEN_SIM_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "janken/game.hpp"
#include "janken/rng.hpp"

namespace janken {

enum class SimMode { PerRound, FastForward };
std::string_view to_string(SimMode mode);
SimMode parse_sim_mode(std::string_view text);

enum class Measure : unsigned { X = 1, Y = 2, Z = 4 };

struct SimConfig {
  int n = 2;
  std::int64_t trials = 1;
  std::uint64_t seed = 0;
  SimMode mode = SimMode::PerRound;
  // Bitwise OR of Measure values.
  unsigned measures = 7;
  // Effective rounds (ties included) after which a trial is abandoned.
  std::uint64_t round_cap = 1'000'000'000;
  // Worker threads; results do not depend on this value.
  int threads = 1;

  bool wants(Measure m) const { return (measures & static_cast<unsigned>(m)) != 0; }
};

// Throws std::invalid_argument when trials < 1, n < 1 or threads < 1.
void require_valid(const SimConfig& config);

struct TrialSample {
  std::int64_t trial = 0;
  std::uint64_t x = 0;  // rounds
  std::uint64_t y = 0;  // hands thrown
  std::uint64_t z = 0;  // conclusive rounds
};

struct MeasureSummary {
  std::int64_t count = 0;
  double mean = 0.0;
  double variance = 0.0;  // unbiased; 0 for a single sample
  double std_error = 0.0;
};

struct SimSummary {
  SimConfig config;
  std::string game;
  std::vector<TrialSample> samples;
  std::optional<MeasureSummary> x, y, z;
  std::uint64_t tie_rounds_total = 0;
};

class NonTerminating : public std::runtime_error {
 public:
  NonTerminating(std::int64_t trial, std::uint64_t rounds);
  std::int64_t trial() const { return trial_; }

 private:
  std::int64_t trial_;
};

struct RoundResult {
  std::vector<std::int64_t> counts;
  bool conclusive = false;
};

// One round. counts[h] is the number of live players last seen on hand h;
// only the total matters for who plays. Every live player draws a fresh hand.
// A conclusive round returns the per-hand counts of the winners; a tie
// returns the input unchanged.
RoundResult play_round(const Game& game, std::span<const std::int64_t> counts, Rng& rng);

struct RoundRecord {
  std::int64_t live = 0;
  std::int64_t survivors = 0;
  std::uint64_t repeats = 1;  // rounds covered by this record (a tie run in fast-forward)
};

// Plays single trials. Fast-forward needs the kernel rows for every player
// count up to max_players, which the constructor builds once.
class Simulator {
 public:
  Simulator(const Game& game, int max_players, SimMode mode);
  ~Simulator();
  Simulator(const Simulator&) = delete;
  Simulator& operator=(const Simulator&) = delete;

  // trace, when given, receives one record per round (per stage in
  // fast-forward). Throws NonTerminating past round_cap effective rounds.
  TrialSample run(int n, Rng& rng, std::uint64_t round_cap, std::int64_t trial = 0,
                  std::vector<RoundRecord>* trace = nullptr) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

SimSummary simulate(const Game& game, const SimConfig& config);

// Mean, unbiased variance and standard error of the mean, accumulated in
// input order.
MeasureSummary summarize(std::span<const double> values);

// Kolmogorov-Smirnov distance to Exp(1), and to N(0,1) after standardizing
// by the sample mean and standard deviation. Both throw std::invalid_argument
// on empty input; ks_normal also on zero spread.
double ks_exp1(std::vector<double> samples);
double ks_normal(std::vector<double> samples);

// Each trial redraws n uniform points on the circle until a closed semicircle
// holds all of them. x = failed draws, y = points drawn, z = 1.
SimSummary semicircle_game(int n, std::int64_t trials, std::uint64_t seed);
bool on_one_semicircle(std::vector<double> angles);
double semicircle_success_rate(int n, std::int64_t draws, std::uint64_t seed);

}  // namespace janken

#endif  // JANKEN_SIM_HPP_
