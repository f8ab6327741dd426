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
#include <exception>
#include <numeric>
#include <thread>

#include "janken/exact.hpp"
#include "janken/sim.hpp"

namespace janken {

std::string_view to_string(SimMode mode) { return mode == SimMode::PerRound ? "per-round" : "fast-forward"; }

SimMode parse_sim_mode(std::string_view text) {
  if (text == "per-round") return SimMode::PerRound;
  if (text == "fast-forward") return SimMode::FastForward;
  throw std::invalid_argument("unknown simulation mode '" + std::string(text) + "'");
}

void require_valid(const SimConfig& config) {
  if (config.n < 1) throw std::invalid_argument("simulation needs n >= 1");
  if (config.trials < 1) throw std::invalid_argument("simulation needs trials >= 1");
  if (config.threads < 1) throw std::invalid_argument("simulation needs threads >= 1");
}

NonTerminating::NonTerminating(std::int64_t trial, std::uint64_t rounds)
    : std::runtime_error("trial " + std::to_string(trial) + " still running after " + std::to_string(rounds) +
                         " rounds"),
      trial_(trial) {}

namespace {

std::vector<double> cumulative_probs(const Game& game) {
  std::vector<double> cdf(game.probs_double().size());
  std::partial_sum(game.probs_double().begin(), game.probs_double().end(), cdf.begin());
  cdf.back() = 1.0;
  return cdf;
}

int draw_hand(const std::vector<double>& cdf, Rng& rng) {
  const double u = rng.uniform();
  int h = 0;
  while (u > cdf[static_cast<std::size_t>(h)]) ++h;
  return h;
}

// Throws `live` hands into counts and returns the realized support.
HandSet throw_hands(const std::vector<double>& cdf, std::int64_t live, Rng& rng, std::vector<std::int64_t>& counts) {
  std::fill(counts.begin(), counts.end(), 0);
  HandSet support;
  for (std::int64_t p = 0; p < live; ++p) {
    const int h = draw_hand(cdf, rng);
    ++counts[static_cast<std::size_t>(h)];
    support.insert(h);
  }
  return support;
}

}  // namespace

RoundResult play_round(const Game& game, std::span<const std::int64_t> counts, Rng& rng) {
  if (counts.size() != static_cast<std::size_t>(game.hands())) {
    throw std::invalid_argument("play_round needs one count per hand");
  }
  const std::int64_t live = std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
  if (live < 2) throw std::invalid_argument("play_round needs at least two players");
  std::vector<std::int64_t> thrown(counts.size());
  const HandSet support = throw_hands(cumulative_probs(game), live, rng, thrown);
  RoundResult out;
  if (const WodSet* w = game.outcome(support)) {
    for (Hand h = 0; h < game.hands(); ++h) {
      if (!w->winners.contains(h)) thrown[static_cast<std::size_t>(h)] = 0;
    }
    out.counts = std::move(thrown);
    out.conclusive = true;
  } else {
    out.counts.assign(counts.begin(), counts.end());
  }
  return out;
}

struct Simulator::Impl {
  const Game* game;
  SimMode mode;
  int max_players;
  std::vector<double> hand_cdf;
  // Fast-forward: per player count k, cumulative J_k law over j = 1..k-1 and log P(tie).
  std::vector<std::vector<double>> jump_cdf;
  std::vector<double> log_tie;
};

Simulator::Simulator(const Game& game, int max_players, SimMode mode) : impl_(std::make_unique<Impl>()) {
  impl_->game = &game;
  impl_->mode = mode;
  impl_->max_players = max_players;
  impl_->hand_cdf = cumulative_probs(game);
  if (mode == SimMode::FastForward && max_players >= 2) {
    const KernelSource<double> source(game, max_players);
    impl_->jump_cdf.resize(static_cast<std::size_t>(max_players) + 1);
    impl_->log_tie.assign(static_cast<std::size_t>(max_players) + 1, 0.0);
    for (int k = 2; k <= max_players; ++k) {
      const Kernel<double> row = source.row(k);
      auto& cdf = impl_->jump_cdf[static_cast<std::size_t>(k)];
      cdf.resize(static_cast<std::size_t>(k - 1));
      double running = 0.0;
      for (int j = 1; j < k; ++j) {
        running += row.jump[static_cast<std::size_t>(j)];
        cdf[static_cast<std::size_t>(j - 1)] = running;
      }
      cdf.back() = 1.0;
      impl_->log_tie[static_cast<std::size_t>(k)] = row.tie_prob > 0.0 ? std::log(row.tie_prob) : -INFINITY;
    }
  }
}

Simulator::~Simulator() = default;

TrialSample Simulator::run(int n, Rng& rng, std::uint64_t round_cap, std::int64_t trial,
                           std::vector<RoundRecord>* trace) const {
  if (n < 1 || n > impl_->max_players) throw std::invalid_argument("player count outside the simulator range");
  TrialSample s;
  s.trial = trial;
  std::int64_t live = n;
  if (impl_->mode == SimMode::PerRound) {
    const Game& game = *impl_->game;
    std::vector<std::int64_t> counts(static_cast<std::size_t>(game.hands()));
    while (live > 1) {
      if (s.x >= round_cap) throw NonTerminating(trial, s.x);
      const HandSet support = throw_hands(impl_->hand_cdf, live, rng, counts);
      std::int64_t survivors = live;
      if (const WodSet* w = game.outcome(support)) {
        survivors = 0;
        for (Hand h : w->winners.hands()) survivors += counts[static_cast<std::size_t>(h)];
        ++s.z;
      }
      ++s.x;
      s.y += static_cast<std::uint64_t>(live);
      if (trace) trace->push_back({live, survivors, 1});
      live = survivors;
    }
    return s;
  }
  while (live > 1) {
    const auto k = static_cast<std::size_t>(live);
    const double log_tie = impl_->log_tie[k];
    double rounds = 1.0;
    if (log_tie > -INFINITY) rounds = std::max(1.0, std::ceil(std::log(rng.uniform()) / log_tie));
    if (static_cast<double>(s.x) + rounds > static_cast<double>(round_cap)) {
      throw NonTerminating(trial, round_cap);
    }
    const auto t = static_cast<std::uint64_t>(rounds);
    const auto& cdf = impl_->jump_cdf[k];
    const double u = rng.uniform();
    const auto survivors = static_cast<std::int64_t>(std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin()) + 1;
    s.x += t;
    s.y += static_cast<std::uint64_t>(live) * t;
    ++s.z;
    if (trace) trace->push_back({live, survivors, t});
    live = survivors;
  }
  return s;
}

MeasureSummary summarize(std::span<const double> values) {
  MeasureSummary out;
  double mean = 0.0;
  double m2 = 0.0;
  for (double v : values) {
    ++out.count;
    const double delta = v - mean;
    mean += delta / static_cast<double>(out.count);
    m2 += delta * (v - mean);
  }
  out.mean = mean;
  out.variance = out.count > 1 ? std::max(0.0, m2 / static_cast<double>(out.count - 1)) : 0.0;
  out.std_error = out.count > 0 ? std::sqrt(out.variance / static_cast<double>(out.count)) : 0.0;
  return out;
}

SimSummary simulate(const Game& game, const SimConfig& config) {
  require_valid(config);
  const Simulator sim(game, config.n, config.mode);
  SimSummary out;
  out.config = config;
  out.game = game.name();
  out.samples.resize(static_cast<std::size_t>(config.trials));

  const auto workers = static_cast<std::int64_t>(std::min<std::int64_t>(config.threads, config.trials));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  auto work = [&](std::int64_t w) {
    const std::int64_t begin = config.trials * w / workers;
    const std::int64_t end = config.trials * (w + 1) / workers;
    try {
      for (std::int64_t t = begin; t < end; ++t) {
        Rng rng(config.seed, static_cast<std::uint64_t>(t));
        out.samples[static_cast<std::size_t>(t)] = sim.run(config.n, rng, config.round_cap, t);
      }
    } catch (...) {
      errors[static_cast<std::size_t>(w)] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::int64_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<double> values(out.samples.size());
  auto measure = [&](auto field) {
    std::transform(out.samples.begin(), out.samples.end(), values.begin(),
                   [&](const TrialSample& s) { return static_cast<double>(field(s)); });
    return summarize(values);
  };
  if (config.wants(Measure::X)) out.x = measure([](const TrialSample& s) { return s.x; });
  if (config.wants(Measure::Y)) out.y = measure([](const TrialSample& s) { return s.y; });
  if (config.wants(Measure::Z)) out.z = measure([](const TrialSample& s) { return s.z; });
  for (const auto& s : out.samples) out.tie_rounds_total += s.x - s.z;
  return out;
}

}  // namespace janken
