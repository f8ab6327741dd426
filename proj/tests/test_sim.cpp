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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "janken/builtins.hpp"
#include "janken/exact.hpp"
#include "janken/sim.hpp"

using namespace janken;

namespace {

Game make(const char* name) { return Game(builtin_game(name)); }

SimConfig config(int n, std::int64_t trials, std::uint64_t seed, SimMode mode) {
  SimConfig c;
  c.n = n;
  c.trials = trials;
  c.seed = seed;
  c.mode = mode;
  return c;
}

bool within(const MeasureSummary& a, const MeasureSummary& b, double k) {
  return std::abs(a.mean - b.mean) <= k * std::hypot(a.std_error, b.std_error);
}

}  // namespace

TEST_CASE("rng streams") {
  Rng a(42, 7), b(42, 7), c(42, 8), d(43, 7);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 1000; ++i) {
    const auto va = a();
    CHECK(va == b());
    seen.insert(va);
    seen.insert(c());
    seen.insert(d());
  }
  CHECK(seen.size() == 3000);
  Rng u(1, 1);
  double total = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double x = u.uniform();
    REQUIRE(x > 0.0);
    REQUIRE(x <= 1.0);
    total += x;
  }
  CHECK(total / 100000.0 == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("play_round") {
  SUBCASE("coin: survivors are the heads") {
    const Game coin = make("ctls");
    Rng rng(3, 0);
    int conclusive = 0;
    for (int i = 0; i < 2000; ++i) {
      const std::vector<std::int64_t> counts{5, 0};
      const RoundResult r = play_round(coin, counts, rng);
      if (r.conclusive) {
        ++conclusive;
        CHECK(r.counts[1] == 0);
        CHECK(r.counts[0] >= 1);
        CHECK(r.counts[0] <= 4);
      } else {
        CHECK(r.counts == counts);
      }
    }
    CHECK(conclusive > 1800);
  }
  SUBCASE("rps: ties leave counts unchanged, wins keep one hand") {
    const Game rps = make("rpsls");
    Rng rng(4, 0);
    int ties = 0;
    for (int i = 0; i < 2000; ++i) {
      const std::vector<std::int64_t> counts{1, 1, 1};
      const RoundResult r = play_round(rps, counts, rng);
      if (!r.conclusive) {
        ++ties;
        CHECK(r.counts == counts);
      } else {
        int hands_left = 0;
        for (auto c : r.counts) hands_left += c > 0 ? 1 : 0;
        CHECK(hands_left == 1);
      }
    }
    // P(tie) = 1/3 with three players.
    CHECK(std::abs(ties / 2000.0 - 1.0 / 3.0) < 0.05);
  }
  SUBCASE("preconditions") {
    Rng rng(0, 0);
    CHECK_THROWS_AS(play_round(make("rpsls"), std::vector<std::int64_t>{1, 0, 0}, rng), std::invalid_argument);
    CHECK_THROWS_AS(play_round(make("rpsls"), std::vector<std::int64_t>{1, 1}, rng), std::invalid_argument);
  }
}

TEST_CASE("one player costs nothing") {
  for (SimMode mode : {SimMode::PerRound, SimMode::FastForward}) {
    const SimSummary s = simulate(make("rpsls"), config(1, 10, 1, mode));
    for (const auto& t : s.samples) {
      CHECK(t.x == 0);
      CHECK(t.y == 0);
      CHECK(t.z == 0);
    }
  }
}

TEST_CASE("determinism") {
  const Game g = make("world-china");
  for (SimMode mode : {SimMode::PerRound, SimMode::FastForward}) {
    SimConfig c = config(7, 3000, 99, mode);
    const SimSummary a = simulate(g, c);
    const SimSummary b = simulate(g, c);
    c.threads = 3;
    const SimSummary t = simulate(g, c);
    REQUIRE(a.samples.size() == 3000);
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
      CHECK(a.samples[i].trial == static_cast<std::int64_t>(i));
      CHECK(a.samples[i].x == b.samples[i].x);
      CHECK(a.samples[i].y == t.samples[i].y);
      CHECK(a.samples[i].z == t.samples[i].z);
    }
    CHECK(a.x->mean == t.x->mean);
    CHECK(a.y->variance == t.y->variance);
    CHECK(a.tie_rounds_total == t.tie_rounds_total);
    c.seed = 100;
    CHECK(simulate(g, c).x->mean != a.x->mean);
  }
}

TEST_CASE("per-round and fast-forward agree in distribution") {
  const Game rps = make("rpsls");
  for (int n : {4, 8}) {
    CAPTURE(n);
    const SimSummary pr = simulate(rps, config(n, 100000, 5, SimMode::PerRound));
    const SimSummary ff = simulate(rps, config(n, 100000, 6, SimMode::FastForward));
    CHECK(within(*pr.x, *ff.x, 4.0));
    CHECK(within(*pr.y, *ff.y, 4.0));
    CHECK(within(*pr.z, *ff.z, 4.0));
  }
}

TEST_CASE("simulated means match the exact engine") {
  for (const auto& name : builtin_names()) {
    const Game g(builtin_game(name));
    TableRequest req;
    req.horizon = 6;
    const auto t = compute_tables<double>(g, req);
    for (int n : {3, 6}) {
      CAPTURE(name);
      CAPTURE(n);
      const SimSummary s = simulate(g, config(n, 20000, 17, SimMode::PerRound));
      CHECK(std::abs(s.x->mean - t.mu[n]) <= 4.0 * s.x->std_error);
      CHECK(std::abs(s.y->mean - t.y_mean[n]) <= 4.0 * s.y->std_error);
      CHECK(std::abs(s.z->mean - t.z_mean[n]) <= 4.0 * s.z->std_error + 1e-12);
    }
  }
}

TEST_CASE("per-trial accounting") {
  const Game g = make("world-germany");
  const Simulator pr(g, 9, SimMode::PerRound);
  const Simulator ff(g, 9, SimMode::FastForward);
  for (int t = 0; t < 500; ++t) {
    for (const Simulator* sim : {&pr, &ff}) {
      Rng rng(8, static_cast<std::uint64_t>(t));
      std::vector<RoundRecord> trace;
      const TrialSample s = sim->run(9, rng, 1'000'000, t, &trace);
      std::uint64_t x = 0, y = 0, z = 0;
      std::int64_t live = 9;
      for (const auto& r : trace) {
        CHECK(r.live == live);
        CHECK(r.survivors >= 1);
        CHECK(r.survivors <= r.live);
        x += r.repeats;
        y += r.repeats * static_cast<std::uint64_t>(r.live);
        z += r.survivors < r.live ? 1 : 0;
        live = r.survivors;
      }
      CHECK(live == 1);
      CHECK(s.x == x);
      CHECK(s.y == y);
      CHECK(s.z == z);
      CHECK(s.z <= s.x);
    }
  }
}

TEST_CASE("summary bookkeeping") {
  SimConfig c = config(5, 4000, 3, SimMode::FastForward);
  c.measures = static_cast<unsigned>(Measure::X) | static_cast<unsigned>(Measure::Z);
  const SimSummary s = simulate(make("rpsls"), c);
  CHECK(s.x.has_value());
  CHECK_FALSE(s.y.has_value());
  CHECK(s.x->count == 4000);
  CHECK(s.x->variance >= 0.0);
  std::uint64_t ties = 0;
  for (const auto& t : s.samples) ties += t.x - t.z;
  CHECK(s.tie_rounds_total == ties);
  CHECK(s.game == "rpsls");

  const std::vector<double> one{3.0};
  CHECK(summarize(one).variance == 0.0);
  const std::vector<double> four{1.0, 2.0, 3.0, 4.0};
  CHECK(summarize(four).mean == 2.5);
  CHECK(summarize(four).variance == doctest::Approx(5.0 / 3.0));

  CHECK_THROWS_AS(simulate(make("rpsls"), config(0, 10, 0, SimMode::PerRound)), std::invalid_argument);
  CHECK_THROWS_AS(simulate(make("rpsls"), config(3, 0, 0, SimMode::PerRound)), std::invalid_argument);
}

TEST_CASE("fast-forward tie runs are geometric") {
  // Two coin players: X is geometric with success 1/2, so E X = 2 and Var X = 2.
  const SimSummary s = simulate(make("ctls"), config(2, 100000, 12, SimMode::FastForward));
  CHECK(std::abs(s.x->mean - 2.0) <= 4.0 * s.x->std_error);
  CHECK(std::abs(s.x->variance - 2.0) < 0.1);
  for (const auto& t : s.samples) CHECK(t.z == 1);
}

TEST_CASE("fast-forward samples follow the exact law of X_n") {
  // Integer-valued samples: the empirical and exact CDFs are both constant
  // between integers, so comparing at the integers gives the KS distance.
  const int n = 20;
  const Game rps = make("rpsls");
  const auto cdf = round_distribution<double>(rps, n, auto_levels(rps, n));
  const SimSummary s = simulate(rps, config(n, 10000, 31, SimMode::FastForward));
  std::vector<std::uint64_t> x;
  for (const auto& t : s.samples) x.push_back(t.x);
  std::sort(x.begin(), x.end());
  double d = 0.0;
  std::size_t below = 0;
  for (std::size_t l = 0; l < cdf.size(); ++l) {
    while (below < x.size() && x[below] <= l) ++below;
    d = std::max(d, std::abs(static_cast<double>(below) / static_cast<double>(x.size()) - cdf[l][n]));
  }
  CHECK(d < 1.63 / 100.0);
}

TEST_CASE("round cap aborts the run") {
  SimConfig c = config(6, 200, 1, SimMode::PerRound);
  c.round_cap = 1;
  CHECK_THROWS_AS(simulate(make("rpsls"), c), NonTerminating);
  c.mode = SimMode::FastForward;
  CHECK_THROWS_AS(simulate(make("rpsls"), c), NonTerminating);
}

TEST_CASE("ks statistics") {
  std::mt19937_64 gen(2024);
  std::exponential_distribution<double> expo(1.0);
  std::normal_distribution<double> normal(3.0, 2.0);
  std::vector<double> e(10000), z(10000);
  for (auto& v : e) v = expo(gen);
  for (auto& v : z) v = normal(gen);
  CHECK(ks_exp1(e) < 1.63 / 100.0);
  CHECK(ks_normal(z) < 1.63 / 100.0);
  const std::vector<double> constant(100, 0.5);
  CHECK(ks_exp1(constant) >= 1.0 - std::exp(-0.5) - 1e-12);
  CHECK(ks_exp1(std::vector<double>{1.0}) == doctest::Approx(std::max(1.0 - std::exp(-1.0), std::exp(-1.0))));
  CHECK_THROWS_AS(ks_exp1({}), std::invalid_argument);
  CHECK_THROWS_AS(ks_normal(constant), std::invalid_argument);
}

TEST_CASE("semicircle game") {
  const double pi = std::numbers::pi;
  CHECK(on_one_semicircle({0.0, 3.0}));
  CHECK(on_one_semicircle({0.0, pi / 2, pi}));
  CHECK_FALSE(on_one_semicircle({0.0, 2 * pi / 3, 4 * pi / 3}));
  CHECK(on_one_semicircle({-0.1, 0.1, 3.0}));

  const SimSummary two = semicircle_game(2, 1000, 1);
  CHECK(two.x->mean == 0.0);
  for (const auto& t : two.samples) CHECK(t.y == 2);

  const double rate = semicircle_success_rate(4, 100000, 5);
  CHECK(std::abs(rate - 0.5) <= 4.0 * std::sqrt(0.25 / 100000));

  const SimSummary six = semicircle_game(6, 20000, 9);
  CHECK(std::abs(six.x->mean - (32.0 / 6.0 - 1.0)) <= 4.0 * six.x->std_error);
  CHECK(six.z->mean == 1.0);
  CHECK_THROWS_AS(semicircle_game(1, 10, 0), std::invalid_argument);
}
