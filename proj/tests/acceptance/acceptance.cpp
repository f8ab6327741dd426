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

// Acceptance suite: one PASS/FAIL line per criterion; exit status is the
// number of failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "janken/asymptotics.hpp"
#include "janken/builtins.hpp"
#include "janken/exact.hpp"
#include "janken/sim.hpp"
#include "oracle/markov_oracle.hpp"

using namespace janken;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double time_limit_s;  // 0 = none
  std::function<Outcome()> body;
};

Game make(const char* name) { return Game(builtin_game(name)); }

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

SimConfig sim_config(int n, std::int64_t trials, std::uint64_t seed, SimMode mode) {
  SimConfig c;
  c.n = n;
  c.trials = trials;
  c.seed = seed;
  c.mode = mode;
  return c;
}

Outcome rps_table() {
  const auto mu = mean_rounds<Rational>(make("rpsls"), 8);
  const double expected[] = {1.5, 2.25, 3.21, 4.49, 6.22, 8.65, 12.1};
  double worst = 0.0;
  for (int n = 2; n <= 8; ++n) worst = std::max(worst, std::abs(to_double(mu[n]) - expected[n - 2]));
  return {worst <= 0.01, fmt("max |mu_n - table| = %.4g (tol 0.01)", worst)};
}

Outcome coin_hands() {
  const auto y = total_hands_mean<Rational>(make("ctls"), 50);
  int bad = 0;
  for (int n = 2; n <= 50; ++n) bad += y[n] == 2 * n ? 0 : 1;
  bad += y[1] == 0 ? 0 : 1;
  return {bad == 0, fmt("%d of 50 values differ from 2n (exact rational comparison)", bad)};
}

Outcome exp_limit_mean() {
  const auto m = moments<double>(make("rpsls"), 25, 2);
  const double scaled = 3.0 * std::pow(2.0 / 3.0, 25) * m[25][1];
  const double second = m[25][2] / (2.0 * m[25][1] * m[25][1]);
  return {std::abs(scaled - 1.0) <= 0.02 && second >= 0.95 && second <= 1.05,
          fmt("3(2/3)^25 mu_25 = %.5f (tol 0.02), mu_25,2/(2 mu_25^2) = %.5f (in [0.95, 1.05])", scaled, second)};
}

double limit_cdf_deviation(const char* name, int m, int n, int ell_hi) {
  const int base = floor_log(n, m);
  const auto cdf = round_distribution<double>(make(name), n, base + ell_hi);
  double worst = 0.0;
  for (int ell = -2; ell <= ell_hi; ++ell) {
    worst = std::max(worst, std::abs(cdf[static_cast<std::size_t>(base + ell)][static_cast<std::size_t>(n)] -
                                     limit_cdf_acyclic_clique(m, n, ell)));
  }
  return worst;
}

Outcome log_limit_cdf() {
  const double coin = limit_cdf_deviation("ctls", 2, 1024, 20);
  const double clique = limit_cdf_deviation("clique?m=3", 3, 729, 20);
  return {coin <= 0.01 && clique <= 0.02,
          fmt("coin n=1024: %.3g (tol 0.01); 3-clique n=729: %.3g (tol 0.02)", coin, clique)};
}

Outcome coin_fluctuation() {
  const auto mu = mean_rounds<double>(make("ctls"), 4096);
  const auto p = fluctuation_profile(mu, 0.5, [](int n) { return std::log2(n) + 0.5; }, 2048, 4096);
  return {p.amplitude <= 1e-3, fmt("max |mu_n - log2 n - 1/2| over [2048, 4096] = %.3g (tol 1e-3)", p.amplitude)};
}

Outcome classification_table() {
  struct Row {
    const char* name;
    Rational rho;
    int nu;
  };
  const Row rows[] = {
      {"world-germany", Rational(3, 4), 2}, {"world-malaysia", Rational(4, 5), 1}, {"world-china", Rational(4, 5), 3},
      {"rpsls", Rational(2, 3), 3},         {"tournament?m=2", Rational(3, 5), 5}, {"circulant?m=2", Rational(4, 5), 5},
  };
  std::string detail;
  bool pass = true;
  for (const Row& r : rows) {
    const Classification c = classify(make(r.name));
    const bool ok = c.rho == r.rho && c.nu == r.nu;
    pass = pass && ok;
    detail += fmt("%s (%s,%d)%s ", r.name, to_string(c.rho).c_str(), c.nu, ok ? "" : "!");
  }
  return {pass, detail};
}

Outcome oracle_equivalence() {
  int mismatches = 0;
  for (const char* name : {"graph1", "graph2", "graph3", "graph4", "graph5", "ctls"}) {
    const Game g = make(name);
    const auto oracle = testing::build_oracle(g, 6);
    TableRequest req;
    req.horizon = 6;
    req.levels = 15;
    const auto t = compute_tables<Rational>(g, req);
    for (int n = 1; n <= 6; ++n) {
      mismatches += t.mu[n] == oracle.mean[n] ? 0 : 1;
      mismatches += t.var[n] == oracle.var[n] ? 0 : 1;
      for (int l = 0; l <= 15; ++l) mismatches += t.cdf[l][n] == oracle.cdf(l, n) ? 0 : 1;
    }
  }
  int no_tie_mismatch = 0;
  for (int n = 2; n <= 40; ++n) no_tie_mismatch += no_tie_prob(make("graph5"), n) == no_tie_prob(make("graph3"), n) ? 0 : 1;
  return {mismatches == 0 && no_tie_mismatch == 0,
          fmt("%d oracle mismatches over 6 games x n<=6 (mu, var, F_0..F_15); %d no-tie mismatches graph V vs III",
              mismatches, no_tie_mismatch)};
}

Outcome monte_carlo_consistency() {
  const Game g = make("rpsls");
  const double exact = mean_rounds<double>(g, 6)[6];
  const SimSummary pr = simulate(g, sim_config(6, 100000, 20260101, SimMode::PerRound));
  const SimSummary ff = simulate(g, sim_config(6, 100000, 20260102, SimMode::FastForward));
  const SimSummary again = simulate(g, sim_config(6, 100000, 20260101, SimMode::PerRound));
  const double z_exact = (pr.x->mean - exact) / pr.x->std_error;
  const double z_modes = (pr.x->mean - ff.x->mean) / std::hypot(pr.x->std_error, ff.x->std_error);
  bool identical = again.x->mean == pr.x->mean && again.x->variance == pr.x->variance &&
                   again.tie_rounds_total == pr.tie_rounds_total;
  for (std::size_t i = 0; identical && i < pr.samples.size(); ++i) {
    identical = pr.samples[i].x == again.samples[i].x && pr.samples[i].y == again.samples[i].y &&
                pr.samples[i].z == again.samples[i].z;
  }
  return {std::abs(z_exact) <= 4.0 && std::abs(z_modes) <= 4.0 && identical,
          fmt("mean %.4f vs exact %.4f (z=%.2f), per-round vs fast-forward z=%.2f (tol 4), rerun %s", pr.x->mean,
              exact, z_exact, z_modes, identical ? "bit-identical" : "DIFFERS")};
}

// Supremum distance between the empirical CDF of integer samples and a CDF
// given at the integers.
double ks_integer(const std::vector<std::uint64_t>& samples, const std::vector<double>& cdf) {
  std::vector<std::uint64_t> sorted = samples;
  std::sort(sorted.begin(), sorted.end());
  double d = 0.0;
  std::size_t below = 0;
  for (std::size_t l = 0; l < cdf.size(); ++l) {
    while (below < sorted.size() && sorted[below] <= l) ++below;
    d = std::max(d, std::abs(static_cast<double>(below) / static_cast<double>(sorted.size()) - cdf[l]));
  }
  return d;
}

Outcome exp_limit_law() {
  const int n = 20;
  const Game g = make("rpsls");
  const SimSummary s = simulate(g, sim_config(n, 10000, 909, SimMode::FastForward));
  std::vector<double> scaled;
  std::vector<std::uint64_t> rounds;
  const double scale = 3.0 * std::pow(2.0 / 3.0, n);
  for (const auto& t : s.samples) {
    scaled.push_back(scale * static_cast<double>(t.x));
    rounds.push_back(t.x);
  }
  const double ks = ks_exp1(scaled);
  // Context for the verdict: distance of the exact law of X_20 itself from
  // Exp(1), and of the samples from that exact law.
  const auto cdf = round_distribution<double>(g, n, auto_levels(g, n));
  std::vector<double> law(cdf.size());
  double bias = 0.0;
  for (std::size_t l = 0; l < cdf.size(); ++l) {
    law[l] = cdf[l][n];
    const double f = -std::expm1(-scale * static_cast<double>(l));
    bias = std::max(bias, std::abs(law[l] - f));
    if (l > 0) bias = std::max(bias, std::abs(law[l - 1] - f));
  }
  return {ks < 0.03, fmt("KS(3(2/3)^20 X, Exp(1)) = %.4f (tol 0.03); exact law of X_20 is %.4f from Exp(1); "
                         "samples are %.4f from the exact law",
                         ks, bias, ks_integer(rounds, law))};
}

Outcome hands_clt() {
  const SimSummary s = simulate(make("ctls"), sim_config(4096, 2000, 4242, SimMode::PerRound));
  std::vector<double> y;
  for (const auto& t : s.samples) y.push_back(static_cast<double>(t.y));
  const double ks = ks_normal(y);
  return {ks < 0.05, fmt("KS(standardized Y_4096, N(0,1)) = %.4f (tol 0.05), mean Y = %.1f", ks, s.y->mean)};
}

Outcome tie_free_doubling() {
  const auto z = tie_free_mean<double>(make("rpsls"), 1024);
  const double step = z[1024] - z[512];
  return {std::abs(step - 1.0) <= 0.05, fmt("z_1024 - z_512 = %.5f (target 1, tol 0.05)", step)};
}

Outcome semicircle() {
  const SimSummary s = semicircle_game(6, 100000, 606);
  const double expected = 32.0 / 6.0 - 1.0;
  const double z = (s.x->mean - expected) / s.x->std_error;
  return {std::abs(z) <= 4.0, fmt("mean %.4f vs %.4f (z=%.2f, tol 4 SE)", s.x->mean, expected, z)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "RPSLS mean table", 1.0, rps_table},
      {2, "CTLS total hands E(Y_n) = 2n", 5.0, coin_hands},
      {3, "exp-game limit mean", 5.0, exp_limit_mean},
      {4, "log-game limit CDF", 30.0, log_limit_cdf},
      {5, "CTLS mean fluctuation bound", 60.0, coin_fluctuation},
      {6, "classification table", 0.0, classification_table},
      {7, "Markov-chain oracle equivalence", 0.0, oracle_equivalence},
      {8, "Monte Carlo consistency", 0.0, monte_carlo_consistency},
      {9, "exponential limit law by simulation", 0.0, exp_limit_law},
      {10, "Y_n central limit behaviour", 0.0, hands_clt},
      {11, "tie-free doubling slope", 0.0, tie_free_doubling},
      {12, "semicircle game", 0.0, semicircle},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = o.pass;
    std::string timing = fmt("%.2fs", seconds);
    if (c.time_limit_s > 0.0) {
      timing += fmt(" (limit %.0fs)", c.time_limit_s);
      pass = pass && seconds < c.time_limit_s;
    }
    failures += pass ? 0 : 1;
    std::printf("AC%-2d %s  %s: %s [%s]\n", c.id, pass ? "PASS" : "FAIL", c.title, o.detail.c_str(), timing.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}
