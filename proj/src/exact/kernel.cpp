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
#include <limits>
#include <map>
#include <stdexcept>

#include "janken/exact.hpp"

namespace janken {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Below this many players support probabilities are evaluated exactly and
// then converted; the alternating sum is only trusted on its own above it.
constexpr int kExactSupportCutoff = 64;

double log_of(const mpz_class& z) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

double log_of(const Rational& q) {
  if (q <= 0) return kNegInf;
  return log_of(q.get_num()) - log_of(q.get_den());
}

double log_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

Rational exact_support_prob(const std::vector<Rational>& probs, HandSet support, int n) {
  Rational total = 0;
  const int size = support.size();
  for_each_subset(support, [&](HandSet t) {
    if (t.empty()) return;
    Rational mass = 0;
    for (Hand h : t.hands()) mass += probs[static_cast<std::size_t>(h)];
    Rational term = pow(mass, static_cast<unsigned long>(n));
    if ((size - t.size()) % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  });
  return total;
}

double float_log_support_prob(const Game& game, HandSet support, int n) {
  const int size = support.size();
  if (n < size) return kNegInf;
  if (n <= kExactSupportCutoff) return log_of(exact_support_prob(game.probs(), support, n));
  const auto& p = game.probs_double();
  double total_mass = 0.0;
  for (Hand h : support.hands()) total_mass += p[static_cast<std::size_t>(h)];
  double sum = 0.0;
  double magnitude = 0.0;
  for_each_subset(support, [&](HandSet t) {
    if (t.empty()) return;
    double mass = 0.0;
    for (Hand h : t.hands()) mass += p[static_cast<std::size_t>(h)];
    const double term = std::pow(mass / total_mass, n);
    magnitude += term;
    sum += ((size - t.size()) % 2 == 0) ? term : -term;
  });
  if (sum <= 1e-6 * magnitude) {
    // Heavy cancellation: fall back to exact arithmetic.
    return log_of(exact_support_prob(game.probs(), support, n));
  }
  return static_cast<double>(n) * std::log(total_mass) + std::log(sum);
}

void check_row(int n, int horizon) {
  if (n < 2 || n > horizon) {
    throw std::out_of_range("kernel row " + std::to_string(n) + " outside [2, " + std::to_string(horizon) + "]");
  }
}

}  // namespace

Rational support_prob(const Game& game, HandSet support, int n) {
  if (support.empty()) throw std::invalid_argument("EmptySupport: support_prob needs a nonempty support");
  if (n < 0) throw std::invalid_argument("support_prob needs n >= 0");
  if (n < support.size()) return Rational(0);
  return exact_support_prob(game.probs(), support, n);
}

double log_support_prob(const Game& game, HandSet support, int n) {
  if (support.empty()) throw std::invalid_argument("EmptySupport: log_support_prob needs a nonempty support");
  return float_log_support_prob(game, support, n);
}

Rational no_tie_prob(const Game& game, int n) {
  Rational total = 0;
  for (const WodSet& w : game.wod_sets()) total += support_prob(game, w.support, n);
  return total;
}

// ---------------------------------------------------------------------------
// Rational rows

struct KernelSource<Rational>::Impl {
  const Game* game;
  int horizon;
  // pi[support bits][j] for every support, winner side and loser side in use.
  std::map<std::uint32_t, std::vector<Rational>> pi;

  const std::vector<Rational>& table(HandSet s) const { return pi.at(s.bits()); }
};

KernelSource<Rational>::KernelSource(const Game& game, int horizon) : impl_(std::make_unique<Impl>()) {
  impl_->game = &game;
  impl_->horizon = horizon;
  auto ensure = [&](HandSet s) {
    auto [it, inserted] = impl_->pi.try_emplace(s.bits());
    if (!inserted) return;
    it->second.resize(static_cast<std::size_t>(horizon) + 1);
    for (int j = 0; j <= horizon; ++j) it->second[static_cast<std::size_t>(j)] = support_prob(game, s, j);
  };
  for (const WodSet& w : game.wod_sets()) {
    ensure(w.support);
    ensure(w.winners);
    ensure(w.losers());
  }
}

KernelSource<Rational>::~KernelSource() = default;

Kernel<Rational> KernelSource<Rational>::row(int n) const {
  check_row(n, impl_->horizon);
  Kernel<Rational> k;
  k.n = n;
  k.win_weight.assign(static_cast<std::size_t>(n), Rational(0));
  k.jump.assign(static_cast<std::size_t>(n), Rational(0));
  std::vector<mpz_class> binom(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) binom[static_cast<std::size_t>(j)] = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(j));
  k.no_tie = 0;
  for (const WodSet& w : impl_->game->wod_sets()) {
    const auto& pw = impl_->table(w.winners);
    const auto& pd = impl_->table(w.losers());
    const int lo = w.winners.size();
    const int hi = n - w.losers().size();
    for (int j = lo; j <= hi; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      k.win_weight[uj] += Rational(binom[uj]) * pw[uj] * pd[static_cast<std::size_t>(n - j)];
    }
    k.no_tie += impl_->table(w.support)[static_cast<std::size_t>(n)];
  }
  k.tie_prob = 1 - k.no_tie;
  for (int j = 1; j < n; ++j) k.jump[static_cast<std::size_t>(j)] = k.win_weight[static_cast<std::size_t>(j)] / k.no_tie;
  k.log_no_tie = log_of(k.no_tie);
  return k;
}

// ---------------------------------------------------------------------------
// Float rows

struct KernelSource<double>::Impl {
  const Game* game;
  int horizon;
  std::map<std::uint32_t, std::vector<double>> log_pi;
  std::vector<double> log_factorial;
  std::vector<HandSet> tie_supports;
  bool direct_ties = false;

  const std::vector<double>& table(HandSet s) const { return log_pi.at(s.bits()); }
};

KernelSource<double>::KernelSource(const Game& game, int horizon) : impl_(std::make_unique<Impl>()) {
  impl_->game = &game;
  impl_->horizon = horizon;
  auto ensure = [&](HandSet s) {
    auto [it, inserted] = impl_->log_pi.try_emplace(s.bits());
    if (!inserted) return;
    it->second.resize(static_cast<std::size_t>(horizon) + 1);
    for (int j = 0; j <= horizon; ++j) it->second[static_cast<std::size_t>(j)] = float_log_support_prob(game, s, j);
  };
  for (const WodSet& w : game.wod_sets()) {
    ensure(w.support);
    ensure(w.winners);
    ensure(w.losers());
  }
  impl_->log_factorial.resize(static_cast<std::size_t>(horizon) + 1);
  for (int j = 0; j <= horizon; ++j) impl_->log_factorial[static_cast<std::size_t>(j)] = std::lgamma(j + 1.0);
  // Summing every tie support directly costs 3^m per row.
  impl_->direct_ties = game.hands() <= 10;
  if (impl_->direct_ties) {
    const std::uint32_t limit = std::uint32_t{1} << game.hands();
    for (std::uint32_t bits = 1; bits < limit; ++bits) {
      if (game.outcome(HandSet(bits)) == nullptr) impl_->tie_supports.emplace_back(bits);
    }
  }
}

KernelSource<double>::~KernelSource() = default;

Kernel<double> KernelSource<double>::row(int n) const {
  check_row(n, impl_->horizon);
  const auto& lf = impl_->log_factorial;
  const auto un = static_cast<std::size_t>(n);
  std::vector<double> log_w(un, kNegInf);
  double log_no_tie = kNegInf;
  for (const WodSet& w : impl_->game->wod_sets()) {
    const auto& pw = impl_->table(w.winners);
    const auto& pd = impl_->table(w.losers());
    const int lo = w.winners.size();
    const int hi = n - w.losers().size();
    for (int j = lo; j <= hi; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      const auto rest = static_cast<std::size_t>(n - j);
      log_w[uj] = log_add(log_w[uj], lf[un] - lf[uj] - lf[rest] + pw[uj] + pd[rest]);
    }
    log_no_tie = log_add(log_no_tie, impl_->table(w.support)[un]);
  }
  Kernel<double> k;
  k.n = n;
  k.log_no_tie = log_no_tie;
  k.no_tie = std::exp(log_no_tie);
  k.win_weight.assign(un, 0.0);
  k.jump.assign(un, 0.0);
  for (std::size_t j = 1; j < un; ++j) {
    k.win_weight[j] = std::exp(log_w[j]);
    k.jump[j] = std::exp(log_w[j] - log_no_tie);
  }
  if (impl_->direct_ties) {
    double log_tie = kNegInf;
    for (HandSet s : impl_->tie_supports) log_tie = log_add(log_tie, float_log_support_prob(*impl_->game, s, n));
    k.tie_prob = std::exp(log_tie);
  } else {
    k.tie_prob = -std::expm1(log_no_tie);
  }
  return k;
}

Kernel<Rational> kernel(const Game& game, int n) { return KernelSource<Rational>(game, n).row(n); }

Kernel<double> kernel_float(const Game& game, int n) { return KernelSource<double>(game, n).row(n); }

}  // namespace janken
