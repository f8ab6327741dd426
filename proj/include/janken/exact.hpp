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

#ifndef JANKEN_EXACT_HPP_
#define JANKEN_EXACT_HPP_

#include <limits>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "janken/game.hpp"
#include "janken/hand_set.hpp"
#include "janken/rational.hpp"

namespace janken {

enum class NumericMode { Rational, Float };
std::string_view to_string(NumericMode mode);
NumericMode parse_numeric_mode(std::string_view text);

// Rational mode is exact but slow; it is the default up to this horizon.
inline constexpr int kDefaultRationalHorizon = 64;

class NumericError : public std::runtime_error {
 public:
  enum class Kind { Overflow, NegativeVariance, BudgetExceeded, WindowExceedsHorizon, InvalidArgument };
  NumericError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Probability that n independent throws use exactly the hands of `support`,
// by inclusion-exclusion. Throws std::invalid_argument for an empty support.
Rational support_prob(const Game& game, HandSet support, int n);

// Natural log of support_prob evaluated without under/overflow; -inf when the
// probability is zero (n < |support|).
double log_support_prob(const Game& game, HandSet support, int n);

// Probability that a round with n players is conclusive.
Rational no_tie_prob(const Game& game, int n);

// One-round transition law for n players.
template <typename Scalar>
struct Kernel {
  int n = 0;
  // win_weight[j], 1 <= j < n: P(conclusive round leaving j players).
  std::vector<Scalar> win_weight;
  // jump[j] = win_weight[j] / no_tie: the survivor law given no tie.
  std::vector<Scalar> jump;
  Scalar no_tie{};
  Scalar tie_prob{};
  // log(no_tie), meaningful even where no_tie underflows in float mode.
  double log_no_tie = 0.0;
};

// Builds kernel rows for n <= horizon, holding whatever per-support powers
// the rows share. Rows are independent of each other.
template <typename Scalar>
class KernelSource;

template <>
class KernelSource<Rational> {
 public:
  KernelSource(const Game& game, int horizon);
  ~KernelSource();
  Kernel<Rational> row(int n) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Float rows are evaluated in the log domain: binomials and support
// probabilities are combined as exp(log C + log pi_W + log pi_D).
template <>
class KernelSource<double> {
 public:
  KernelSource(const Game& game, int horizon);
  ~KernelSource();
  Kernel<double> row(int n) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

Kernel<Rational> kernel(const Game& game, int n);
Kernel<double> kernel_float(const Game& game, int n);

// E(T^k) for T geometric on {1,2,...} with success probability q, via
// factorial moments r! (1-q)^(r-1) / q^r and Stirling numbers of the second kind.
Rational geometric_raw_moment(const Rational& q, int k);
double geometric_raw_moment(double q, int k);

// levels == kAutoLevels picks the level count from the game kind.
inline constexpr int kAutoLevels = -1;

struct TableRequest {
  int horizon = 1;
  int max_order = 2;
  int levels = 0;
  bool rounds = true;
  bool hands = true;
  bool tie_free = true;
  // Upper bound on horizon^2 * max(levels, max_order); exceeded => BudgetExceeded.
  double budget = std::numeric_limits<double>::infinity();
};

// Exact sequences indexed by player count n (index 0 unused).
template <typename Scalar>
struct BasicTables {
  int horizon = 0;
  int max_order = 0;
  int levels = 0;
  std::vector<Scalar> mu;
  std::vector<Scalar> var;
  // moments[n][k] = E(X_n^k), 0 <= k <= max_order.
  std::vector<std::vector<Scalar>> moments;
  // cdf[l][n] = P(X_n <= l), 0 <= l <= levels.
  std::vector<std::vector<Scalar>> cdf;
  std::vector<Scalar> y_mean;
  std::vector<Scalar> y_var;
  std::vector<Scalar> z_mean;
};

using RationalTables = BasicTables<Rational>;
using FloatTables = BasicTables<double>;

template <typename Scalar>
BasicTables<Scalar> compute_tables(const Game& game, const TableRequest& request);

extern template RationalTables compute_tables<Rational>(const Game&, const TableRequest&);
extern template FloatTables compute_tables<double>(const Game&, const TableRequest&);

FloatTables to_float(const RationalTables& tables);

// Log-games: ceil(log_{1/alpha} horizon) + 40. Exp-games: smallest L whose
// Chernoff bound on P(X_horizon > L) is below 1e-9 (see level_tail_bound).
int auto_levels(const Game& game, int horizon);

// Upper bound on 1 - F_L(n) for every n <= horizon: X_n is dominated by a sum
// of n-1 geometric stages with the smallest no-tie probability seen, so
// P(X_n > L) <= P(Binomial(L, q_min) <= n-2), bounded by Chernoff.
double level_tail_bound(const Game& game, int horizon, int levels);

// Single-quantity drivers.
template <typename Scalar>
std::vector<Scalar> mean_rounds(const Game& game, int horizon);
template <typename Scalar>
std::vector<Scalar> variance_rounds(const Game& game, int horizon);
template <typename Scalar>
std::vector<std::vector<Scalar>> moments(const Game& game, int horizon, int max_order);
template <typename Scalar>
std::vector<std::vector<Scalar>> round_distribution(const Game& game, int horizon, int levels);
template <typename Scalar>
std::vector<Scalar> total_hands_mean(const Game& game, int horizon);
template <typename Scalar>
std::vector<Scalar> total_hands_variance(const Game& game, int horizon);
template <typename Scalar>
std::vector<Scalar> tie_free_mean(const Game& game, int horizon);

struct PoissonizedValue {
  double value = 0.0;
  // Poisson mass outside the summation window (Bernstein tail bounds).
  double tail_mass = 0.0;
  // tail_mass * max |a_n|; valid when |a_n| stays below that max beyond the horizon.
  double truncation_bound = 0.0;
  int lo = 0;
  int hi = 0;
};

// e^-x sum a_n x^n / n! over n in [x - 10 sqrt x, x + 10 sqrt x]. seq[n] is a_n;
// seq[0] is included when the window reaches it. Throws
// NumericError(WindowExceedsHorizon) when the window passes the last index.
PoissonizedValue poissonize(std::span<const double> seq, double x);

}  // namespace janken

#endif  // JANKEN_EXACT_HPP_
