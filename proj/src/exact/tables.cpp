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
#include <stdexcept>

#include "janken/exact.hpp"

namespace janken {
namespace {

bool is_finite(const Rational&) { return true; }
bool is_finite(double x) { return std::isfinite(x); }

template <typename Scalar>
Scalar from_integer(const mpz_class& z);
template <>
Rational from_integer<Rational>(const mpz_class& z) {
  return Rational(z);
}
template <>
double from_integer<double>(const mpz_class& z) {
  return z.get_d();
}

// stirling[k][r] = S(k, r), second kind.
std::vector<std::vector<mpz_class>> stirling_table(int max_k) {
  std::vector<std::vector<mpz_class>> s(static_cast<std::size_t>(max_k) + 1);
  for (int k = 0; k <= max_k; ++k) {
    s[static_cast<std::size_t>(k)].assign(static_cast<std::size_t>(k) + 1, mpz_class(0));
  }
  s[0][0] = 1;
  for (int k = 1; k <= max_k; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    for (int r = 1; r <= k; ++r) {
      const auto ur = static_cast<std::size_t>(r);
      mpz_class below = r < k ? s[uk - 1][ur] : mpz_class(0);
      s[uk][ur] = mpz_class(r) * below + s[uk - 1][ur - 1];
    }
  }
  return s;
}

// Raw moments E(T^r), 0 <= r <= max_k, of the geometric law with success q.
template <typename Scalar>
std::vector<Scalar> geometric_moments(const Scalar& q, const std::vector<std::vector<mpz_class>>& stirling) {
  const int max_k = static_cast<int>(stirling.size()) - 1;
  // factorial[r] = r! (1-q)^(r-1) / q^r
  std::vector<Scalar> factorial(static_cast<std::size_t>(max_k) + 1);
  factorial[0] = Scalar(1);
  const Scalar fail = Scalar(1) - q;
  Scalar fail_pow = Scalar(1);
  Scalar inv_q_pow = Scalar(1) / q;
  Scalar r_fact = Scalar(1);
  for (int r = 1; r <= max_k; ++r) {
    r_fact *= Scalar(r);
    if (r > 1) {
      fail_pow *= fail;
      inv_q_pow /= q;
    }
    factorial[static_cast<std::size_t>(r)] = r_fact * fail_pow * inv_q_pow;
  }
  std::vector<Scalar> raw(static_cast<std::size_t>(max_k) + 1, Scalar(0));
  raw[0] = Scalar(1);
  for (int k = 1; k <= max_k; ++k) {
    Scalar total = Scalar(0);
    for (int r = 1; r <= k; ++r) {
      total += from_integer<Scalar>(stirling[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)]) *
               factorial[static_cast<std::size_t>(r)];
    }
    raw[static_cast<std::size_t>(k)] = total;
  }
  return raw;
}

template <typename Scalar>
Scalar geometric_raw_moment_impl(const Scalar& q, int k) {
  if (k < 0) throw std::invalid_argument("geometric_raw_moment needs k >= 0");
  if (!(q > 0) || q > 1) throw std::invalid_argument("geometric_raw_moment needs 0 < q <= 1");
  return geometric_moments<Scalar>(q, stirling_table(k))[static_cast<std::size_t>(k)];
}

[[noreturn]] void overflow(const char* what, int n) {
  throw NumericError(NumericError::Kind::Overflow, std::string(what) + " overflowed double precision at n=" +
                                                       std::to_string(n) + "; use rational mode or a smaller horizon");
}

double min_log_no_tie(const Game& game, int horizon) {
  double worst = 0.0;
  for (int n = 2; n <= horizon; ++n) {
    double acc = -std::numeric_limits<double>::infinity();
    for (const WodSet& w : game.wod_sets()) {
      const double v = log_support_prob(game, w.support, n);
      if (v == -std::numeric_limits<double>::infinity()) continue;
      const double hi = std::max(acc, v);
      acc = hi + std::log1p(std::exp(std::min(acc, v) - hi));
    }
    worst = std::min(worst, acc);
  }
  return worst;
}

double chernoff_lower_tail(double trials, double q, double k) {
  const double mean = trials * q;
  if (mean <= k) return 1.0;
  return std::exp(-(mean - k) * (mean - k) / (2.0 * mean));
}

}  // namespace

std::string_view to_string(NumericMode mode) { return mode == NumericMode::Rational ? "rational" : "float"; }

NumericMode parse_numeric_mode(std::string_view text) {
  if (text == "rational") return NumericMode::Rational;
  if (text == "float") return NumericMode::Float;
  throw std::invalid_argument("numeric mode must be 'rational' or 'float', got '" + std::string(text) + "'");
}

Rational geometric_raw_moment(const Rational& q, int k) { return geometric_raw_moment_impl<Rational>(q, k); }
double geometric_raw_moment(double q, int k) { return geometric_raw_moment_impl<double>(q, k); }

double level_tail_bound(const Game& game, int horizon, int levels) {
  if (horizon <= 1) return 0.0;
  const double q = std::exp(min_log_no_tie(game, horizon));
  return chernoff_lower_tail(static_cast<double>(levels), q, static_cast<double>(horizon - 2));
}

int auto_levels(const Game& game, int horizon) {
  const Classification c = classify(game);
  if (c.kind == GameKind::Log) {
    const double base = 1.0 / to_double(*c.alpha);
    const double depth = horizon > 1 ? std::ceil(std::log(static_cast<double>(horizon)) / std::log(base) - 1e-12) : 0.0;
    return static_cast<int>(depth) + 40;
  }
  if (horizon <= 1) return 1;
  // Smallest L with exp(-(Lq - k)^2 / (2Lq)) <= 1e-9: solve for mean = Lq.
  const double q = std::exp(min_log_no_tie(game, horizon));
  const double c9 = std::log(1e9);
  const double k = static_cast<double>(horizon - 2);
  const double mean = k + c9 + std::sqrt(c9 * c9 + 2.0 * k * c9);
  const double levels = std::ceil(mean / q);
  if (!(levels < static_cast<double>(std::numeric_limits<int>::max()))) {
    throw NumericError(NumericError::Kind::BudgetExceeded,
                       "distribution would need more than 2^31 levels at horizon " + std::to_string(horizon));
  }
  int out = static_cast<int>(levels);
  while (out > 1 && chernoff_lower_tail(out - 1.0, q, k) <= 1e-9) --out;
  while (chernoff_lower_tail(out, q, k) > 1e-9) ++out;
  return out;
}

template <typename Scalar>
BasicTables<Scalar> compute_tables(const Game& game, const TableRequest& request) {
  const int horizon = request.horizon;
  if (horizon < 1) throw NumericError(NumericError::Kind::InvalidArgument, "horizon must be >= 1");
  if (request.max_order < 1) throw NumericError(NumericError::Kind::InvalidArgument, "moment order must be >= 1");
  const int levels = request.levels == kAutoLevels ? auto_levels(game, horizon) : request.levels;
  if (levels < 0) throw NumericError(NumericError::Kind::InvalidArgument, "levels must be >= 0");
  const int order = std::max(request.max_order, 2);
  const double cost = static_cast<double>(horizon) * horizon * std::max({levels, order, 1});
  if (cost > request.budget) {
    throw NumericError(NumericError::Kind::BudgetExceeded, "table cost " + std::to_string(cost) +
                                                               " exceeds budget " + std::to_string(request.budget));
  }

  BasicTables<Scalar> t;
  t.horizon = horizon;
  t.levels = levels;
  const auto size = static_cast<std::size_t>(horizon) + 1;
  const bool rounds = request.rounds;
  if (rounds) {
    t.max_order = order;
    t.mu.assign(size, Scalar(0));
    t.var.assign(size, Scalar(0));
    t.moments.assign(size, std::vector<Scalar>(static_cast<std::size_t>(order) + 1, Scalar(0)));
    t.moments[1][0] = Scalar(1);
  }
  if (levels > 0) {
    t.cdf.assign(static_cast<std::size_t>(levels) + 1, std::vector<Scalar>(size, Scalar(0)));
    for (auto& row : t.cdf) row[1] = Scalar(1);
  }
  std::vector<Scalar> y_second;
  if (request.hands) {
    t.y_mean.assign(size, Scalar(0));
    t.y_var.assign(size, Scalar(0));
    y_second.assign(size, Scalar(0));
  }
  if (request.tie_free) t.z_mean.assign(size, Scalar(0));

  if (horizon < 2) return t;
  const auto stirling = stirling_table(order);
  std::vector<std::vector<mpz_class>> choose(static_cast<std::size_t>(order) + 1);
  for (int a = 0; a <= order; ++a) {
    for (int b = 0; b <= a; ++b) {
      choose[static_cast<std::size_t>(a)].push_back(binomial(static_cast<unsigned long>(a), static_cast<unsigned long>(b)));
    }
  }

  const KernelSource<Scalar> source(game, horizon);
  for (int n = 2; n <= horizon; ++n) {
    const auto un = static_cast<std::size_t>(n);
    const Kernel<Scalar> k = source.row(n);
    const Scalar& q = k.no_tie;
    const Scalar inv_q = Scalar(1) / q;

    if (rounds) {
      Scalar mean = inv_q;
      std::vector<Scalar> mixed(static_cast<std::size_t>(order) + 1, Scalar(0));
      mixed[0] = Scalar(1);
      for (std::size_t j = 1; j < un; ++j) {
        const Scalar& pj = k.jump[j];
        mean += pj * t.mu[j];
        for (int r = 1; r <= order; ++r) mixed[static_cast<std::size_t>(r)] += pj * t.moments[j][static_cast<std::size_t>(r)];
      }
      t.mu[un] = mean;
      const std::vector<Scalar> geo = geometric_moments<Scalar>(q, stirling);
      auto& row = t.moments[un];
      row[0] = Scalar(1);
      for (int m = 1; m <= order; ++m) {
        Scalar total = Scalar(0);
        for (int r = 0; r <= m; ++r) {
          total += from_integer<Scalar>(choose[static_cast<std::size_t>(m)][static_cast<std::size_t>(r)]) *
                   geo[static_cast<std::size_t>(m - r)] * mixed[static_cast<std::size_t>(r)];
        }
        row[static_cast<std::size_t>(m)] = total;
      }
      for (const Scalar& v : row) {
        if (!is_finite(v)) overflow("moments of X_n", n);
      }
      if (!is_finite(mean)) overflow("E(X_n)", n);
      t.var[un] = row[2] - mean * mean;
      if (t.var[un] < 0) {
        if constexpr (std::is_same_v<Scalar, double>) {
          // Rounding noise on an essentially deterministic X_n.
          if (t.var[un] > -1e-9 * mean * mean) {
            t.var[un] = 0.0;
          } else {
            throw NumericError(NumericError::Kind::NegativeVariance,
                               "negative variance at n=" + std::to_string(n) + "; use rational mode");
          }
        }
      }
    }

    if (levels > 0) {
      for (int l = 0; l < levels; ++l) {
        const auto& prev = t.cdf[static_cast<std::size_t>(l)];
        Scalar total = k.tie_prob * prev[un];
        for (std::size_t j = 1; j < un; ++j) total += k.win_weight[j] * prev[j];
        t.cdf[static_cast<std::size_t>(l) + 1][un] = total;
      }
    }

    if (request.hands) {
      const Scalar players = Scalar(n);
      Scalar mean = players * inv_q;
      Scalar second = Scalar(0);
      Scalar cross = Scalar(0);
      for (std::size_t j = 1; j < un; ++j) {
        const Scalar& pj = k.jump[j];
        cross += pj * t.y_mean[j];
        second += pj * y_second[j];
      }
      mean += cross;
      // Y_n = Y_{I_n} + n squared, self term moved to the left and divided by no_tie.
      second += Scalar(2) * players * (cross + k.tie_prob * inv_q * mean) + players * players * inv_q;
      if (!is_finite(mean) || !is_finite(second)) overflow("moments of Y_n", n);
      t.y_mean[un] = mean;
      y_second[un] = second;
      t.y_var[un] = second - mean * mean;
      if (t.y_var[un] < 0) {
        if constexpr (std::is_same_v<Scalar, double>) {
          throw NumericError(NumericError::Kind::NegativeVariance,
                             "negative variance of Y_n at n=" + std::to_string(n) + "; use rational mode");
        }
      }
    }

    if (request.tie_free) {
      Scalar z = Scalar(1);
      for (std::size_t j = 1; j < un; ++j) z += k.jump[j] * t.z_mean[j];
      t.z_mean[un] = z;
    }
  }
  return t;
}

template RationalTables compute_tables<Rational>(const Game&, const TableRequest&);
template FloatTables compute_tables<double>(const Game&, const TableRequest&);

FloatTables to_float(const RationalTables& tables) {
  auto conv = [](const std::vector<Rational>& v) {
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(to_double(x));
    return out;
  };
  FloatTables out;
  out.horizon = tables.horizon;
  out.max_order = tables.max_order;
  out.levels = tables.levels;
  out.mu = conv(tables.mu);
  out.var = conv(tables.var);
  for (const auto& row : tables.moments) out.moments.push_back(conv(row));
  for (const auto& row : tables.cdf) out.cdf.push_back(conv(row));
  out.y_mean = conv(tables.y_mean);
  out.y_var = conv(tables.y_var);
  out.z_mean = conv(tables.z_mean);
  return out;
}

namespace {

TableRequest only(int horizon) {
  TableRequest r;
  r.horizon = horizon;
  r.rounds = false;
  r.hands = false;
  r.tie_free = false;
  return r;
}

}  // namespace

template <typename Scalar>
std::vector<Scalar> mean_rounds(const Game& game, int horizon) {
  auto r = only(horizon);
  r.rounds = true;
  return compute_tables<Scalar>(game, r).mu;
}

template <typename Scalar>
std::vector<Scalar> variance_rounds(const Game& game, int horizon) {
  auto r = only(horizon);
  r.rounds = true;
  return compute_tables<Scalar>(game, r).var;
}

template <typename Scalar>
std::vector<std::vector<Scalar>> moments(const Game& game, int horizon, int max_order) {
  auto r = only(horizon);
  r.rounds = true;
  r.max_order = max_order;
  return compute_tables<Scalar>(game, r).moments;
}

template <typename Scalar>
std::vector<std::vector<Scalar>> round_distribution(const Game& game, int horizon, int levels) {
  auto r = only(horizon);
  r.levels = levels;
  return compute_tables<Scalar>(game, r).cdf;
}

template <typename Scalar>
std::vector<Scalar> total_hands_mean(const Game& game, int horizon) {
  auto r = only(horizon);
  r.hands = true;
  return compute_tables<Scalar>(game, r).y_mean;
}

template <typename Scalar>
std::vector<Scalar> total_hands_variance(const Game& game, int horizon) {
  auto r = only(horizon);
  r.hands = true;
  return compute_tables<Scalar>(game, r).y_var;
}

template <typename Scalar>
std::vector<Scalar> tie_free_mean(const Game& game, int horizon) {
  auto r = only(horizon);
  r.tie_free = true;
  return compute_tables<Scalar>(game, r).z_mean;
}

#define JANKEN_INSTANTIATE(S)                                                               \
  template std::vector<S> mean_rounds<S>(const Game&, int);                                 \
  template std::vector<S> variance_rounds<S>(const Game&, int);                             \
  template std::vector<std::vector<S>> moments<S>(const Game&, int, int);                   \
  template std::vector<std::vector<S>> round_distribution<S>(const Game&, int, int);        \
  template std::vector<S> total_hands_mean<S>(const Game&, int);                            \
  template std::vector<S> total_hands_variance<S>(const Game&, int);                        \
  template std::vector<S> tie_free_mean<S>(const Game&, int);

JANKEN_INSTANTIATE(Rational)
JANKEN_INSTANTIATE(double)
#undef JANKEN_INSTANTIATE

}  // namespace janken
