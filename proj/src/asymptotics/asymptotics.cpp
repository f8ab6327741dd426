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

#include "janken/asymptotics.hpp"

#include <algorithm>
#include <cmath>

namespace janken {

std::string_view to_string(Quantity q) {
  switch (q) {
    case Quantity::XMean: return "XMean";
    case Quantity::XVar: return "XVar";
    case Quantity::YMean: return "YMean";
    case Quantity::YVar: return "YVar";
    case Quantity::ZMean: return "ZMean";
    case Quantity::LimitCdf: return "LimitCdf";
  }
  return "?";
}

Prediction predict(const Classification& c, Quantity quantity, int n) {
  if (n < 2) throw std::invalid_argument("predict needs n >= 2");
  Prediction p;
  p.quantity = quantity;
  const double dn = static_cast<double>(n);
  if (quantity == Quantity::ZMean) {
    p.leading = c.h_nu * std::log(dn);
    p.validity = "tie-free rounds grow like h_nu ln n";
    return p;
  }
  if (quantity == Quantity::LimitCdf) {
    throw WrongKind("no general closed-form limit law; use the acyclic-clique formulas");
  }
  if (c.kind == GameKind::Log) {
    const double a = to_double(*c.alpha);
    switch (quantity) {
      case Quantity::XMean:
        p.leading = std::log(dn) / std::log(1.0 / a);
        p.validity = "log-game: E X_n = log_{1/alpha} n + bounded periodic term";
        break;
      case Quantity::XVar:
        p.leading = 0.0;
        p.validity = "log-game: Var X_n is bounded and periodic, no growth term";
        break;
      case Quantity::YMean:
        p.leading = dn / (1.0 - a);
        p.validity = "log-game: E Y_n = n / (1 - alpha) + lower order";
        break;
      case Quantity::YVar:
        p.leading = a * dn / ((1.0 - a) * (1.0 - a));
        p.validity = "log-game: Var Y_n = alpha n / (1 - alpha)^2 + lower order";
        break;
      default: break;
    }
    return p;
  }
  // log(1 / (nu rho^n)) keeps large n finite until the final exp.
  const double log_scale = -std::log(static_cast<double>(c.nu)) - dn * std::log(to_double(c.rho));
  switch (quantity) {
    case Quantity::XMean:
      p.leading = std::exp(log_scale);
      p.validity = "exp-game: nu rho^n X_n converges to Exp(1) with all moments";
      break;
    case Quantity::YMean:
      p.leading = dn * std::exp(log_scale);
      p.validity = "exp-game: E Y_n ~ n / (nu rho^n)";
      break;
    default:
      throw WrongKind(std::string("no leading term for ") + std::string(to_string(quantity)) + " in an exp-game");
  }
  if (!std::isfinite(p.leading)) throw std::overflow_error("prediction overflows a double");
  return p;
}

int floor_log(long long n, int m) {
  if (n < 1 || m < 2) throw std::invalid_argument("floor_log needs n >= 1 and m >= 2");
  int k = 0;
  for (long long p = 1; p <= n / m; p *= m) ++k;
  return k;
}

namespace {

double t_over_expm1(double t) { return t == 0.0 ? 1.0 : t / std::expm1(t); }

double fractional_log(long long n, int m) {
  const int k = floor_log(n, m);
  const double frac = std::log(static_cast<double>(n) / std::pow(static_cast<double>(m), k)) / std::log(m);
  return std::clamp(frac, 0.0, std::nextafter(1.0, 0.0));
}

}  // namespace

double limit_cdf_acyclic_clique(int m, long long n, int ell) {
  if (m < 2) throw std::invalid_argument("limit cdf needs m >= 2");
  if (n < 2) throw std::invalid_argument("limit cdf needs n >= 2");
  return t_over_expm1(std::pow(static_cast<double>(m), fractional_log(n, m) - ell));
}

double limit_cdf_unbiased_ctls(long long n, int ell) { return limit_cdf_acyclic_clique(2, n, ell); }

FluctuationProfile fluctuation_profile(std::span<const double> seq, double alpha,
                                       const std::function<double(int)>& leading, int n_lo, int n_hi) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("fluctuation profile needs 0 < alpha < 1");
  if (n_lo < 1 || n_hi < n_lo || static_cast<std::size_t>(n_hi) >= seq.size()) {
    throw std::invalid_argument("fluctuation profile range outside the sequence");
  }
  FluctuationProfile out;
  out.n_lo = n_lo;
  out.n_hi = n_hi;
  const double log_base = std::log(1.0 / alpha);
  double total = 0.0;
  for (int n = n_lo; n <= n_hi; ++n) {
    const double x = std::log(static_cast<double>(n)) / log_base;
    double phase = x - std::floor(x);
    if (phase >= 1.0) phase = 0.0;
    const double r = seq[static_cast<std::size_t>(n)] - leading(n);
    out.points.push_back({n, phase, r});
    out.amplitude = std::max(out.amplitude, std::abs(r));
    total += r;
  }
  out.offset = total / static_cast<double>(out.points.size());
  for (const auto& p : out.points) out.centered_amplitude = std::max(out.centered_amplitude, std::abs(p.residual - out.offset));
  return out;
}

std::optional<Rational> common_power_base(const Rational& a, const Rational& b) {
  if (a <= 1 || b <= 1) throw std::invalid_argument("common_power_base needs arguments > 1");
  const std::size_t cap = mpz_sizeinbase(a.get_num_mpz_t(), 2) + mpz_sizeinbase(b.get_num_mpz_t(), 2) + 2;
  Rational x = a, y = b;
  for (std::size_t step = 0; step < cap; ++step) {
    if (x == y) return x;
    if (x < y) std::swap(x, y);
    x /= y;
  }
  return std::nullopt;
}

TieFreeSlope tie_free_slope(const Classification& c) {
  TieFreeSlope out;
  out.h_nu = c.h_nu;
  std::vector<Rational> ratios;
  for (const Rational& a : c.alphas) ratios.push_back(c.rho / a);
  if (ratios.empty()) return out;
  std::optional<Rational> base = ratios.front();
  for (std::size_t i = 1; i < ratios.size() && base; ++i) base = common_power_base(*base, ratios[i]);
  if (!base) return out;
  out.all_rational = true;
  out.base = base;
  for (const Rational& q : ratios) {
    int k = 0;
    Rational rest = q;
    while (rest > 1) {
      rest /= *base;
      ++k;
    }
    out.exponents.push_back(k);
  }
  return out;
}

}  // namespace janken
