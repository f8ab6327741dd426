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

// janken: command-line front end for the exact engine, the simulator and the
// asymptotic comparisons.

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "janken/asymptotics.hpp"
#include "janken/builtins.hpp"
#include "janken/exact.hpp"
#include "janken/io.hpp"
#include "janken/sim.hpp"

namespace {

using janken::Game;
using nlohmann::json;
namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitSpec = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitNonTerminating = 4;

constexpr double kDefaultBudget = 1e11;
constexpr std::string_view kSemicircle = "builtin:semicircle";

struct Options {
  std::string command_line;
  std::string spec;
  std::string format = "csv";
  std::string out;
  // exact
  int horizon = 8;
  std::string levels = "auto";
  int max_order = 2;
  std::string mode;
  // simulate
  int n = 0;
  std::string trials = "1000";
  std::uint64_t seed = 0;
  std::string sim_mode = "per-round";
  int threads = 1;
  int cross_check = -1;
  std::uint64_t round_cap = 1'000'000'000;
  // compare
  std::string range;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double budget_from_env() {
  const char* raw = std::getenv("JANKEN_BUDGET");
  if (!raw || !*raw) return kDefaultBudget;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(v > 0.0)) throw UsageError("JANKEN_BUDGET must be a positive number");
  return v;
}

std::int64_t parse_count(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("'" + text + "' is not a count");
  }
  if (used != text.size() || !(v >= 1.0) || v != std::floor(v) || v > 9e15) {
    throw UsageError("'" + text + "' is not a positive integer count");
  }
  return static_cast<std::int64_t>(v);
}

// "25", "2^10", "1024..4096" or "2^10..2^12".
std::pair<int, int> parse_range(const std::string& text) {
  auto one = [&](const std::string& t) {
    const auto caret = t.find('^');
    if (caret == std::string::npos) return static_cast<int>(parse_count(t));
    const double v = std::pow(static_cast<double>(parse_count(t.substr(0, caret))),
                              static_cast<double>(parse_count(t.substr(caret + 1))));
    if (v > 1e9) throw UsageError("'" + t + "' is too large");
    return static_cast<int>(v);
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = one(text);
    return {n, n};
  }
  const int lo = one(text.substr(0, dots));
  const int hi = one(text.substr(dots + 2));
  if (lo > hi) throw UsageError("empty range '" + text + "'");
  return {lo, hi};
}

janken::RunManifest base_manifest(const Options& o, const janken::GameSpec* spec) {
  janken::RunManifest m;
  m.command = o.command_line;
  m.spec_source = o.spec;
  if (spec) m.spec_digest = janken::spec_digest(*spec);
  return m;
}

void write_manifest(const fs::path& dir, const janken::RunManifest& m) {
  janken::write_text_file(dir / janken::kManifestFile, m.to_json().dump(2) + "\n");
}

template <typename Fn>
std::string render(Fn fn) {
  std::ostringstream s;
  fn(s);
  return s.str();
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

// ---------------------------------------------------------------- classify

int cmd_classify(const Options& o) {
  const Game game(janken::load_game_spec(o.spec));
  const janken::Classification c = janken::classify(game);
  if (o.format == "json") {
    std::cout << janken::classification_to_json(c).dump(2) << '\n';
  } else {
    std::cout << janken::classification_line(c) << '\n';
  }
  return kExitOk;
}

// ------------------------------------------------------------------- exact

template <typename Scalar>
void emit_tables(const Options& o, const janken::BasicTables<Scalar>& t, janken::RunManifest manifest) {
  manifest.levels = t.levels;
  if (o.out.empty()) {
    if (o.format == "json") {
      json doc = janken::tables_to_json(t);
      doc["manifest"] = manifest.to_json();
      std::cout << doc.dump(2) << '\n';
    } else {
      janken::write_tables_csv(std::cout, t);
    }
    return;
  }
  const fs::path dir(o.out);
  if (o.format == "json") {
    json doc = janken::tables_to_json(t);
    doc["manifest"] = manifest.to_json();
    janken::write_text_file(dir / "tables.json", doc.dump(2) + "\n");
  } else {
    janken::write_text_file(dir / "tables.csv", render([&](std::ostream& s) { janken::write_tables_csv(s, t); }));
    janken::write_text_file(dir / "cdf.csv", render([&](std::ostream& s) { janken::write_cdf_csv(s, t); }));
    janken::write_text_file(dir / "moments.csv", render([&](std::ostream& s) { janken::write_moments_csv(s, t); }));
  }
  write_manifest(dir, manifest);
  std::cerr << "wrote exact tables for n <= " << t.horizon << " to " << dir.string() << '\n';
}

int cmd_exact(const Options& o) {
  const janken::GameSpec spec = janken::load_game_spec(o.spec);
  const Game game(spec);
  if (o.horizon < 1) throw UsageError("--N must be at least 1");
  const janken::NumericMode mode =
      o.mode.empty() ? (o.horizon <= janken::kDefaultRationalHorizon ? janken::NumericMode::Rational
                                                                     : janken::NumericMode::Float)
                     : janken::parse_numeric_mode(o.mode);
  janken::TableRequest req;
  req.horizon = o.horizon;
  req.max_order = o.max_order;
  req.levels = o.levels == "auto" ? janken::kAutoLevels : o.levels == "0" ? 0 : static_cast<int>(parse_count(o.levels));
  req.budget = budget_from_env();

  janken::RunManifest manifest = base_manifest(o, &spec);
  manifest.numeric_mode = mode;
  manifest.horizon = o.horizon;
  manifest.max_order = o.max_order;
  if (mode == janken::NumericMode::Rational) {
    emit_tables(o, janken::compute_tables<janken::Rational>(game, req), manifest);
  } else {
    emit_tables(o, janken::compute_tables<double>(game, req), manifest);
  }
  return kExitOk;
}

// ---------------------------------------------------------------- simulate

json ks_report(const janken::SimSummary& s, const std::optional<janken::Classification>& c) {
  json ks = json::object();
  std::vector<double> v;
  if (c && c->kind == janken::GameKind::Exp && s.x) {
    const double scale = c->nu * std::pow(janken::to_double(c->rho), s.config.n);
    for (const auto& t : s.samples) v.push_back(scale * static_cast<double>(t.x));
    ks["exp1_scaled_x"] = janken::ks_exp1(v);
  }
  if (s.y && s.y->variance > 0.0) {
    v.clear();
    for (const auto& t : s.samples) v.push_back(static_cast<double>(t.y));
    ks["normal_y"] = janken::ks_normal(v);
  }
  return ks;
}

json exact_cross_check(const Game& game, const janken::SimSummary& s, int horizon) {
  janken::TableRequest req;
  req.horizon = horizon;
  req.budget = budget_from_env();
  const auto t = janken::compute_tables<double>(game, req);
  const auto n = static_cast<std::size_t>(s.config.n);
  json doc;
  doc["horizon"] = horizon;
  auto entry = [&](const std::optional<janken::MeasureSummary>& m, double exact) {
    json e = {{"exact_mean", exact}};
    if (m) {
      e["difference"] = m->mean - exact;
      e["z_score"] = m->std_error > 0.0 ? (m->mean - exact) / m->std_error : 0.0;
    }
    return e;
  };
  doc["X"] = entry(s.x, t.mu[n]);
  doc["Y"] = entry(s.y, t.y_mean[n]);
  doc["Z"] = entry(s.z, t.z_mean[n]);
  return doc;
}

int cmd_simulate(const Options& o) {
  if (o.n < 1) throw UsageError("--n must be at least 1");
  janken::SimConfig cfg;
  cfg.n = o.n;
  cfg.trials = parse_count(o.trials);
  cfg.seed = o.seed;
  cfg.mode = janken::parse_sim_mode(o.sim_mode);
  cfg.threads = o.threads;
  cfg.round_cap = o.round_cap;

  janken::SimSummary summary;
  json doc;
  janken::RunManifest manifest;
  if (o.spec == kSemicircle) {
    if (o.n < 2) throw UsageError("the semicircle game needs --n >= 2");
    summary = janken::semicircle_game(cfg.n, cfg.trials, cfg.seed);
    summary.config.mode = cfg.mode;
    doc = janken::summary_to_json(summary);
    doc["ks"] = ks_report(summary, std::nullopt);
    doc["expected_x"] = std::ldexp(1.0, o.n - 1) / o.n - 1.0;
    manifest = base_manifest(o, nullptr);
  } else {
    const janken::GameSpec spec = janken::load_game_spec(o.spec);
    const Game game(spec);
    summary = janken::simulate(game, cfg);
    doc = janken::summary_to_json(summary);
    const janken::Classification c = janken::classify(game);
    doc["ks"] = ks_report(summary, c);
    const int horizon = o.cross_check >= 0 ? o.cross_check : (o.n <= 512 ? o.n : 0);
    if (horizon >= o.n) doc["exact"] = exact_cross_check(game, summary, horizon);
    manifest = base_manifest(o, &spec);
  }
  manifest.n = cfg.n;
  manifest.trials = cfg.trials;
  manifest.seed = cfg.seed;
  manifest.sim_mode = cfg.mode;
  doc["manifest"] = manifest.to_json();
  std::cout << doc.dump(2) << '\n';
  if (!o.out.empty()) {
    const fs::path dir(o.out);
    janken::write_text_file(dir / "samples.csv", render([&](std::ostream& s) { janken::write_samples_csv(s, summary); }));
    janken::write_text_file(dir / "summary.json", doc.dump(2) + "\n");
    write_manifest(dir, manifest);
  }
  return kExitOk;
}

// ----------------------------------------------------------------- compare

// Leading term for the log-game profile; the unbiased coin has the known
// constant 1/2 on top of log2 n.
std::function<double(int)> log_leading(const Game& game, double alpha, std::string& label) {
  const bool unbiased_coin = game.hands() == 2 && janken::isomorphic(game.spec(), janken::ctls(janken::Rational(1, 2)));
  const double base = std::log(1.0 / alpha);
  if (unbiased_coin) {
    label = "log2 n + 1/2";
    return [](int n) { return std::log2(n) + 0.5; };
  }
  label = "log_{1/alpha} n";
  return [base](int n) { return std::log(n) / base; };
}

int cmd_compare(const Options& o) {
  const janken::GameSpec spec = janken::load_game_spec(o.spec);
  const Game game(spec);
  const janken::Classification c = janken::classify(game);
  auto [lo, hi] = parse_range(o.range);
  if (lo < 2) throw UsageError("--n must be at least 2");
  const bool log_game = c.kind == janken::GameKind::Log;
  if (log_game && lo == hi) lo = std::max(2, static_cast<int>(std::ceil(hi * janken::to_double(*c.alpha))));

  const bool clique = log_game && janken::isomorphic(spec, janken::acyclic_clique(game.hands()));
  constexpr int kEllLo = -2, kEllHi = 20;
  janken::TableRequest req;
  req.horizon = hi;
  req.levels = clique ? janken::floor_log(hi, game.hands()) + kEllHi : 0;
  req.budget = budget_from_env();
  const janken::NumericMode mode = o.mode.empty() ? janken::NumericMode::Float : janken::parse_numeric_mode(o.mode);
  const janken::FloatTables t = mode == janken::NumericMode::Rational
                                    ? janken::to_float(janken::compute_tables<janken::Rational>(game, req))
                                    : janken::compute_tables<double>(game, req);

  json report;
  report["schema_version"] = janken::kSchemaVersion;
  report["classification"] = janken::classification_to_json(c);
  report["n_lo"] = lo;
  report["n_hi"] = hi;
  std::cout << janken::classification_line(c) << '\n';

  // Exact versus leading-order prediction at the top of the range.
  json rows = json::array();
  for (janken::Quantity q : {janken::Quantity::XMean, janken::Quantity::XVar, janken::Quantity::YMean,
                             janken::Quantity::YVar, janken::Quantity::ZMean}) {
    const auto n = static_cast<std::size_t>(hi);
    const double exact = q == janken::Quantity::XMean  ? t.mu[n]
                         : q == janken::Quantity::XVar ? t.var[n]
                         : q == janken::Quantity::YMean ? t.y_mean[n]
                         : q == janken::Quantity::YVar  ? t.y_var[n]
                                                        : t.z_mean[n];
    try {
      const janken::Prediction p = janken::predict(c, q, hi);
      json row = janken::prediction_to_json(p, hi);
      row["exact"] = exact;
      rows.push_back(row);
      std::cout << janken::to_string(q) << " n=" << hi << " exact=" << exact << " leading=" << p.leading << '\n';
    } catch (const janken::WrongKind& e) {
      rows.push_back({{"quantity", std::string(janken::to_string(q))}, {"n", hi}, {"exact", exact}, {"skipped", e.what()}});
      std::cout << janken::to_string(q) << " n=" << hi << " exact=" << exact << " skipped: " << e.what() << '\n';
    }
  }
  report["predictions"] = rows;

  std::optional<janken::FluctuationProfile> profile;
  if (log_game) {
    std::string label;
    const double alpha = janken::to_double(*c.alpha);
    profile = janken::fluctuation_profile(t.mu, alpha, log_leading(game, alpha, label), lo, hi);
    report["profile"] = {{"leading", label},
                         {"amplitude", profile->amplitude},
                         {"offset", profile->offset},
                         {"centered_amplitude", profile->centered_amplitude}};
    std::cout << "residual amplitude (mu_n - (" << label << "), n in [" << lo << ", " << hi
              << "]) = " << profile->amplitude << '\n';
    std::cout << "centered residual amplitude = " << profile->centered_amplitude << " (offset " << profile->offset
              << ")\n";
    if (clique) {
      const int base = janken::floor_log(hi, game.hands());
      double worst = 0.0;
      for (int ell = kEllLo; ell <= kEllHi; ++ell) {
        const double exact = t.cdf[static_cast<std::size_t>(base + ell)][static_cast<std::size_t>(hi)];
        worst = std::max(worst, std::abs(exact - janken::limit_cdf_acyclic_clique(game.hands(), hi, ell)));
      }
      report["limit_cdf_max_deviation"] = worst;
      std::cout << "limit-CDF max deviation (n=" << hi << ", ell in [" << kEllLo << ", " << kEllHi
                << "]) = " << worst << '\n';
    }
  } else {
    json scaled = json::array();
    for (int n : {lo, hi}) {
      const auto i = static_cast<std::size_t>(n);
      const double lead = janken::predict(c, janken::Quantity::XMean, n).leading;
      const double ratio = t.mu[i] / lead;
      const double second = t.moments[i][2] / (2.0 * t.mu[i] * t.mu[i]);
      scaled.push_back({{"n", n}, {"scaled_mean", ratio}, {"second_moment_ratio", second}});
      std::cout << "nu*rho^n*mu_n = " << fixed(ratio, 4) << " (n=" << n << ")\n";
      std::cout << "mu_n2/(2 mu_n^2) = " << fixed(second, 4) << " (n=" << n << ")\n";
      if (n == lo && lo == hi) break;
    }
    report["scaled"] = scaled;
  }
  if (!o.out.empty()) {
    const fs::path dir(o.out);
    janken::RunManifest manifest = base_manifest(o, &spec);
    manifest.numeric_mode = mode;
    manifest.horizon = hi;
    manifest.levels = req.levels;
    report["manifest"] = manifest.to_json();
    janken::write_text_file(dir / "compare.json", report.dump(2) + "\n");
    if (profile) {
      janken::write_text_file(dir / "profile.csv", render([&](std::ostream& s) { janken::write_profile_csv(s, *profile); }));
    }
    write_manifest(dir, manifest);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  for (int i = 0; i < argc; ++i) o.command_line += (i ? " " : "") + std::string(argv[i]);

  CLI::App app{"Exact analysis and simulation of generalized Janken leader-selection games"};
  app.require_subcommand(1);
  auto spec_option = [&](CLI::App* sub) {
    sub->add_option("--spec", o.spec, "Game spec: JSON file or builtin:<name>")->required();
  };
  const std::vector<std::string> formats{"csv", "json"};

  CLI::App* classify = app.add_subcommand("classify", "Print rho, nu, kind, alpha and h_nu");
  spec_option(classify);
  classify->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));

  CLI::App* exact = app.add_subcommand("exact", "Exact tables of X_n, Y_n, Z_n for n <= N");
  spec_option(exact);
  exact->add_option("--N", o.horizon, "Largest player count")->required();
  exact->add_option("--L", o.levels, "Distribution levels, or 'auto'");
  exact->add_option("--K", o.max_order, "Highest moment order of X_n")->check(CLI::Range(1, 64));
  exact->add_option("--mode", o.mode, "rational or float (default: rational up to N=64)")
      ->check(CLI::IsMember({"rational", "float"}));
  exact->add_option("--out", o.out, "Output directory");
  exact->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));

  CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo simulation");
  simulate->add_option("--spec", o.spec, "Game spec: JSON file, builtin:<name> or builtin:semicircle")->required();
  simulate->add_option("--n", o.n, "Number of players")->required();
  simulate->add_option("--trials", o.trials, "Number of trials (1e5 style accepted)");
  simulate->add_option("--seed", o.seed, "64-bit seed");
  simulate->add_option("--sim-mode", o.sim_mode, "per-round or fast-forward")
      ->check(CLI::IsMember({"per-round", "fast-forward"}));
  simulate->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
  simulate->add_option("--round-cap", o.round_cap, "Abandon a trial after this many rounds")->check(CLI::PositiveNumber);
  simulate->add_option("--N", o.cross_check, "Exact cross-check horizon (default n when n <= 512; 0 disables)");
  simulate->add_option("--out", o.out, "Output directory for samples.csv and summary.json");
  simulate->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));

  CLI::App* compare = app.add_subcommand("compare", "Exact values against leading-order asymptotics");
  spec_option(compare);
  compare->add_option("--n", o.range, "n, or a range lo..hi (2^k allowed)")->required();
  compare->add_option("--mode", o.mode, "rational or float (default float)")->check(CLI::IsMember({"rational", "float"}));
  compare->add_option("--out", o.out, "Output directory for compare.json and profile.csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (o.spec == kSemicircle && !simulate->parsed()) {
      throw janken::InvalidSpec(
          {janken::SpecError::InvalidParameter, "semicircle has a continuum of hands and is available to simulate only"});
    }
    if (classify->parsed()) return cmd_classify(o);
    if (exact->parsed()) return cmd_exact(o);
    if (simulate->parsed()) return cmd_simulate(o);
    return cmd_compare(o);
  } catch (const janken::InvalidSpec& e) {
    std::cerr << "spec error: " << e.what() << '\n';
    return kExitSpec;
  } catch (const janken::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    if (e.kind() == janken::NumericError::Kind::Overflow) std::cerr << "hint: rerun with --mode rational\n";
    return kExitNumeric;
  } catch (const janken::NonTerminating& e) {
    std::cerr << "nontermination: " << e.what() << '\n';
    return kExitNonTerminating;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
