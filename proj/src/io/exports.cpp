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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "janken/io.hpp"

namespace janken {
namespace {

using nlohmann::json;

std::string number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string number(const Rational& v) { return number(to_double(v)); }

json scalar(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }
json scalar(const Rational& v) { return to_string(v); }

template <typename Scalar>
std::string cell(const std::vector<Scalar>& column, int n) {
  return static_cast<std::size_t>(n) < column.size() ? number(column[static_cast<std::size_t>(n)]) : std::string();
}

template <typename Scalar>
json column_json(const std::vector<Scalar>& column) {
  json out = json::array();
  for (const auto& v : column) out.push_back(scalar(v));
  return out;
}

json measure_json(const std::optional<MeasureSummary>& m) {
  if (!m) return nullptr;
  return {{"count", m->count}, {"mean", m->mean}, {"variance", m->variance}, {"std_error", m->std_error}};
}

}  // namespace

json RunManifest::to_json() const {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["tool_version"] = tool_version;
  doc["command"] = command;
  doc["spec_source"] = spec_source;
  doc["spec_digest"] = hex_digest(spec_digest);
  if (numeric_mode) doc["numeric_mode"] = std::string(janken::to_string(*numeric_mode));
  if (n) doc["n"] = *n;
  if (horizon) doc["horizon"] = *horizon;
  if (levels) doc["levels"] = *levels;
  if (max_order) doc["max_order"] = *max_order;
  if (trials) doc["trials"] = *trials;
  if (seed) doc["seed"] = *seed;
  if (sim_mode) doc["sim_mode"] = std::string(janken::to_string(*sim_mode));
  return doc;
}

void write_csv_preamble(std::ostream& out) {
  out << "# schema_version=" << kSchemaVersion << " manifest=" << kManifestFile << '\n';
}

template <typename Scalar>
void write_tables_csv(std::ostream& out, const BasicTables<Scalar>& t) {
  write_csv_preamble(out);
  out << "n,mu,var,y_mean,y_var,z_mean\n";
  for (int n = 1; n <= t.horizon; ++n) {
    out << n << ',' << cell(t.mu, n) << ',' << cell(t.var, n) << ',' << cell(t.y_mean, n) << ',' << cell(t.y_var, n)
        << ',' << cell(t.z_mean, n) << '\n';
  }
}

template <typename Scalar>
void write_cdf_csv(std::ostream& out, const BasicTables<Scalar>& t) {
  write_csv_preamble(out);
  out << "n,ell,cdf\n";
  for (int n = 1; n <= t.horizon; ++n) {
    for (std::size_t l = 0; l < t.cdf.size(); ++l) out << n << ',' << l << ',' << cell(t.cdf[l], n) << '\n';
  }
}

template <typename Scalar>
void write_moments_csv(std::ostream& out, const BasicTables<Scalar>& t) {
  write_csv_preamble(out);
  out << "n,k,moment\n";
  for (std::size_t n = 1; n < t.moments.size(); ++n) {
    for (std::size_t k = 0; k < t.moments[n].size(); ++k) out << n << ',' << k << ',' << number(t.moments[n][k]) << '\n';
  }
}

template <typename Scalar>
json tables_to_json(const BasicTables<Scalar>& t) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["numeric_mode"] = std::is_same_v<Scalar, Rational> ? "rational" : "float";
  doc["horizon"] = t.horizon;
  doc["levels"] = t.levels;
  doc["max_order"] = t.max_order;
  // Index 0 of every column is n = 0 and unused.
  doc["mu"] = column_json(t.mu);
  doc["var"] = column_json(t.var);
  doc["y_mean"] = column_json(t.y_mean);
  doc["y_var"] = column_json(t.y_var);
  doc["z_mean"] = column_json(t.z_mean);
  json moments = json::array();
  for (const auto& row : t.moments) moments.push_back(column_json(row));
  doc["moments"] = moments;
  json cdf = json::array();
  for (const auto& row : t.cdf) cdf.push_back(column_json(row));
  doc["cdf"] = cdf;
  return doc;
}

template void write_tables_csv(std::ostream&, const RationalTables&);
template void write_tables_csv(std::ostream&, const FloatTables&);
template void write_cdf_csv(std::ostream&, const RationalTables&);
template void write_cdf_csv(std::ostream&, const FloatTables&);
template void write_moments_csv(std::ostream&, const RationalTables&);
template void write_moments_csv(std::ostream&, const FloatTables&);
template json tables_to_json(const RationalTables&);
template json tables_to_json(const FloatTables&);

void write_samples_csv(std::ostream& out, const SimSummary& s) {
  write_csv_preamble(out);
  out << "trial_index,X,Y,Z\n";
  for (const auto& t : s.samples) out << t.trial << ',' << t.x << ',' << t.y << ',' << t.z << '\n';
}

json summary_to_json(const SimSummary& s) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["game"] = s.game;
  doc["n"] = s.config.n;
  doc["trials"] = s.config.trials;
  doc["seed"] = s.config.seed;
  doc["mode"] = std::string(to_string(s.config.mode));
  doc["X"] = measure_json(s.x);
  doc["Y"] = measure_json(s.y);
  doc["Z"] = measure_json(s.z);
  doc["tie_rounds_total"] = s.tie_rounds_total;
  return doc;
}

void write_profile_csv(std::ostream& out, const FluctuationProfile& p) {
  write_csv_preamble(out);
  out << "n,phase,residual\n";
  for (const auto& pt : p.points) out << pt.n << ',' << number(pt.phase) << ',' << number(pt.residual) << '\n';
}

json prediction_to_json(const Prediction& p, int n) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["quantity"] = std::string(to_string(p.quantity));
  doc["n"] = n;
  doc["leading"] = scalar(p.leading);
  doc["correction"] = p.correction ? scalar(*p.correction) : json(nullptr);
  doc["validity"] = p.validity;
  return doc;
}

json classification_to_json(const Classification& c) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["rho"] = to_string(c.rho);
  doc["nu"] = c.nu;
  doc["kind"] = std::string(to_string(c.kind));
  doc["alpha"] = c.alpha ? json(to_string(*c.alpha)) : json(nullptr);
  json alphas = json::array();
  for (const auto& a : c.alphas) alphas.push_back(to_string(a));
  doc["alphas"] = alphas;
  json sets = json::array();
  for (const auto& w : c.max_wod_sets) sets.push_back({{"support", w.support.hands()}, {"winners", w.winners.hands()}});
  doc["max_wod_sets"] = sets;
  doc["h_nu"] = c.h_nu;
  return doc;
}

std::string classification_line(const Classification& c) {
  std::ostringstream out;
  out << "rho=" << to_string(c.rho) << " nu=" << c.nu << " kind=" << to_string(c.kind);
  if (c.alpha) out << " alpha=" << to_string(*c.alpha);
  char h[32];
  std::snprintf(h, sizeof h, "%.6f", c.h_nu);
  out << " h_nu=" << h << " alphas=";
  for (std::size_t i = 0; i < c.alphas.size(); ++i) out << (i ? "," : "") << to_string(c.alphas[i]);
  return out.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace janken
