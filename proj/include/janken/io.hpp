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

#ifndef JANKEN_IO_HPP_
#define JANKEN_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "janken/asymptotics.hpp"
#include "janken/exact.hpp"
#include "janken/game.hpp"
#include "janken/sim.hpp"

namespace janken {

inline constexpr int kSchemaVersion = 1;
inline constexpr std::string_view kToolVersion = "1.0.0";

// Game-spec JSON:
//   {"m": 3, "probs": ["1/3", ...], "family": {"kind": "..."},
//    "edges": [[i, j], ...], "wod_sets": [{"support": [...], "winners": [...]}]}
// kind is ctls, acyclic_clique, regular_tournament, circulant, graph or
// explicit. Missing probs mean uniform. For ctls, probs[0] is the head
// probability. Tournaments and circulant games take k = (m - 1) / 2.
// Throws InvalidSpec (InvalidParameter) on malformed documents.
GameSpec game_spec_from_json(const nlohmann::json& doc);
nlohmann::json game_spec_to_json(const GameSpec& spec);

// "builtin:<name>" or a path to a JSON file.
GameSpec load_game_spec(std::string_view source);

// FNV-1a over the canonical explicit JSON form of a game spec.
std::uint64_t spec_digest(const GameSpec& spec);
std::string hex_digest(std::uint64_t digest);

struct RunManifest {
  std::string command;
  std::string spec_source;
  std::uint64_t spec_digest = 0;
  std::optional<NumericMode> numeric_mode;
  std::optional<int> n, horizon, levels, max_order;
  std::optional<std::int64_t> trials;
  std::optional<std::uint64_t> seed;
  std::optional<SimMode> sim_mode;
  std::string tool_version{kToolVersion};

  nlohmann::json to_json() const;
};

inline constexpr std::string_view kManifestFile = "manifest.json";

// First line of every CSV file.
void write_csv_preamble(std::ostream& out);

template <typename Scalar>
void write_tables_csv(std::ostream& out, const BasicTables<Scalar>& t);
template <typename Scalar>
void write_cdf_csv(std::ostream& out, const BasicTables<Scalar>& t);
template <typename Scalar>
void write_moments_csv(std::ostream& out, const BasicTables<Scalar>& t);
// Rational tables are written as exact "p/q" strings, float tables as numbers.
template <typename Scalar>
nlohmann::json tables_to_json(const BasicTables<Scalar>& t);

void write_samples_csv(std::ostream& out, const SimSummary& s);
nlohmann::json summary_to_json(const SimSummary& s);

void write_profile_csv(std::ostream& out, const FluctuationProfile& p);
nlohmann::json prediction_to_json(const Prediction& p, int n);

nlohmann::json classification_to_json(const Classification& c);
// One line, e.g. "rho=2/3 nu=3 kind=exp h_nu=1.442695 alphas=1/3,1/3,1/3".
std::string classification_line(const Classification& c);

// Creates missing parent directories.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace janken

#endif  // JANKEN_IO_HPP_
