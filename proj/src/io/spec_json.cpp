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

#include <fstream>
#include <sstream>

#include "janken/builtins.hpp"
#include "janken/io.hpp"

namespace janken {
namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& detail) { throw InvalidSpec({SpecError::InvalidParameter, detail}); }

int hand_index(const json& v) {
  if (!v.is_number_integer()) bad("hand indices must be integers");
  return v.get<int>();
}

HandSet hand_set(const json& v, int m) {
  if (!v.is_array()) bad("hand sets must be arrays");
  HandSet s;
  for (const auto& h : v) {
    const int i = hand_index(h);
    if (i < 0 || i >= m || i >= kMaxHandsRepresentable) {
      throw InvalidSpec({SpecError::HandOutOfRange, "hand " + std::to_string(i) + " outside 0.." + std::to_string(m - 1)});
    }
    s.insert(i);
  }
  return s;
}

std::vector<Rational> probabilities(const json& doc, int m) {
  if (!doc.contains("probs")) return uniform_probs(m);
  const json& p = doc.at("probs");
  if (!p.is_array()) bad("probs must be an array of rational strings");
  std::vector<Rational> out;
  for (const auto& v : p) {
    try {
      if (v.is_string()) {
        out.push_back(parse_rational(v.get<std::string>()));
      } else if (v.is_number_integer()) {
        out.emplace_back(v.get<long>());
      } else {
        bad("probabilities must be rational strings such as \"1/3\"");
      }
    } catch (const std::invalid_argument& e) {
      bad(e.what());
    }
  }
  return out;
}

int odd_half(int m, std::string_view kind) {
  if (m < 3 || m % 2 == 0) bad(std::string(kind) + " needs an odd number of hands >= 3");
  return (m - 1) / 2;
}

}  // namespace

GameSpec game_spec_from_json(const json& doc) {
  if (!doc.is_object()) bad("game spec must be a JSON object");
  if (!doc.contains("m") || !doc.at("m").is_number_integer()) bad("game spec needs an integer 'm'");
  const int m = doc.at("m").get<int>();
  if (m < 2) throw InvalidSpec({SpecError::TooFewHands, "m must be at least 2"});
  if (m > kMaxHandsRepresentable) throw InvalidSpec({SpecError::TooManyHands, "m exceeds the hand-set width"});
  std::string kind = "explicit";
  if (doc.contains("family")) {
    const json& f = doc.at("family");
    if (!f.is_object() || !f.contains("kind") || !f.at("kind").is_string()) bad("'family' needs a string 'kind'");
    kind = f.at("kind").get<std::string>();
  }
  std::vector<Rational> probs = probabilities(doc, m);
  GameSpec spec;
  if (kind == "ctls") {
    if (m != 2) bad("ctls has exactly 2 hands");
    if (probs.size() != 2) throw InvalidSpec({SpecError::ProbCountMismatch, "ctls needs 2 probabilities"});
    if (probs[0] + probs[1] != 1) throw InvalidSpec({SpecError::ProbSumNotOne, "probabilities must sum to 1"});
    spec = ctls(probs[0]);
  } else if (kind == "acyclic_clique") {
    spec = acyclic_clique(m, probs);
  } else if (kind == "regular_tournament") {
    spec = regular_tournament(odd_half(m, kind), probs);
  } else if (kind == "circulant") {
    spec = circulant_payoff(odd_half(m, kind), probs);
  } else if (kind == "graph") {
    if (!doc.contains("edges") || !doc.at("edges").is_array()) bad("graph games need an 'edges' array");
    std::vector<std::pair<Hand, Hand>> edges;
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) bad("each edge is a pair [winner, loser]");
      edges.emplace_back(hand_index(e[0]), hand_index(e[1]));
    }
    spec = from_dominance_graph(DominanceGraph(m, std::move(edges)), probs);
  } else if (kind == "explicit") {
    if (!doc.contains("wod_sets") || !doc.at("wod_sets").is_array()) bad("explicit games need a 'wod_sets' array");
    spec.m = m;
    spec.probs = probs;
    for (const auto& w : doc.at("wod_sets")) {
      if (!w.is_object() || !w.contains("support") || !w.contains("winners")) {
        bad("each WOD set needs 'support' and 'winners'");
      }
      spec.wod_sets.push_back({hand_set(w.at("support"), m), hand_set(w.at("winners"), m)});
    }
  } else {
    bad("unknown family kind '" + kind + "'");
  }
  spec.name = doc.value("name", kind);
  require_valid(spec);
  return spec;
}

json game_spec_to_json(const GameSpec& spec) {
  json doc;
  doc["m"] = spec.m;
  doc["name"] = spec.name;
  doc["family"] = {{"kind", "explicit"}};
  json probs = json::array();
  for (const auto& p : spec.probs) probs.push_back(to_string(p));
  doc["probs"] = probs;
  json sets = json::array();
  for (const auto& w : spec.wod_sets) sets.push_back({{"support", w.support.hands()}, {"winners", w.winners.hands()}});
  doc["wod_sets"] = sets;
  return doc;
}

GameSpec load_game_spec(std::string_view source) {
  constexpr std::string_view prefix = "builtin:";
  if (source.starts_with(prefix)) return builtin_game(source.substr(prefix.size()));
  std::ifstream in{std::string(source)};
  if (!in) bad("cannot open spec file '" + std::string(source) + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    bad(std::string("spec file is not valid JSON: ") + e.what());
  }
  return game_spec_from_json(doc);
}

std::uint64_t spec_digest(const GameSpec& spec) {
  json doc = game_spec_to_json(spec);
  doc.erase("name");
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : doc.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex_digest(std::uint64_t digest) {
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << digest;
  return out.str();
}

}  // namespace janken
