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

#include "janken/builtins.hpp"

#include <charconv>
#include <map>

namespace janken {
namespace {

using Params = std::map<std::string, std::string, std::less<>>;

InvalidSpec bad(std::string detail) { return InvalidSpec({SpecError::InvalidParameter, std::move(detail)}); }

Params parse_query(std::string_view query) {
  Params params;
  while (!query.empty()) {
    auto amp = query.find('&');
    auto item = query.substr(0, amp);
    auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) throw bad("malformed parameter '" + std::string(item) + "'");
    params.emplace(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)));
    if (amp == std::string_view::npos) break;
    query.remove_prefix(amp + 1);
  }
  return params;
}

int int_param(const Params& params, std::string_view key, int fallback) {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  int value = 0;
  const auto& s = it->second;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw bad("parameter " + std::string(key) + " is not an integer");
  return value;
}

GameSpec named(GameSpec spec, std::string name) {
  spec.name = std::move(name);
  return spec;
}

}  // namespace

DominanceGraph three_hand_graph(int which) {
  switch (which) {
    case 1: return DominanceGraph(3, {{0, 2}, {2, 1}, {1, 0}});
    case 2: return DominanceGraph(3, {{1, 0}, {1, 2}, {0, 2}});
    case 3: return DominanceGraph(3, {{1, 0}, {1, 2}});
    case 4: return DominanceGraph(3, {{0, 1}, {2, 1}});
    // H0 on top of the chain.
    case 5: return DominanceGraph(3, {{0, 1}, {1, 2}});
    default: throw bad("three-hand graph index must be 1..5");
  }
}

DominanceGraph world_graph(std::string_view region) {
  if (region == "germany") {
    // rock, paper, scissors, well
    return DominanceGraph(4, {{0, 2}, {1, 0}, {1, 3}, {2, 1}, {3, 0}, {3, 2}});
  }
  if (region == "malaysia") {
    // bird, stone, revolver, plank, water
    return DominanceGraph(
        5, {{0, 4}, {1, 0}, {1, 3}, {2, 0}, {2, 1}, {2, 3}, {3, 0}, {3, 4}, {4, 1}, {4, 2}});
  }
  if (region == "china") {
    // god, chicken, rifle, termite, fox
    return DominanceGraph(5, {{0, 1}, {0, 2}, {1, 3}, {2, 1}, {2, 4}, {3, 0}, {4, 1}});
  }
  throw bad("unknown world game '" + std::string(region) + "'");
}

GameSpec builtin_game(std::string_view full_name) {
  auto q = full_name.find('?');
  const std::string_view name = full_name.substr(0, q);
  const Params params = q == std::string_view::npos ? Params{} : parse_query(full_name.substr(q + 1));

  if (name == "ctls") {
    auto it = params.find("p");
    Rational p(1, 2);
    if (it != params.end()) {
      try {
        p = parse_rational(it->second);
      } catch (const std::invalid_argument& e) {
        throw bad(e.what());
      }
    }
    return named(ctls(p), std::string(full_name));
  }
  if (name == "rpsls") return named(from_dominance_graph(three_hand_graph(1), uniform_probs(3)), "rpsls");
  if (name.size() == 6 && name.starts_with("graph") && name[5] >= '1' && name[5] <= '5') {
    return named(from_dominance_graph(three_hand_graph(name[5] - '0'), uniform_probs(3)), std::string(name));
  }
  if (name == "clique") return named(acyclic_clique(int_param(params, "m", 3)), std::string(full_name));
  if (name == "tournament") return named(regular_tournament(int_param(params, "m", 1)), std::string(full_name));
  if (name == "circulant") return named(circulant_payoff(int_param(params, "m", 1)), std::string(full_name));
  if (name.starts_with("world-")) {
    DominanceGraph g = world_graph(name.substr(6));
    return named(from_dominance_graph(g, uniform_probs(g.nodes())), std::string(name));
  }
  if (name == "semicircle") throw bad("semicircle has a continuum of hands and is available to simulation only");
  throw bad("unknown built-in game '" + std::string(full_name) + "'");
}

std::vector<std::string> builtin_names() {
  return {"ctls",          "rpsls",         "graph1",     "graph2",        "graph3",
          "graph4",        "graph5",        "clique?m=3", "tournament?m=1", "circulant?m=1",
          "world-germany", "world-malaysia", "world-china"};
}

}  // namespace janken
