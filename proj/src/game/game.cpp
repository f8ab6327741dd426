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

#include "janken/game.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>

namespace janken {

std::string to_string(HandSet set) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Hand h : set.hands()) {
    if (!first) os << ',';
    os << h;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string_view to_string(SpecError error) {
  switch (error) {
    case SpecError::TooFewHands: return "TooFewHands";
    case SpecError::TooManyHands: return "TooManyHands";
    case SpecError::ProbCountMismatch: return "ProbCountMismatch";
    case SpecError::ZeroProbability: return "ZeroProbability";
    case SpecError::ProbSumNotOne: return "ProbSumNotOne";
    case SpecError::HandOutOfRange: return "HandOutOfRange";
    case SpecError::EmptyWinnerOrLoserSide: return "EmptyWinnerOrLoserSide";
    case SpecError::DuplicateSupport: return "DuplicateSupport";
    case SpecError::NoBinaryWodSet: return "NoBinaryWodSet";
    case SpecError::InvalidProbability: return "InvalidProbability";
    case SpecError::InvalidGraph: return "InvalidGraph";
    case SpecError::InvalidParameter: return "InvalidParameter";
  }
  return "Unknown";
}

std::string_view to_string(GameKind kind) { return kind == GameKind::Log ? "log" : "exp"; }

InvalidSpec::InvalidSpec(SpecIssue issue)
    : std::runtime_error(std::string(to_string(issue.code)) + ": " + issue.detail),
      issue_(std::move(issue)) {}

std::optional<SpecIssue> validate(const GameSpec& spec, const GameLimits& limits) {
  if (spec.m < 2) {
    return SpecIssue{SpecError::TooFewHands, "a game needs at least 2 hands, got " + std::to_string(spec.m)};
  }
  const int cap = std::min(limits.max_hands, kMaxHandsRepresentable);
  if (spec.m > cap) {
    return SpecIssue{SpecError::TooManyHands,
                     std::to_string(spec.m) + " hands exceeds the enumeration cap of " + std::to_string(cap)};
  }
  if (spec.probs.size() != static_cast<std::size_t>(spec.m)) {
    return SpecIssue{SpecError::ProbCountMismatch, "expected " + std::to_string(spec.m) + " probabilities, got " +
                                                       std::to_string(spec.probs.size())};
  }
  Rational total = 0;
  for (std::size_t i = 0; i < spec.probs.size(); ++i) {
    const Rational& p = spec.probs[i];
    if (p < 0 || p > 1) {
      return SpecIssue{SpecError::InvalidProbability, "p_" + std::to_string(i) + " = " + to_string(p)};
    }
    if (p == 0) return SpecIssue{SpecError::ZeroProbability, "p_" + std::to_string(i) + " is zero"};
    total += p;
  }
  if (total != 1) return SpecIssue{SpecError::ProbSumNotOne, "probabilities sum to " + to_string(total)};

  const HandSet all = HandSet::full(spec.m);
  std::set<std::uint32_t> seen;
  bool has_binary = false;
  for (const WodSet& w : spec.wod_sets) {
    if (!w.support.subset_of(all) || !w.winners.subset_of(w.support)) {
      return SpecIssue{SpecError::HandOutOfRange,
                       "WOD set " + to_string(w.support) + " with winners " + to_string(w.winners)};
    }
    if (w.winners.empty() || w.losers().empty()) {
      return SpecIssue{SpecError::EmptyWinnerOrLoserSide, "WOD set " + to_string(w.support) + " with winners " +
                                                              to_string(w.winners)};
    }
    if (!seen.insert(w.support.bits()).second) {
      return SpecIssue{SpecError::DuplicateSupport, "support " + to_string(w.support) + " listed twice"};
    }
    has_binary = has_binary || w.support.size() == 2;
  }
  if (!has_binary) {
    return SpecIssue{SpecError::NoBinaryWodSet, "no WOD set of two hands; two players could tie forever"};
  }
  return std::nullopt;
}

void require_valid(const GameSpec& spec, const GameLimits& limits) {
  if (auto issue = validate(spec, limits)) throw InvalidSpec(std::move(*issue));
}

Game::Game(GameSpec spec, const GameLimits& limits) : spec_(std::move(spec)) {
  require_valid(spec_, limits);
  lookup_.assign(std::size_t{1} << spec_.m, -1);
  for (std::size_t i = 0; i < spec_.wod_sets.size(); ++i) {
    lookup_[spec_.wod_sets[i].support.bits()] = static_cast<int>(i);
  }
  probs_double_.reserve(spec_.probs.size());
  for (const auto& p : spec_.probs) probs_double_.push_back(to_double(p));
}

Rational Game::mass(HandSet set) const {
  Rational total = 0;
  for (Hand h : set.hands()) total += spec_.probs[static_cast<std::size_t>(h)];
  return total;
}

DominanceGraph::DominanceGraph(int m, std::vector<std::pair<Hand, Hand>> edges)
    : m_(m), edges_(std::move(edges)), out_(static_cast<std::size_t>(std::max(m, 0)), 0u) {
  if (m < 1 || m > kMaxHandsRepresentable) {
    throw InvalidSpec({SpecError::InvalidGraph, "node count " + std::to_string(m) + " out of range"});
  }
  for (auto [i, j] : edges_) {
    if (i < 0 || j < 0 || i >= m || j >= m) {
      throw InvalidSpec({SpecError::InvalidGraph,
                         "edge (" + std::to_string(i) + "," + std::to_string(j) + ") out of range"});
    }
    if (i == j) throw InvalidSpec({SpecError::InvalidGraph, "self-loop at " + std::to_string(i)});
    if (beats(i, j) || beats(j, i)) {
      throw InvalidSpec({SpecError::InvalidGraph,
                         "pair (" + std::to_string(i) + "," + std::to_string(j) + ") given twice"});
    }
    out_[static_cast<std::size_t>(i)] |= std::uint32_t{1} << j;
  }
}

Classification classify(const Game& game) {
  Classification c;
  c.rho = 0;
  for (const WodSet& w : game.wod_sets()) {
    Rational mass = game.mass(w.support);
    if (mass > c.rho) {
      c.rho = mass;
      c.max_wod_sets.clear();
    }
    if (mass == c.rho) c.max_wod_sets.push_back(w);
  }
  c.nu = static_cast<int>(c.max_wod_sets.size());
  c.kind = c.rho == 1 ? GameKind::Log : GameKind::Exp;
  double log_sum = 0.0;
  for (const WodSet& w : c.max_wod_sets) {
    c.alphas.push_back(game.mass(w.winners));
    log_sum += std::log(to_double(Rational(c.rho / c.alphas.back())));
  }
  if (c.kind == GameKind::Log) c.alpha = c.alphas.front();
  c.h_nu = static_cast<double>(c.nu) / log_sum;
  return c;
}

std::vector<Rational> uniform_probs(int m) {
  return std::vector<Rational>(static_cast<std::size_t>(m), Rational(1, m));
}

namespace {

// Kahn's algorithm restricted to `set`.
bool has_directed_cycle(const DominanceGraph& g, HandSet set) {
  std::vector<int> indegree(static_cast<std::size_t>(g.nodes()), 0);
  for (Hand i : set.hands()) {
    for (Hand j : (g.beaten_by(i) & set).hands()) ++indegree[static_cast<std::size_t>(j)];
  }
  std::vector<Hand> ready;
  for (Hand i : set.hands()) {
    if (indegree[static_cast<std::size_t>(i)] == 0) ready.push_back(i);
  }
  int removed = 0;
  while (!ready.empty()) {
    Hand i = ready.back();
    ready.pop_back();
    ++removed;
    for (Hand j : (g.beaten_by(i) & set).hands()) {
      if (--indegree[static_cast<std::size_t>(j)] == 0) ready.push_back(j);
    }
  }
  return removed != set.size();
}

std::vector<Rational> probs_or_uniform(std::optional<std::vector<Rational>> probs, int m) {
  return probs ? std::move(*probs) : uniform_probs(m);
}

}  // namespace

GameSpec from_dominance_graph(const DominanceGraph& graph, std::vector<Rational> probs, const GameLimits& limits) {
  GameSpec spec;
  spec.m = graph.nodes();
  spec.probs = std::move(probs);
  if (spec.m > std::min(limits.max_hands, kMaxHandsRepresentable)) {
    throw InvalidSpec({SpecError::TooManyHands, std::to_string(spec.m) + " hands exceeds the enumeration cap"});
  }
  const std::uint32_t limit = std::uint32_t{1} << spec.m;
  for (std::uint32_t bits = 1; bits < limit; ++bits) {
    const HandSet s(bits);
    HandSet targets;
    for (Hand i : s.hands()) targets = targets | (graph.beaten_by(i) & s);
    if (targets.empty() || has_directed_cycle(graph, s)) continue;
    spec.wod_sets.push_back({s, s - targets});
  }
  require_valid(spec, limits);
  return spec;
}

GameSpec ctls(const Rational& p_head) {
  if (p_head <= 0 || p_head >= 1) {
    throw InvalidSpec({SpecError::InvalidProbability, "head probability must lie in (0,1), got " + to_string(p_head)});
  }
  GameSpec spec;
  spec.m = 2;
  spec.probs = {p_head, Rational(1 - p_head)};
  spec.wod_sets = {{HandSet{0, 1}, HandSet{0}}};
  spec.name = "ctls";
  return spec;
}

GameSpec acyclic_clique(int m, std::optional<std::vector<Rational>> probs) {
  if (m < 2) throw InvalidSpec({SpecError::InvalidParameter, "acyclic clique needs m >= 2"});
  std::vector<std::pair<Hand, Hand>> edges;
  for (Hand i = 0; i < m; ++i) {
    for (Hand j = i + 1; j < m; ++j) edges.emplace_back(i, j);
  }
  GameSpec spec = from_dominance_graph(DominanceGraph(m, std::move(edges)), probs_or_uniform(std::move(probs), m));
  spec.name = "clique?m=" + std::to_string(m);
  return spec;
}

DominanceGraph regular_tournament_graph(int k) {
  if (k < 1) throw InvalidSpec({SpecError::InvalidParameter, "regular tournament needs k >= 1"});
  const int size = 2 * k + 1;
  std::vector<std::pair<Hand, Hand>> edges;
  for (Hand i = 0; i < size; ++i) {
    for (int d = 1; d <= k; ++d) edges.emplace_back(i, (i + d) % size);
  }
  return DominanceGraph(size, std::move(edges));
}

GameSpec regular_tournament(int k, std::optional<std::vector<Rational>> probs) {
  DominanceGraph graph = regular_tournament_graph(k);
  GameSpec spec = from_dominance_graph(graph, probs_or_uniform(std::move(probs), graph.nodes()));
  spec.name = "tournament?m=" + std::to_string(k);
  return spec;
}

GameSpec circulant_payoff(int k, std::optional<std::vector<Rational>> probs) {
  if (k < 1) throw InvalidSpec({SpecError::InvalidParameter, "circulant game needs k >= 1"});
  const int size = 2 * k + 1;
  if (size > kMaxHandsRepresentable) {
    throw InvalidSpec({SpecError::TooManyHands, "circulant game too large"});
  }
  auto residue = [size, k](int i, int j) {
    int g = ((i - j) % size + size) % size;
    return g > k ? g - size : g;
  };
  GameSpec spec;
  spec.m = size;
  spec.probs = probs_or_uniform(std::move(probs), size);
  spec.name = "circulant?m=" + std::to_string(k);
  const std::uint32_t limit = std::uint32_t{1} << size;
  for (std::uint32_t bits = 1; bits < limit; ++bits) {
    const HandSet s(bits);
    const auto members = s.hands();
    std::vector<std::uint64_t> gain;
    gain.reserve(members.size());
    for (Hand i : members) {
      std::uint64_t total = 0;
      for (Hand j : members) total += std::uint64_t{1} << (k + residue(i, j));
      gain.push_back(total);
    }
    const std::uint64_t best = *std::max_element(gain.begin(), gain.end());
    HandSet top;
    for (std::size_t t = 0; t < members.size(); ++t) {
      if (gain[t] == best) top.insert(members[t]);
    }
    if (top.size() < s.size()) spec.wod_sets.push_back({s, top});
  }
  require_valid(spec);
  return spec;
}

bool isomorphic(const GameSpec& a, const GameSpec& b) {
  if (a.m != b.m || a.wod_sets.size() != b.wod_sets.size() || a.probs.size() != b.probs.size()) return false;
  std::vector<int> b_lookup(std::size_t{1} << b.m, -1);
  for (std::size_t i = 0; i < b.wod_sets.size(); ++i) b_lookup[b.wod_sets[i].support.bits()] = static_cast<int>(i);
  std::vector<Hand> perm(static_cast<std::size_t>(a.m));
  std::iota(perm.begin(), perm.end(), 0);
  auto map_set = [&perm](HandSet s) {
    HandSet out;
    for (Hand h : s.hands()) out.insert(perm[static_cast<std::size_t>(h)]);
    return out;
  };
  do {
    bool ok = true;
    for (std::size_t h = 0; ok && h < perm.size(); ++h) ok = a.probs[h] == b.probs[static_cast<std::size_t>(perm[h])];
    for (std::size_t i = 0; ok && i < a.wod_sets.size(); ++i) {
      const int idx = b_lookup[map_set(a.wod_sets[i].support).bits()];
      ok = idx >= 0 && b.wod_sets[static_cast<std::size_t>(idx)].winners == map_set(a.wod_sets[i].winners);
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace janken
