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

#ifndef JANKEN_GAME_HPP_
#define JANKEN_GAME_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "janken/hand_set.hpp"
#include "janken/rational.hpp"

namespace janken {

// Enumeration over all 2^m - 1 supports is exponential in m.
struct GameLimits {
  int max_hands = 16;
};

// A win-or-defeat outcome: the players holding `winners` advance, the
// rest of `support` is eliminated.
struct WodSet {
  HandSet support;
  HandSet winners;

  HandSet losers() const { return support - winners; }
  friend bool operator==(const WodSet&, const WodSet&) = default;
};

// Raw game description. Supports not listed in `wod_sets` are ties.
// Nothing is enforced at this level; see validate() and Game.
struct GameSpec {
  int m = 0;
  std::vector<Rational> probs;
  std::vector<WodSet> wod_sets;
  std::string name;
};

enum class SpecError {
  TooFewHands,
  TooManyHands,
  ProbCountMismatch,
  ZeroProbability,
  ProbSumNotOne,
  HandOutOfRange,
  EmptyWinnerOrLoserSide,
  DuplicateSupport,
  NoBinaryWodSet,
  InvalidProbability,
  InvalidGraph,
  InvalidParameter,
};

std::string_view to_string(SpecError error);

struct SpecIssue {
  SpecError code;
  std::string detail;
};

class InvalidSpec : public std::runtime_error {
 public:
  explicit InvalidSpec(SpecIssue issue);
  SpecError code() const { return issue_.code; }
  const SpecIssue& issue() const { return issue_; }

 private:
  SpecIssue issue_;
};

// First violated invariant, or nullopt when the game spec is playable.
std::optional<SpecIssue> validate(const GameSpec& spec, const GameLimits& limits = {});

// Throws InvalidSpec on the first violated invariant.
void require_valid(const GameSpec& spec, const GameLimits& limits = {});

// Validated, immutable game with an O(1) support -> outcome lookup.
class Game {
 public:
  explicit Game(GameSpec spec, const GameLimits& limits = {});

  int hands() const { return spec_.m; }
  const GameSpec& spec() const { return spec_; }
  const std::string& name() const { return spec_.name; }
  const std::vector<Rational>& probs() const { return spec_.probs; }
  const std::vector<WodSet>& wod_sets() const { return spec_.wod_sets; }
  const std::vector<double>& probs_double() const { return probs_double_; }

  // Outcome for a realized support; nullptr means tie.
  const WodSet* outcome(HandSet support) const {
    const int idx = lookup_[support.bits()];
    return idx < 0 ? nullptr : &spec_.wod_sets[static_cast<std::size_t>(idx)];
  }

  Rational mass(HandSet set) const;

 private:
  GameSpec spec_;
  std::vector<int> lookup_;
  std::vector<double> probs_double_;
};

// Directed "i beats j" relation over m hands.
class DominanceGraph {
 public:
  DominanceGraph(int m, std::vector<std::pair<Hand, Hand>> edges);

  int nodes() const { return m_; }
  const std::vector<std::pair<Hand, Hand>>& edges() const { return edges_; }
  bool beats(Hand i, Hand j) const { return (out_[static_cast<std::size_t>(i)] >> j) & 1u; }
  // Nodes beaten by i.
  HandSet beaten_by(Hand i) const { return HandSet(out_[static_cast<std::size_t>(i)]); }

 private:
  int m_;
  std::vector<std::pair<Hand, Hand>> edges_;
  std::vector<std::uint32_t> out_;
};

enum class GameKind { Log, Exp };
std::string_view to_string(GameKind kind);

struct Classification {
  Rational rho;
  int nu = 0;
  GameKind kind = GameKind::Exp;
  std::optional<Rational> alpha;
  std::vector<WodSet> max_wod_sets;
  std::vector<Rational> alphas;
  double h_nu = 0.0;
};

Classification classify(const Game& game);

// Uniform distribution over m hands.
std::vector<Rational> uniform_probs(int m);

// Induced-subgraph rule: a support is a tie when it has no internal edge or
// a weakly connected component containing a directed cycle; otherwise its
// winners are the nodes without an incoming internal edge.
GameSpec from_dominance_graph(const DominanceGraph& graph, std::vector<Rational> probs,
                              const GameLimits& limits = {});

// Coin tossing: hand 0 (head) beats hand 1 (tail).
GameSpec ctls(const Rational& p_head);

// Transitive tournament: i beats j iff i < j.
GameSpec acyclic_clique(int m, std::optional<std::vector<Rational>> probs = std::nullopt);

// 2k+1 hands, i beats j iff (j - i) mod (2k+1) in [1, k].
DominanceGraph regular_tournament_graph(int k);
GameSpec regular_tournament(int k, std::optional<std::vector<Rational>> probs = std::nullopt);

// 2k+1 hands; hand i collects 2^(k + g(i,j)) from every j in the support,
// g(i,j) being the residue of i - j in [-k, k]. Maximal collectors win
// unless every hand in the support ties for the maximum.
GameSpec circulant_payoff(int k, std::optional<std::vector<Rational>> probs = std::nullopt);

// True when some relabeling of hands maps a's WOD sets (with winners) and
// probabilities onto b's.
bool isomorphic(const GameSpec& a, const GameSpec& b);

}  // namespace janken

#endif  // JANKEN_GAME_HPP_
