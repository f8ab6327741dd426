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

#include <doctest.h>

#include <sstream>

#include "janken/builtins.hpp"
#include "janken/io.hpp"

using namespace janken;
using nlohmann::json;

namespace {

SpecError parse_error(const json& doc) {
  try {
    game_spec_from_json(doc);
  } catch (const InvalidSpec& e) {
    return e.code();
  }
  FAIL("spec was accepted");
  return SpecError::InvalidParameter;
}

}  // namespace

TEST_CASE("family kinds") {
  CHECK(isomorphic(game_spec_from_json(json::parse(R"({"m": 2, "family": {"kind": "ctls"}})")), ctls(Rational(1, 2))));
  const GameSpec coin = game_spec_from_json(json::parse(R"({"m": 2, "probs": ["1/3", "2/3"], "family": {"kind": "ctls"}})"));
  CHECK(coin.probs[0] == Rational(1, 3));
  CHECK(isomorphic(game_spec_from_json(json::parse(R"({"m": 4, "family": {"kind": "acyclic_clique"}})")),
                   acyclic_clique(4)));
  CHECK(isomorphic(game_spec_from_json(json::parse(R"({"m": 5, "family": {"kind": "regular_tournament"}})")),
                   regular_tournament(2)));
  CHECK(isomorphic(game_spec_from_json(json::parse(R"({"m": 3, "family": {"kind": "circulant"}})")),
                   circulant_payoff(1)));
  const GameSpec graph = game_spec_from_json(
      json::parse(R"({"m": 3, "family": {"kind": "graph"}, "edges": [[0, 2], [2, 1], [1, 0]]})"));
  CHECK(isomorphic(graph, builtin_game("rpsls")));
  const GameSpec expl = game_spec_from_json(json::parse(
      R"({"m": 2, "probs": ["1/4", "3/4"], "wod_sets": [{"support": [0, 1], "winners": [1]}], "name": "tail-wins"})"));
  CHECK(expl.name == "tail-wins");
  CHECK(expl.wod_sets.size() == 1);
  CHECK(expl.wod_sets[0].winners == HandSet{1});
}

TEST_CASE("malformed documents") {
  CHECK(parse_error(json::parse(R"([1, 2])")) == SpecError::InvalidParameter);
  CHECK(parse_error(json::parse(R"({"family": {"kind": "ctls"}})")) == SpecError::InvalidParameter);
  CHECK(parse_error(json::parse(R"({"m": 1, "family": {"kind": "ctls"}})")) == SpecError::TooFewHands);
  CHECK(parse_error(json::parse(R"({"m": 4, "family": {"kind": "regular_tournament"}})")) == SpecError::InvalidParameter);
  CHECK(parse_error(json::parse(R"({"m": 3, "family": {"kind": "warp"}})")) == SpecError::InvalidParameter);
  CHECK(parse_error(json::parse(R"({"m": 3, "probs": ["1/3", "x", "1/3"], "family": {"kind": "acyclic_clique"}})")) ==
        SpecError::InvalidParameter);
  CHECK(parse_error(json::parse(R"({"m": 3, "probs": ["1/3", "1/3"], "family": {"kind": "acyclic_clique"}})")) ==
        SpecError::ProbCountMismatch);
  CHECK(parse_error(json::parse(R"({"m": 3, "family": {"kind": "graph"}, "edges": [[0, 1], [1, 0]]})")) ==
        SpecError::InvalidGraph);
  CHECK(parse_error(json::parse(R"({"m": 3, "wod_sets": [{"support": [0, 5], "winners": [0]}]})")) ==
        SpecError::HandOutOfRange);
  CHECK(parse_error(json::parse(R"({"m": 3, "wod_sets": [{"support": [0, 1, 2], "winners": [0]}]})")) ==
        SpecError::NoBinaryWodSet);
}

TEST_CASE("explicit round trip and digest") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const GameSpec spec = builtin_game(name);
    const GameSpec back = game_spec_from_json(game_spec_to_json(spec));
    CHECK(back.m == spec.m);
    CHECK(back.probs == spec.probs);
    CHECK(back.wod_sets == spec.wod_sets);
    CHECK(spec_digest(back) == spec_digest(spec));
  }
  GameSpec renamed = builtin_game("rpsls");
  renamed.name = "other";
  CHECK(spec_digest(renamed) == spec_digest(builtin_game("rpsls")));
  CHECK(spec_digest(builtin_game("graph3")) != spec_digest(builtin_game("graph5")));
  CHECK(hex_digest(0xabcULL) == "0000000000000abc");
  CHECK_THROWS_AS(load_game_spec("builtin:semicircle"), InvalidSpec);
}

TEST_CASE("exports") {
  TableRequest req;
  req.horizon = 3;
  req.levels = 2;
  const RationalTables t = compute_tables<Rational>(Game(builtin_game("ctls")), req);
  std::ostringstream csv;
  write_tables_csv(csv, t);
  CHECK(csv.str() ==
        "# schema_version=1 manifest=manifest.json\n"
        "n,mu,var,y_mean,y_var,z_mean\n"
        "1,0,0,0,0,0\n"
        "2,2,2,4,8,1\n"
        "3,2.3333333333333335,2.4444444444444446,6,12,1.5\n");
  std::ostringstream cdf;
  write_cdf_csv(cdf, t);
  CHECK(cdf.str().find("2,2,0.75\n") != std::string::npos);
  const json doc = tables_to_json(t);
  CHECK(doc["numeric_mode"] == "rational");
  CHECK(doc["mu"][3] == "7/3");
  CHECK(doc["cdf"][2][2] == "3/4");
  CHECK(tables_to_json(to_float(t))["mu"][2] == 2.0);

  SimConfig cfg;
  cfg.n = 3;
  cfg.trials = 2;
  cfg.seed = 5;
  const SimSummary s = simulate(Game(builtin_game("rpsls")), cfg);
  std::ostringstream samples;
  write_samples_csv(samples, s);
  CHECK(samples.str().rfind("# schema_version=1 manifest=manifest.json\ntrial_index,X,Y,Z\n0,", 0) == 0);
  const json summary = summary_to_json(s);
  CHECK(summary["seed"] == 5);
  CHECK(summary["mode"] == "per-round");
  CHECK(summary["X"]["count"] == 2);

  FluctuationProfile p;
  p.points = {{4, 0.0, 0.25}};
  std::ostringstream prof;
  write_profile_csv(prof, p);
  CHECK(prof.str() == "# schema_version=1 manifest=manifest.json\nn,phase,residual\n4,0,0.25\n");

  Prediction pred;
  pred.leading = 10.0;
  pred.validity = "test";
  const json pj = prediction_to_json(pred, 1024);
  CHECK(pj["quantity"] == "XMean");
  CHECK(pj["correction"].is_null());

  RunManifest m;
  m.command = "janken exact";
  m.horizon = 8;
  m.numeric_mode = NumericMode::Float;
  const json mj = m.to_json();
  CHECK(mj["numeric_mode"] == "float");
  CHECK(mj["tool_version"] == std::string(kToolVersion));
  CHECK_FALSE(mj.contains("seed"));
}

TEST_CASE("classification output") {
  CHECK(classification_line(classify(Game(builtin_game("rpsls")))) ==
        "rho=2/3 nu=3 kind=exp h_nu=1.442695 alphas=1/3,1/3,1/3");
  const json doc = classification_to_json(classify(Game(builtin_game("ctls"))));
  CHECK(doc["alpha"] == "1/2");
  CHECK(doc["max_wod_sets"].size() == 1);
}
