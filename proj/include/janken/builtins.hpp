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

#ifndef JANKEN_BUILTINS_HPP_
#define JANKEN_BUILTINS_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "janken/game.hpp"

namespace janken {

// Named games, optionally parameterized with a query string:
//   ctls?p=1/3, rpsls, graph1..graph5, clique?m=4, tournament?m=2,
//   circulant?m=2, world-germany, world-malaysia, world-china.
// Throws InvalidSpec(InvalidParameter) for unknown names or bad parameters.
// "semicircle" is not a finite game and is handled by the simulator.
GameSpec builtin_game(std::string_view name);

std::vector<std::string> builtin_names();

// Dominance graphs behind the graph-based built-ins.
DominanceGraph three_hand_graph(int which);  // Graphs I..V, which in [1,5]
DominanceGraph world_graph(std::string_view region);  // germany | malaysia | china

}  // namespace janken

#endif  // JANKEN_BUILTINS_HPP_
