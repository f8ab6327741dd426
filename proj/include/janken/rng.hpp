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

#ifndef JANKEN_RNG_HPP_
#define JANKEN_RNG_HPP_

#include <cstdint>
#include <limits>

namespace janken {

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-based stream: output k of stream (seed, stream) is
// mix64(key + (k + 1) * golden), with key = mix64(seed ^ mix64(stream)).
// A trial's draws depend only on (seed, trial index), never on which thread
// ran it or in what order.
class Rng {
 public:
  using result_type = std::uint64_t;

  Rng(std::uint64_t seed, std::uint64_t stream) : key_(mix64(seed ^ mix64(stream + kGolden))) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    counter_ += kGolden;
    return mix64(key_ + counter_);
  }

  // Uniform on (0, 1]; never returns 0, so log(uniform()) is finite.
  double uniform() { return static_cast<double>(((*this)() >> 11) + 1) * 0x1.0p-53; }

  std::uint64_t draws() const { return counter_ / kGolden; }

 private:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace janken

#endif  // JANKEN_RNG_HPP_
