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

#ifndef JANKEN_HAND_SET_HPP_
#define JANKEN_HAND_SET_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace janken {

// Index of a hand, dense in [0, m).
using Hand = int;

// Hard ceiling of the bitmask representation. The default enumeration cap
// (see GameLimits) is lower.
inline constexpr int kMaxHandsRepresentable = 31;

// A set of hands stored as a bitmask; bit i set <=> hand i present.
class HandSet {
 public:
  constexpr HandSet() = default;
  constexpr explicit HandSet(std::uint32_t bits) : bits_(bits) {}
  HandSet(std::initializer_list<Hand> hands) {
    for (Hand h : hands) insert(h);
  }

  static constexpr HandSet full(int m) {
    return HandSet(m >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << m) - 1);
  }
  static constexpr HandSet single(Hand h) { return HandSet(std::uint32_t{1} << h); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Hand h) const { return (bits_ >> h) & 1u; }
  constexpr bool subset_of(HandSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr void insert(Hand h) { bits_ |= std::uint32_t{1} << h; }
  constexpr void erase(Hand h) { bits_ &= ~(std::uint32_t{1} << h); }

  // Hands in increasing index order.
  std::vector<Hand> hands() const {
    std::vector<Hand> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr HandSet operator|(HandSet a, HandSet b) { return HandSet(a.bits_ | b.bits_); }
  friend constexpr HandSet operator&(HandSet a, HandSet b) { return HandSet(a.bits_ & b.bits_); }
  friend constexpr HandSet operator-(HandSet a, HandSet b) { return HandSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(HandSet, HandSet) = default;
  friend constexpr auto operator<=>(HandSet, HandSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

// "{0,2,3}"
std::string to_string(HandSet set);

// Calls fn(T) for every subset T of `set`, including the empty set and `set`.
template <typename Fn>
void for_each_subset(HandSet set, Fn&& fn) {
  const std::uint32_t s = set.bits();
  std::uint32_t t = s;
  while (true) {
    fn(HandSet(t));
    if (t == 0) break;
    t = (t - 1) & s;
  }
}

}  // namespace janken

#endif  // JANKEN_HAND_SET_HPP_
