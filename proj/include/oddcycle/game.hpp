// Copyright 2026 The oddcycle Authors
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

#ifndef ODDCYCLE_GAME_HPP_
#define ODDCYCLE_GAME_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "oddcycle/rational.hpp"

namespace oddcycle::game {

// One point in the support of the referee distribution.
struct Draw {
  std::uint32_t alice_q = 0;
  std::uint32_t bob_q = 0;
  Rational weight{0};
  // XOR target (bit i is the target of coordinate i). Only consulted when the
  // game is an XOR game; general games use the predicate instead.
  std::uint32_t target = 0;
};

using Predicate = std::function<bool(std::uint32_t alice_q, std::uint32_t bob_q,
                                     std::uint32_t alice_a, std::uint32_t bob_a)>;

// A two-player one-round game with finite alphabets.
//
// Questions are dense indices. For repeated games built by tensor_power the
// index is mixed radix with coordinate 0 least significant, and answers are
// bit vectors with bit i belonging to coordinate i.
class GameSpec {
 public:
  // XOR game: win iff alice_a ^ bob_a == draw.target.
  GameSpec(std::string name, std::uint32_t alice_count, std::uint32_t bob_count,
           std::uint32_t answer_count, int depth, std::uint32_t radix,
           std::vector<Draw> draws);
  // General game with an explicit predicate.
  GameSpec(std::string name, std::uint32_t alice_count, std::uint32_t bob_count,
           std::uint32_t answer_count, int depth, std::uint32_t radix,
           std::vector<Draw> draws, Predicate predicate);

  const std::string& name() const { return name_; }
  std::uint32_t alice_count() const { return alice_count_; }
  std::uint32_t bob_count() const { return bob_count_; }
  std::uint32_t answer_count() const { return answer_count_; }
  int depth() const { return depth_; }
  // Per-coordinate question radix (n for the odd-cycle game, 2 for CHSH).
  std::uint32_t radix() const { return radix_; }
  bool is_xor() const { return !predicate_; }

  const std::vector<Draw>& draws() const { return draws_; }
  // Weights scaled to integers over a common denominator.
  const std::vector<std::int64_t>& int_weights() const { return int_weights_; }
  std::int64_t denominator() const { return denominator_; }

  bool wins(const Draw& d, std::uint32_t alice_a, std::uint32_t bob_a) const;

  // Copy of this game with the predicate replaced.
  GameSpec with_predicate(std::string name, Predicate predicate) const;

  // Subgame on the draws with keep[i] set, weights renormalised to sum to 1.
  // Throws std::invalid_argument when nothing is kept.
  GameSpec restricted(const std::vector<bool>& keep, std::string name) const;

  // Draw indices grouped by question.
  const std::vector<std::vector<std::uint32_t>>& draws_by_alice() const { return by_alice_; }
  const std::vector<std::vector<std::uint32_t>>& draws_by_bob() const { return by_bob_; }

 private:
  void finalize();

  std::string name_;
  std::uint32_t alice_count_;
  std::uint32_t bob_count_;
  std::uint32_t answer_count_;
  int depth_;
  std::uint32_t radix_;
  std::vector<Draw> draws_;
  Predicate predicate_;
  std::vector<std::int64_t> int_weights_;
  std::int64_t denominator_ = 1;
  std::vector<std::vector<std::uint32_t>> by_alice_;
  std::vector<std::vector<std::uint32_t>> by_bob_;
};

struct DeterministicStrategy {
  std::vector<std::uint32_t> alice;
  std::vector<std::uint32_t> bob;

  bool operator==(const DeterministicStrategy&) const = default;
};

// Throws std::invalid_argument unless the tables are total over the game's
// questions with answers inside the alphabet.
void validate_strategy(const GameSpec& game, const DeterministicStrategy& s);

// d-fold parallel repetition: product questions and distribution, win iff
// every coordinate wins. base must have depth 1 and binary answers.
GameSpec tensor_power(const GameSpec& base, int d);

// Odd-cycle game on C_n repeated d times. Per coordinate the referee draws
// x uniform in [n] and t uniform in {0,1}; Alice gets x, Bob gets x+t mod n
// and they win iff a ^ b = t.
GameSpec make_odd_cycle_game(int n, int d);

// Table delta[x][y] for x, y in {0,1}; the CHSH target becomes
// (x & y) ^ delta[x][y] per coordinate.
using DeltaTable = std::vector<std::vector<int>>;

GameSpec make_chsh_game(int d, const std::optional<DeltaTable>& delta = std::nullopt);

// Exact winning probability sum over draws of weight * [win].
Rational evaluate_strategy(const GameSpec& game, const DeterministicStrategy& s);

// Mixed-radix helpers for repeated-game question indices.
std::vector<std::uint32_t> decode_question(std::uint32_t index, std::uint32_t radix, int depth);
std::uint32_t encode_question(const std::vector<std::uint32_t>& coords, std::uint32_t radix);

}  // namespace oddcycle::game

#endif  // ODDCYCLE_GAME_HPP_
