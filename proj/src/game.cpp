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

#include "oddcycle/game.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace oddcycle::game {

GameSpec::GameSpec(std::string name, std::uint32_t alice_count, std::uint32_t bob_count,
                   std::uint32_t answer_count, int depth, std::uint32_t radix,
                   std::vector<Draw> draws)
    : name_(std::move(name)),
      alice_count_(alice_count),
      bob_count_(bob_count),
      answer_count_(answer_count),
      depth_(depth),
      radix_(radix),
      draws_(std::move(draws)) {
  finalize();
}

GameSpec::GameSpec(std::string name, std::uint32_t alice_count, std::uint32_t bob_count,
                   std::uint32_t answer_count, int depth, std::uint32_t radix,
                   std::vector<Draw> draws, Predicate predicate)
    : name_(std::move(name)),
      alice_count_(alice_count),
      bob_count_(bob_count),
      answer_count_(answer_count),
      depth_(depth),
      radix_(radix),
      draws_(std::move(draws)),
      predicate_(std::move(predicate)) {
  if (!predicate_) throw std::invalid_argument("GameSpec: predicate must be callable");
  finalize();
}

void GameSpec::finalize() {
  if (alice_count_ == 0 || bob_count_ == 0 || answer_count_ == 0) {
    throw std::invalid_argument("GameSpec: alphabets must be nonempty");
  }
  if (depth_ < 1) throw std::invalid_argument("GameSpec: depth must be >= 1");
  if (draws_.empty()) throw std::invalid_argument("GameSpec: distribution has empty support");
  Rational total{0};
  std::int64_t lcm = 1;
  for (const Draw& d : draws_) {
    if (d.alice_q >= alice_count_ || d.bob_q >= bob_count_) {
      throw std::invalid_argument("GameSpec: draw question out of range");
    }
    if (d.weight < 0) throw std::invalid_argument("GameSpec: negative weight");
    if (!predicate_ && d.target >= answer_count_) {
      throw std::invalid_argument("GameSpec: XOR target outside the answer alphabet");
    }
    total += d.weight;
    lcm = std::lcm(lcm, d.weight.denominator());
  }
  if (total != Rational(1)) {
    throw std::invalid_argument("GameSpec: weights sum to " + to_string(total) + ", not 1");
  }
  denominator_ = lcm;
  int_weights_.clear();
  int_weights_.reserve(draws_.size());
  for (const Draw& d : draws_) {
    int_weights_.push_back(d.weight.numerator() * (lcm / d.weight.denominator()));
  }
  by_alice_.assign(alice_count_, {});
  by_bob_.assign(bob_count_, {});
  for (std::uint32_t i = 0; i < draws_.size(); ++i) {
    by_alice_[draws_[i].alice_q].push_back(i);
    by_bob_[draws_[i].bob_q].push_back(i);
  }
}

bool GameSpec::wins(const Draw& d, std::uint32_t alice_a, std::uint32_t bob_a) const {
  if (predicate_) return predicate_(d.alice_q, d.bob_q, alice_a, bob_a);
  return (alice_a ^ bob_a) == d.target;
}

GameSpec GameSpec::with_predicate(std::string name, Predicate predicate) const {
  return GameSpec(std::move(name), alice_count_, bob_count_, answer_count_, depth_, radix_,
                  draws_, std::move(predicate));
}

GameSpec GameSpec::restricted(const std::vector<bool>& keep, std::string name) const {
  if (keep.size() != draws_.size()) {
    throw std::invalid_argument("restricted: mask size does not match the draw count");
  }
  Rational mass{0};
  for (std::size_t i = 0; i < draws_.size(); ++i) {
    if (keep[i]) mass += draws_[i].weight;
  }
  if (mass == Rational(0)) throw std::invalid_argument("restricted: no surviving draws");
  std::vector<Draw> kept;
  for (std::size_t i = 0; i < draws_.size(); ++i) {
    if (!keep[i]) continue;
    Draw d = draws_[i];
    d.weight /= mass;
    kept.push_back(d);
  }
  if (predicate_) {
    return GameSpec(std::move(name), alice_count_, bob_count_, answer_count_, depth_, radix_,
                    std::move(kept), predicate_);
  }
  return GameSpec(std::move(name), alice_count_, bob_count_, answer_count_, depth_, radix_,
                  std::move(kept));
}

void validate_strategy(const GameSpec& game, const DeterministicStrategy& s) {
  if (s.alice.size() != game.alice_count()) {
    throw std::invalid_argument("strategy: Alice table has " + std::to_string(s.alice.size()) +
                                " entries, game has " + std::to_string(game.alice_count()) +
                                " questions");
  }
  if (s.bob.size() != game.bob_count()) {
    throw std::invalid_argument("strategy: Bob table has " + std::to_string(s.bob.size()) +
                                " entries, game has " + std::to_string(game.bob_count()) +
                                " questions");
  }
  for (auto a : s.alice) {
    if (a >= game.answer_count()) throw std::invalid_argument("strategy: Alice answer out of range");
  }
  for (auto b : s.bob) {
    if (b >= game.answer_count()) throw std::invalid_argument("strategy: Bob answer out of range");
  }
}

std::vector<std::uint32_t> decode_question(std::uint32_t index, std::uint32_t radix, int depth) {
  std::vector<std::uint32_t> coords(static_cast<std::size_t>(depth));
  for (int i = 0; i < depth; ++i) {
    coords[static_cast<std::size_t>(i)] = index % radix;
    index /= radix;
  }
  return coords;
}

std::uint32_t encode_question(const std::vector<std::uint32_t>& coords, std::uint32_t radix) {
  std::uint32_t index = 0;
  for (std::size_t i = coords.size(); i-- > 0;) index = index * radix + coords[i];
  return index;
}

namespace {

std::uint32_t ipow(std::uint32_t base, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    r *= base;
    if (r > (1ULL << 31)) throw std::invalid_argument("tensor_power: alphabet too large");
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace

GameSpec tensor_power(const GameSpec& base, int d) {
  if (d < 1) throw std::invalid_argument("tensor_power: depth must be >= 1");
  if (base.depth() != 1) throw std::invalid_argument("tensor_power: base game must have depth 1");
  if (base.answer_count() != 2) throw std::invalid_argument("tensor_power: base answers must be binary");
  if (d == 1) return base;
  const std::uint32_t qa = base.alice_count(), qb = base.bob_count();
  const std::uint32_t alice_count = ipow(qa, d), bob_count = ipow(qb, d);
  const std::uint32_t answers = ipow(2, d);
  const auto& bd = base.draws();
  std::uint64_t total = 1;
  for (int i = 0; i < d; ++i) total *= bd.size();
  std::vector<Draw> draws;
  draws.reserve(total);
  std::vector<std::size_t> pick(static_cast<std::size_t>(d), 0);
  for (std::uint64_t k = 0; k < total; ++k) {
    Draw out;
    out.weight = Rational(1);
    std::uint32_t ma = 1, mb = 1;
    for (int i = 0; i < d; ++i) {
      const Draw& c = bd[pick[static_cast<std::size_t>(i)]];
      out.alice_q += c.alice_q * ma;
      out.bob_q += c.bob_q * mb;
      out.weight *= c.weight;
      out.target |= c.target << i;
      ma *= qa;
      mb *= qb;
    }
    draws.push_back(out);
    for (int i = 0; i < d; ++i) {
      if (++pick[static_cast<std::size_t>(i)] < bd.size()) break;
      pick[static_cast<std::size_t>(i)] = 0;
    }
  }
  std::string name = base.name() + "^" + std::to_string(d);
  if (base.is_xor()) {
    return GameSpec(name, alice_count, bob_count, answers, d, base.radix(), std::move(draws));
  }
  // General predicates are applied coordinatewise on the decoded questions.
  Predicate pred = [base, d, qa, qb](std::uint32_t x, std::uint32_t y, std::uint32_t a,
                                     std::uint32_t b) {
    for (int i = 0; i < d; ++i) {
      Draw c;
      c.alice_q = x % qa;
      c.bob_q = y % qb;
      x /= qa;
      y /= qb;
      if (!base.wins(c, (a >> i) & 1U, (b >> i) & 1U)) return false;
    }
    return true;
  };
  return GameSpec(name, alice_count, bob_count, answers, d, base.radix(), std::move(draws),
                  std::move(pred));
}

GameSpec make_odd_cycle_game(int n, int d) {
  if (n < 3 || n % 2 == 0) {
    throw std::invalid_argument("odd-cycle game: n must be odd and >= 3 (got " +
                                std::to_string(n) + ")");
  }
  if (d < 1) throw std::invalid_argument("odd-cycle game: d must be >= 1");
  const auto un = static_cast<std::uint32_t>(n);
  std::vector<Draw> draws;
  for (std::uint32_t x = 0; x < un; ++x) {
    for (std::uint32_t t = 0; t < 2; ++t) {
      draws.push_back(Draw{x, (x + t) % un, Rational(1, 2 * n), t});
    }
  }
  GameSpec base("odd-cycle(" + std::to_string(n) + ")", un, un, 2, 1, un, std::move(draws));
  return tensor_power(base, d);
}

GameSpec make_chsh_game(int d, const std::optional<DeltaTable>& delta) {
  if (d < 1) throw std::invalid_argument("CHSH game: d must be >= 1");
  int twist[2][2] = {{0, 0}, {0, 0}};
  if (delta) {
    if (delta->size() != 2) throw std::invalid_argument("CHSH delta table must have 2 rows");
    for (std::size_t x = 0; x < 2; ++x) {
      if ((*delta)[x].size() != 2) throw std::invalid_argument("CHSH delta table rows must have 2 entries");
      for (std::size_t t = 0; t < 2; ++t) {
        int v = (*delta)[x][t];
        if (v != 0 && v != 1) throw std::invalid_argument("CHSH delta entries must be 0 or 1");
        twist[x][t] = v;
      }
    }
  }
  std::vector<Draw> draws;
  for (std::uint32_t x = 0; x < 2; ++x) {
    for (std::uint32_t y = 0; y < 2; ++y) {
      auto target = static_cast<std::uint32_t>((x & y) ^ static_cast<std::uint32_t>(twist[x][y]));
      draws.push_back(Draw{x, y, Rational(1, 4), target});
    }
  }
  GameSpec base(delta ? "chsh-twisted" : "chsh", 2, 2, 2, 1, 2, std::move(draws));
  return tensor_power(base, d);
}

Rational evaluate_strategy(const GameSpec& game, const DeterministicStrategy& s) {
  validate_strategy(game, s);
  std::int64_t won = 0;
  const auto& draws = game.draws();
  const auto& w = game.int_weights();
  for (std::size_t i = 0; i < draws.size(); ++i) {
    if (game.wins(draws[i], s.alice[draws[i].alice_q], s.bob[draws[i].bob_q])) won += w[i];
  }
  return Rational(won, game.denominator());
}

}  // namespace oddcycle::game
