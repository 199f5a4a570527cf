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

#include "oddcycle/classical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "oddcycle/parallel.hpp"
#include "oddcycle/rng.hpp"

namespace oddcycle::game {

std::string to_string(ValueMethod m) {
  switch (m) {
    case ValueMethod::kExhaustive: return "exhaustive";
    case ValueMethod::kAliceExhaustiveBestResponse: return "alice-exhaustive-best-response";
    case ValueMethod::kLocalSearch: return "local-search";
  }
  return "unknown";
}

std::string to_string(ValueStatus s) {
  return s == ValueStatus::kOk ? "ok" : "intractable";
}

namespace {

// Flattened view of a game tuned for repeated scoring of Alice tables.
class Scorer {
 public:
  explicit Scorer(const GameSpec& game)
      : game_(game), k_(game.answer_count()), xor_(game.is_xor()) {
    const auto& draws = game.draws();
    if (!xor_) {
      win_.resize(draws.size() * k_ * k_);
      for (std::size_t i = 0; i < draws.size(); ++i) {
        for (std::uint32_t a = 0; a < k_; ++a) {
          for (std::uint32_t b = 0; b < k_; ++b) {
            win_[(i * k_ + a) * k_ + b] = game.wins(draws[i], a, b) ? 1 : 0;
          }
        }
      }
    }
  }

  std::uint32_t k() const { return k_; }

  // Adds draw i's contribution to the per-answer score row of its Bob question.
  void accumulate(std::uint32_t i, std::uint32_t a, std::int64_t sign, std::int64_t* row) const {
    const std::int64_t w = sign * game_.int_weights()[i];
    if (xor_) {
      row[a ^ game_.draws()[i].target] += w;
      return;
    }
    const std::uint8_t* line = &win_[(static_cast<std::size_t>(i) * k_ + a) * k_];
    for (std::uint32_t b = 0; b < k_; ++b) {
      if (line[b]) row[b] += w;
    }
  }

  // Total integer score of Alice's table under Bob's best response.
  std::int64_t best_response_total(const std::vector<std::uint32_t>& alice,
                                    std::vector<std::int64_t>& row,
                                    std::vector<std::uint32_t>* bob_out) const {
    std::int64_t total = 0;
    const auto& by_bob = game_.draws_by_bob();
    row.assign(k_, 0);
    for (std::uint32_t y = 0; y < by_bob.size(); ++y) {
      std::fill(row.begin(), row.end(), 0);
      for (std::uint32_t i : by_bob[y]) accumulate(i, alice[game_.draws()[i].alice_q], 1, row.data());
      std::uint32_t arg = 0;
      for (std::uint32_t b = 1; b < k_; ++b) {
        if (row[b] > row[arg]) arg = b;
      }
      total += row[arg];
      if (bob_out) (*bob_out)[y] = arg;
    }
    return total;
  }

  std::int64_t pair_total(const std::vector<std::uint32_t>& alice,
                          const std::vector<std::uint32_t>& bob) const {
    std::int64_t total = 0;
    const auto& draws = game_.draws();
    for (std::size_t i = 0; i < draws.size(); ++i) {
      const std::uint32_t a = alice[draws[i].alice_q], b = bob[draws[i].bob_q];
      const bool won = xor_ ? ((a ^ b) == draws[i].target) : win_[(i * k_ + a) * k_ + b] != 0;
      if (won) total += game_.int_weights()[i];
    }
    return total;
  }

 private:
  const GameSpec& game_;
  std::uint32_t k_;
  bool xor_;
  std::vector<std::uint8_t> win_;
};

// k^m, or nullopt when it exceeds limit.
std::optional<std::uint64_t> bounded_pow(std::uint64_t k, std::uint64_t m, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < m; ++i) {
    if (r > limit / k) return std::nullopt;
    r *= k;
  }
  return r;
}

void decode_table(std::uint64_t index, std::uint32_t k, std::vector<std::uint32_t>& table) {
  for (auto& v : table) {
    v = static_cast<std::uint32_t>(index % k);
    index /= k;
  }
}

// Odometer increment; returns false on wraparound.
bool advance_table(std::uint32_t k, std::vector<std::uint32_t>& table) {
  for (auto& v : table) {
    if (++v < k) return true;
    v = 0;
  }
  return false;
}

ValueReport refusal(ValueMethod method, std::string note) {
  ValueReport r;
  r.status = ValueStatus::kIntractable;
  r.method = method;
  r.note = std::move(note);
  return r;
}

struct ChunkBest {
  std::int64_t total = -1;
  std::uint64_t alice_index = 0;
  std::uint64_t bob_index = 0;
};

}  // namespace

std::vector<std::uint32_t> best_response_bob(const GameSpec& game,
                                             const std::vector<std::uint32_t>& alice) {
  if (alice.size() != game.alice_count()) {
    throw std::invalid_argument("best_response_bob: Alice table is not total");
  }
  for (auto a : alice) {
    if (a >= game.answer_count()) throw std::invalid_argument("best_response_bob: answer out of range");
  }
  Scorer scorer(game);
  std::vector<std::int64_t> row;
  std::vector<std::uint32_t> bob(game.bob_count(), 0);
  scorer.best_response_total(alice, row, &bob);
  return bob;
}

ValueReport classical_value_exact(const GameSpec& game, ExactMode mode,
                                  const ExactOptions& options) {
  const std::uint32_t k = game.answer_count();
  const ValueMethod method = mode == ExactMode::kFull ? ValueMethod::kExhaustive
                                                      : ValueMethod::kAliceExhaustiveBestResponse;
  const auto alice_tables = bounded_pow(k, game.alice_count(), options.budget);
  if (!alice_tables) {
    return refusal(method, "Alice has more than " + std::to_string(options.budget) +
                               " tables; use local search");
  }
  std::optional<std::uint64_t> bob_tables = std::uint64_t{1};
  if (mode == ExactMode::kFull) {
    bob_tables = bounded_pow(k, game.bob_count(), options.budget / *alice_tables);
    if (!bob_tables) {
      return refusal(method, "strategy pairs exceed the budget of " +
                                 std::to_string(options.budget) +
                                 "; use alice-best-response mode or local search");
    }
  }

  Scorer scorer(game);
  const unsigned threads = options.threads == 0 ? default_threads() : options.threads;
  std::vector<ChunkBest> best(std::max(1u, threads));
  parallel_ranges(*alice_tables, threads, [&](unsigned chunk, std::uint64_t begin,
                                              std::uint64_t end) {
    ChunkBest local;
    std::vector<std::uint32_t> alice(game.alice_count());
    std::vector<std::uint32_t> bob(game.bob_count());
    std::vector<std::int64_t> row;
    decode_table(begin, k, alice);
    for (std::uint64_t ai = begin; ai < end; ++ai) {
      if (mode == ExactMode::kFull) {
        std::fill(bob.begin(), bob.end(), 0);
        for (std::uint64_t bi = 0; bi < *bob_tables; ++bi) {
          const std::int64_t t = scorer.pair_total(alice, bob);
          if (t > local.total) local = {t, ai, bi};
          advance_table(k, bob);
        }
      } else {
        const std::int64_t t = scorer.best_response_total(alice, row, nullptr);
        if (t > local.total) local = {t, ai, 0};
      }
      advance_table(k, alice);
    }
    best[chunk] = local;
  });

  // Chunks cover increasing index ranges, so the first strict maximum is the
  // lexicographically first optimal table regardless of the thread count.
  ChunkBest top;
  for (const auto& b : best) {
    if (b.total > top.total) top = b;
  }
  DeterministicStrategy witness{std::vector<std::uint32_t>(game.alice_count()),
                                std::vector<std::uint32_t>(game.bob_count())};
  decode_table(top.alice_index, k, witness.alice);
  if (mode == ExactMode::kFull) {
    decode_table(top.bob_index, k, witness.bob);
  } else {
    witness.bob = best_response_bob(game, witness.alice);
  }
  ValueReport r;
  r.method = method;
  r.value = Rational(top.total, game.denominator());
  r.evaluations = *alice_tables * *bob_tables;
  r.witness = std::move(witness);
  return r;
}

namespace {

struct ChainResult {
  std::int64_t total = -1;
  std::vector<std::uint32_t> alice;
};

ChainResult run_chain(const GameSpec& game, const Scorer& scorer, std::uint64_t seed,
                      unsigned chain, std::uint64_t iterations, std::uint64_t patience) {
  const std::uint32_t k = game.answer_count();
  const std::uint32_t qa = game.alice_count();
  const std::uint32_t qb = game.bob_count();
  const auto& draws = game.draws();
  Rng rng = make_rng(seed, chain);

  // Bob questions touched by each Alice question, without repeats.
  std::vector<std::vector<std::uint32_t>> touched(qa);
  for (std::uint32_t x = 0; x < qa; ++x) {
    for (std::uint32_t i : game.draws_by_alice()[x]) touched[x].push_back(draws[i].bob_q);
    std::sort(touched[x].begin(), touched[x].end());
    touched[x].erase(std::unique(touched[x].begin(), touched[x].end()), touched[x].end());
  }

  std::vector<std::uint32_t> alice(qa);
  for (auto& a : alice) a = static_cast<std::uint32_t>(uniform_index(rng, k));

  std::vector<std::int64_t> score(static_cast<std::size_t>(qb) * k, 0);
  std::vector<std::int64_t> row_max(qb, 0);
  std::int64_t total = 0;
  auto rebuild = [&] {
    std::fill(score.begin(), score.end(), 0);
    for (std::uint32_t i = 0; i < draws.size(); ++i) {
      scorer.accumulate(i, alice[draws[i].alice_q], 1, &score[draws[i].bob_q * k]);
    }
    total = 0;
    for (std::uint32_t y = 0; y < qb; ++y) {
      row_max[y] = *std::max_element(score.begin() + y * k, score.begin() + (y + 1) * k);
      total += row_max[y];
    }
  };
  auto set_answer = [&](std::uint32_t x, std::uint32_t a) {
    for (std::uint32_t i : game.draws_by_alice()[x]) {
      scorer.accumulate(i, alice[x], -1, &score[draws[i].bob_q * k]);
      scorer.accumulate(i, a, 1, &score[draws[i].bob_q * k]);
    }
    alice[x] = a;
    for (std::uint32_t y : touched[x]) {
      const std::int64_t m = *std::max_element(score.begin() + y * k, score.begin() + (y + 1) * k);
      total += m - row_max[y];
      row_max[y] = m;
    }
  };

  rebuild();
  ChainResult best{total, alice};
  std::uint64_t stall = 0;
  for (std::uint64_t it = 1; it < iterations; ++it) {
    const auto x = static_cast<std::uint32_t>(uniform_index(rng, qa));
    const std::uint32_t original = alice[x];
    std::int64_t best_move = std::numeric_limits<std::int64_t>::min();
    std::uint32_t choice = original;
    std::uint64_t ties = 0;
    for (std::uint32_t a = 0; a < k; ++a) {
      set_answer(x, a);
      if (total > best_move) {
        best_move = total;
        choice = a;
        ties = 1;
      } else if (total == best_move && uniform_index(rng, ++ties) == 0) {
        choice = a;
      }
    }
    set_answer(x, choice);
    if (total > best.total) {
      best.total = total;
      best.alice = alice;
      stall = 0;
    } else if (++stall >= patience) {
      alice = best.alice;
      const std::uint64_t flips = 1 + uniform_index(rng, std::min<std::uint64_t>(qa, 4));
      for (std::uint64_t f = 0; f < flips; ++f) {
        alice[uniform_index(rng, qa)] = static_cast<std::uint32_t>(uniform_index(rng, k));
      }
      rebuild();
      stall = 0;
    }
  }
  return best;
}

}  // namespace

ValueReport classical_value_search(const GameSpec& game, std::uint64_t seed,
                                   std::uint64_t iterations, const SearchOptions& options) {
  if (iterations == 0) throw std::invalid_argument("classical_value_search: iterations must be >= 1");
  if (options.chains == 0) throw std::invalid_argument("classical_value_search: chains must be >= 1");
  Scorer scorer(game);
  const auto chains =
      static_cast<unsigned>(std::min<std::uint64_t>(options.chains, iterations));
  std::vector<ChainResult> results(chains);
  const unsigned threads = options.threads == 0 ? default_threads() : options.threads;
  parallel_ranges(chains, threads, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t c = begin; c < end; ++c) {
      const std::uint64_t share = iterations / chains + (c < iterations % chains ? 1 : 0);
      results[c] = run_chain(game, scorer, seed, static_cast<unsigned>(c), share,
                             std::max<std::uint64_t>(1, options.patience));
    }
  });
  std::size_t top = 0;
  for (std::size_t c = 1; c < results.size(); ++c) {
    if (results[c].total > results[top].total) top = c;
  }
  DeterministicStrategy witness{results[top].alice, best_response_bob(game, results[top].alice)};
  ValueReport r;
  r.method = ValueMethod::kLocalSearch;
  r.value = evaluate_strategy(game, witness);
  r.witness = std::move(witness);
  r.evaluations = iterations;
  r.note = "lower bound";
  return r;
}

DecayDiagnostic repetition_decay_check(int n, int d, double value) {
  if (n < 1) throw std::invalid_argument("repetition_decay_check: n must be >= 1");
  if (d < 1) throw std::invalid_argument("repetition_decay_check: d must be >= 1");
  if (!(value >= 0.0 && value <= 1.0)) {
    throw std::invalid_argument("repetition_decay_check: value must lie in [0,1]");
  }
  DecayDiagnostic r;
  r.n = n;
  r.d = d;
  r.value = value;
  r.gap = 1.0 - value;
  const double nn = n;
  r.in_regime = d <= nn * nn * std::log(nn);
  if (d == 1) {
    r.flag = "regime boundary";
    return r;
  }
  r.bound_quantity = std::sqrt(static_cast<double>(d)) / (nn * std::sqrt(std::log(static_cast<double>(d))));
  r.gap_over_bound = r.gap / *r.bound_quantity;
  if (!r.in_regime) r.flag = "outside regime";
  return r;
}

}  // namespace oddcycle::game
