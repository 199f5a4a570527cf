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

#ifndef ODDCYCLE_CLASSICAL_HPP_
#define ODDCYCLE_CLASSICAL_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oddcycle/game.hpp"
#include "oddcycle/rational.hpp"

namespace oddcycle::game {

enum class ValueMethod { kExhaustive, kAliceExhaustiveBestResponse, kLocalSearch };
enum class ValueStatus { kOk, kIntractable };

std::string to_string(ValueMethod m);
std::string to_string(ValueStatus s);

struct ValueReport {
  ValueStatus status = ValueStatus::kOk;
  ValueMethod method = ValueMethod::kExhaustive;
  // Exact value of the witness. Zero when status is intractable.
  Rational value{0};
  std::optional<DeterministicStrategy> witness;
  std::uint64_t evaluations = 0;
  // Human-readable reason attached to refusals.
  std::string note;

  double value_double() const { return to_double(value); }
  bool operator==(const ValueReport&) const = default;
};

enum class ExactMode { kFull, kAliceBestResponse };

struct ExactOptions {
  // Maximum number of strategies visited: Alice-Bob pairs in full mode,
  // Alice tables in best-response mode.
  std::uint64_t budget = std::uint64_t{1} << 26;
  unsigned threads = 0;
};

// Exact classical value. Returns status kIntractable (never throws) when the
// search space exceeds the budget.
ValueReport classical_value_exact(const GameSpec& game, ExactMode mode,
                                  const ExactOptions& options = {});

// Bob's best answer per question against a fixed Alice table; ties go to
// the smallest answer.
std::vector<std::uint32_t> best_response_bob(const GameSpec& game,
                                             const std::vector<std::uint32_t>& alice);

struct SearchOptions {
  // Non-improving moves tolerated before the current table is perturbed.
  std::uint64_t patience = 400;
  // Independent chains; the iteration budget is split between them. The
  // result does not depend on the thread count.
  unsigned chains = 4;
  unsigned threads = 0;
};

// Seeded iterated local search over Alice tables with Bob always playing a
// best response. Iteration 1 scores the random initial table; later
// iterations each reassign one Alice answer. Throws if iterations == 0.
ValueReport classical_value_search(const GameSpec& game, std::uint64_t seed,
                                   std::uint64_t iterations, const SearchOptions& options = {});

struct DecayDiagnostic {
  int n = 0;
  int d = 0;
  double value = 0.0;
  double gap = 0.0;  // 1 - value
  // sqrt(d) / (n sqrt(ln d)); absent for d = 1 where ln d vanishes.
  std::optional<double> bound_quantity;
  double gap_over_bound = 0.0;
  bool in_regime = true;  // d <= n^2 ln n
  std::string flag;       // "", "regime boundary" or "outside regime"
};

DecayDiagnostic repetition_decay_check(int n, int d, double value);

}  // namespace oddcycle::game

#endif  // ODDCYCLE_CLASSICAL_HPP_
