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

#ifndef ODDCYCLE_CONTRACTION_HPP_
#define ODDCYCLE_CONTRACTION_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oddcycle/game.hpp"
#include "oddcycle/quantum.hpp"
#include "oddcycle/rational.hpp"
#include "oddcycle/rng.hpp"
#include "oddcycle/torus.hpp"

namespace oddcycle::experiments {

// Which draws (x, t) of the depth-`depth` odd-cycle game survive the removed
// edges of g. Question x sits at the torus vertex (x_0, ..., x_{depth-1}, 0,
// ...) and survives iff every edge on the path that steps +1 along each axis
// i with t_i = 1, in increasing axis order, is present.
struct ContractionMap {
  int n = 0;
  int depth = 0;
  std::vector<bool> surviving;  // indexed like make_odd_cycle_game(n, depth).draws()
  std::uint64_t preimage = 0;   // all draws
  std::uint64_t image = 0;      // surviving draws

  // preimage / image; infinite when nothing survives.
  double count_ratio() const;
  // 1: ratio below 1.25 (near identity); 2: ratio at least 2; 3: otherwise.
  // A ratio near 0 cannot occur because image <= preimage.
  int ratio_class() const;
};

ContractionMap contraction_map(const torus::TorusGraph& g, int depth);

enum class LawKind { kExactCuts, kUniformSize, kUniformVertices, kCutsPlusUniform };

// "exact-cuts", "uniform-size:a-b", "uniform-vertices:a-b" or
// "cuts-plus-uniform:a-b" with 0 <= a <= b.
struct RemovalLaw {
  LawKind kind = LawKind::kExactCuts;
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;

  static RemovalLaw parse(const std::string& text);
  std::string to_string() const;
};

struct ToricalSample {
  torus::TorusGraph graph;
  std::uint64_t attempts = 0;
};

inline constexpr std::uint64_t kMaxSamplingAttempts = 100000;

// Draws removal sets from the law until the residual graph blocks every odd
// cycle. Cuts sit at a uniformly random position per axis. Throws
// std::runtime_error after kMaxSamplingAttempts rejections.
ToricalSample sample_torical_graph(int n, int d, const RemovalLaw& law, Rng& rng);

// Value of the full game, shared by every sample with the same (n, depth).
struct FullValues {
  int n = 0;
  int depth = 0;
  double q_full = 0.0;
  Rational classical_ref{0};
  std::string classical_method;  // exhaustive / best-response / local-search lower bound

  bool operator==(const FullValues&) const = default;
};

struct ValueOptions {
  quantum::OptimizeOptions optimize;
  std::uint64_t search_iterations = 1'000'000;

  bool operator==(const ValueOptions&) const = default;
};

FullValues full_values(int n, int depth, const ValueOptions& options = {});

struct RestrictedValues {
  double q_restricted = 0.0;
  double q_full = 0.0;
  double classical_ref = 0.0;
  std::uint64_t image = 0;
  std::uint64_t preimage = 0;
  bool degenerate = false;  // nothing survives
};

// Heuristic quantum value of the surviving subgame. The search starts from
// the embedded mod-2 labeling strategy when g blocks every odd cycle and
// from the canonical strategy otherwise.
RestrictedValues restricted_values(const torus::TorusGraph& g, const FullValues& full,
                                   const ValueOptions& options = {});

// (q_restricted - q_full) / classical_ref. Throws when classical_ref <= 0.
double ratio_R(const RestrictedValues& v);
// |q_full - q_restricted| / q_restricted, the variant with the restricted
// quantum value in the denominator. Throws when q_restricted <= 0.
double ratio_R_quantum(const RestrictedValues& v);

}  // namespace oddcycle::experiments

#endif  // ODDCYCLE_CONTRACTION_HPP_
