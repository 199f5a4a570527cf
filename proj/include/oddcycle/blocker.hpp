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

#ifndef ODDCYCLE_BLOCKER_HPP_
#define ODDCYCLE_BLOCKER_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "oddcycle/torus.hpp"

namespace oddcycle::torus {

enum class BlockerMethod { kExact, kHeuristic };

std::string to_string(BlockerMethod m);

struct BlockerOptions {
  // Search nodes allowed per root branch in exact mode.
  std::uint64_t node_budget = 2'000'000;
  // Seed the exact search with the one-cut-per-axis construction.
  bool initial_incumbent = true;
  // Heuristic restarts.
  unsigned restarts = 16;
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

struct BlockerResult {
  bool refused = false;
  bool exact = false;
  std::uint32_t size = 0;
  std::vector<EdgeId> edges;  // sorted
  std::uint64_t nodes = 0;
  std::uint32_t lower_bound = 0;
  std::string note;
};

// Edges crossing the hyperplane x_axis = n-1 -> 0 for every axis.
std::vector<EdgeId> cut_blocker(const TorusGraph& g);

// Axis lines with no removed edge, counted only when such a line is a
// forbidden cycle in the given mode.
std::uint32_t intact_line_bound(const TorusGraph& g, BlockMode mode);

// Smallest removal set containing the edges already removed from g0 that
// blocks every forbidden cycle. Exact mode is branch and bound over the
// edges of witness cycles with the intact-line lower bound; it returns
// refused = true when a branch exceeds the node budget. Heuristic mode
// returns the smallest of several seeded minimal blockers (an upper bound).
BlockerResult min_blocker(const TorusGraph& g0, BlockMode mode, BlockerMethod method,
                          const BlockerOptions& options = {});

}  // namespace oddcycle::torus

#endif  // ODDCYCLE_BLOCKER_HPP_
