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

#ifndef ODDCYCLE_GROWTH_HPP_
#define ODDCYCLE_GROWTH_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oddcycle/pearls.hpp"
#include "oddcycle/torus.hpp"

namespace oddcycle::pearls {

// Alice table that answers the mod-2 reduction of a consistent lift of each
// vertex; exists exactly when g blocks every odd cycle.
std::optional<AliceTable> labeling_strategy(const torus::TorusGraph& g);

// Answer bits differ exactly along the axis of the step from x to w.
bool step_consistent(const torus::TorusGraph& g, const AliceTable& alice, torus::Vertex x,
                     torus::Vertex w);

struct GrowthEvent {
  torus::Vertex point = 0;
  bool closing = false;             // the step back to x_0
  bool consistent_with_previous = true;
  bool consistent_with_all = true;  // pairwise check against every earlier point
  std::vector<int> winding;         // running sum of steps so far
  bool odd = false;                 // running winding has an odd entry
};

struct GrowthResult {
  torus::CyclePath cycle;  // vertices x_0..x_k (closed only when `closed`)
  bool closed = false;
  bool consistent = true;
  bool even = false;
  bool homotopy_zero = false;
  std::string reason;  // "closed", "max points", "no extension", "empty"
  std::vector<GrowthEvent> trace;
  // 1.5 n versus 2 n^2 (1 - v(S_A)); reported, never enforced.
  double isoperimetric_lhs = 0.0;
  double isoperimetric_rhs = 0.0;
  bool isoperimetric_holds = false;
};

struct GrowthOptions {
  // Refuse (throw) unless g blocks every odd cycle.
  bool strict = false;
};

// Grows a self-avoiding walk from a seeded start x_0 (chosen among vertices
// with a surviving edge), one point per step. At each step it closes back to
// x_0 when that is possible with at least three points; otherwise it takes
// the smallest unvisited consistent neighbor outside Q_y (a forward
// neighbor, L-infinity distance 1 from the current point y), falling back to
// the smallest unvisited consistent backward neighbor. The walk stops when
// it closes, reaches max_points, or has no admissible neighbor.
GrowthResult grow_consistent_cycle(const torus::TorusGraph& g, const AliceTable& alice,
                                   std::uint64_t seed, std::uint32_t max_points,
                                   const GrowthOptions& options = {});

}  // namespace oddcycle::pearls

#endif  // ODDCYCLE_GROWTH_HPP_
