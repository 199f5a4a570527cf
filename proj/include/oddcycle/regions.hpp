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

#ifndef ODDCYCLE_REGIONS_HPP_
#define ODDCYCLE_REGIONS_HPP_

#include <string>
#include <vector>

#include "oddcycle/rational.hpp"
#include "oddcycle/torus.hpp"

namespace oddcycle::torus {

enum class RegionKind { kSection, kTube, kCube };

std::string to_string(RegionKind k);

struct RegionSet {
  RegionKind kind = RegionKind::kTube;
  int axis = 0;  // loop axis of a tube, slicing axis of a section
  std::vector<Vertex> members;  // sorted
  std::vector<Vertex> marked;   // sorted subset of members

  bool operator==(const RegionSet&) const = default;
};

// Band wrapping the axis loop: vertices whose every other coordinate j lies
// in {offset[j], ..., offset[j] + width - 1} mod n. offset[axis] is ignored.
RegionSet make_tube(const TorusGraph& g, int axis, const std::vector<int>& offset, int width);

// Slice of a tube at one position along its loop axis.
RegionSet make_section(const TorusGraph& g, const RegionSet& tube, int position);

// Axis-aligned block [corner, corner + sides) with wraparound.
RegionSet make_cube(const TorusGraph& g, const std::vector<int>& corner, const std::vector<int>& sides);

// Members with no removed incident edge.
std::vector<Vertex> marked_vertices(const TorusGraph& g, const RegionSet& region);

// Copy of region with `marked` replaced by marked_vertices(g, region).
RegionSet with_marking(const TorusGraph& g, const RegionSet& region);

// Throws unless marked is a sorted subset of the sorted members and every
// vertex lies in the grid.
void validate_region(const TorusGraph& g, const RegionSet& region);

struct RegionStats {
  std::size_t degree = 0;        // member count
  std::size_t distribution = 0;  // marked count
  Rational relative{0};          // marked / members
};

// One entry per region. Throws on an empty region.
std::vector<RegionStats> region_stats(const std::vector<RegionSet>& regions);

struct GiantReport {
  bool is_giant = false;
  std::vector<Vertex> component;  // largest marked component, sorted
  Rational ratio{0};              // |component| / |tube|
  std::size_t component_count = 0;
  // Every marked component meets the largest one (true iff at most one).
  bool all_components_meet_giant = true;
};

// Connected components of the tube's marked vertices using surviving edges
// between marked tube vertices. Ties in size go to the component holding
// the smallest vertex.
GiantReport giant_detect(const RegionSet& tube, const TorusGraph& g,
                         Rational threshold = Rational(95, 100));

}  // namespace oddcycle::torus

#endif  // ODDCYCLE_REGIONS_HPP_
