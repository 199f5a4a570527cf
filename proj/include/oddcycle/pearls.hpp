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

#ifndef ODDCYCLE_PEARLS_HPP_
#define ODDCYCLE_PEARLS_HPP_

#include <cstdint>
#include <vector>

#include "oddcycle/rational.hpp"

namespace oddcycle::pearls {

// Alice's table over [n]^d (mixed radix, coordinate 0 least significant);
// answer bit i belongs to coordinate i.
using AliceTable = std::vector<std::uint32_t>;

inline constexpr int kMaxRegionDepth = 20;

// {(y - t) mod n : t in {0,1}^d}, listed by increasing t read as a bitmask.
std::vector<std::uint32_t> q_set(std::uint32_t y, int n, int d);

// Pairwise check: for all x, x' in members and every coordinate i, the
// answer bits differ exactly when the wrapped difference x_i - x'_i is odd.
bool region_consistent(const AliceTable& alice, const std::vector<std::uint32_t>& members, int n, int d);

struct ConsistentRegion {
  std::uint32_t center = 0;
  std::vector<std::uint32_t> members;  // sorted

  bool operator==(const ConsistentRegion&) const = default;
};

// Largest consistent subset of Q_y, ties broken by the lexicographically
// smallest sorted member list. Inside Q_y two questions y - t and y - t' are
// consistent exactly when S(y - t) ^ t == S(y - t') ^ t', so the candidates
// are the classes of that key. Throws when d exceeds kMaxRegionDepth.
ConsistentRegion max_consistent_region(const AliceTable& alice, std::uint32_t y, int n, int d);

struct Pearl {
  std::vector<ConsistentRegion> regions;  // indexed by y
  bool consistent = true;
};

Pearl build_pearl(const AliceTable& alice, int n, int d);

// R_y is inside Q_y for every y, and (when require_consistent) every region
// passes region_consistent.
bool pearl_well_formed(const Pearl& pearl, const AliceTable& alice, int n, int d,
                       bool require_consistent);

// sum_y |R_y| / (n^d 2^d) with maximum consistent regions.
Rational value_via_regions(const AliceTable& alice, int n, int d);

}  // namespace oddcycle::pearls

#endif  // ODDCYCLE_PEARLS_HPP_
