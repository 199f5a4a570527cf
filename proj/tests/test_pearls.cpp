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

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "oddcycle/blocker.hpp"
#include "oddcycle/classical.hpp"
#include "oddcycle/game.hpp"
#include "oddcycle/growth.hpp"
#include "oddcycle/pearls.hpp"
#include "oddcycle/rng.hpp"
#include "oracles.hpp"

namespace oddcycle::pearls {
namespace {

// Written out from the definition: per coordinate, answer bits differ
// exactly when the cyclic distance between the two questions is odd.
bool consistent_pair(const AliceTable& alice, std::uint32_t x, std::uint32_t w, int n, int d) {
  const auto a = oracle::digits(x, static_cast<std::uint32_t>(n), d);
  const auto b = oracle::digits(w, static_cast<std::uint32_t>(n), d);
  for (int i = 0; i < d; ++i) {
    int diff = static_cast<int>(a[static_cast<std::size_t>(i)]) - static_cast<int>(b[static_cast<std::size_t>(i)]);
    diff = ((diff % n) + n) % n;
    const int cyclic = std::min(diff, n - diff);
    const unsigned bits = ((alice[x] ^ alice[w]) >> i) & 1U;
    if (bits != static_cast<unsigned>(cyclic % 2)) return false;
  }
  return true;
}

AliceTable random_table(int n, int d, Rng& rng) {
  AliceTable t(oracle::pow_u(static_cast<std::uint32_t>(n), d));
  for (auto& a : t) a = static_cast<std::uint32_t>(uniform_index(rng, std::uint64_t{1} << d));
  return t;
}

Rational best_response_value(const AliceTable& alice, int n, int d) {
  const auto game = game::make_odd_cycle_game(n, d);
  game::DeterministicStrategy s;
  s.alice = alice;
  s.bob = game::best_response_bob(game, alice);
  return game::evaluate_strategy(game, s);
}

TEST(QSet, Examples) {
  EXPECT_EQ(q_set(0, 3, 1), (std::vector<std::uint32_t>{0, 2}));
  EXPECT_EQ(q_set(1, 3, 1), (std::vector<std::uint32_t>{1, 0}));
  // y = (0, 0) on [3]^2: t = (0,0), (1,0), (0,1), (1,1).
  EXPECT_EQ(q_set(0, 3, 2), (std::vector<std::uint32_t>{0, 2, 6, 8}));
}

TEST(MaxRegion, ParityStrategyExamples) {
  const AliceTable mod2 = {0, 1, 0};
  const auto r0 = max_consistent_region(mod2, 0, 3, 1);
  EXPECT_EQ(r0.members.size(), 1U);
  EXPECT_EQ(r0.members, (std::vector<std::uint32_t>{0}));
  EXPECT_FALSE(region_consistent(mod2, {0, 2}, 3, 1));
  const auto r1 = max_consistent_region(mod2, 1, 3, 1);
  EXPECT_EQ(r1.members, (std::vector<std::uint32_t>{0, 1}));
  EXPECT_EQ(max_consistent_region(mod2, 2, 3, 1).members.size(), 2U);
  EXPECT_TRUE(region_consistent(mod2, {1}, 3, 1));
  EXPECT_EQ(value_via_regions(mod2, 3, 1), Rational(5, 6));
}

TEST(MaxRegion, MatchesSubsetEnumeration) {
  Rng rng = make_rng(11, 0);
  for (auto [n, d] : {std::pair{3, 1}, std::pair{3, 2}, std::pair{5, 2}, std::pair{3, 3}, std::pair{5, 4}}) {
    for (int trial = 0; trial < 6; ++trial) {
      const auto alice = random_table(n, d, rng);
      const auto size = static_cast<std::uint32_t>(alice.size());
      for (std::uint32_t y = 0; y < size; y += std::max<std::uint32_t>(1, size / 20)) {
        const auto region = max_consistent_region(alice, y, n, d);
        const auto expect = oracle::max_pairwise_subset(
            q_set(y, n, d), [&](std::uint32_t a, std::uint32_t b) { return consistent_pair(alice, a, b, n, d); });
        EXPECT_EQ(region.members, expect) << n << " " << d << " " << y;
        EXPECT_EQ(region.center, y);
        EXPECT_TRUE(region_consistent(alice, region.members, n, d));
      }
    }
  }
}

TEST(MaxRegion, DepthCap) {
  EXPECT_THROW(max_consistent_region(AliceTable(1), 0, 1, kMaxRegionDepth + 1), std::invalid_argument);
}

TEST(ValueViaRegions, AllSingleCoordinateStrategies) {
  for (std::uint32_t s = 0; s < 8; ++s) {
    const AliceTable alice = {s & 1U, (s >> 1) & 1U, (s >> 2) & 1U};
    EXPECT_EQ(value_via_regions(alice, 3, 1), best_response_value(alice, 3, 1)) << s;
  }
}

TEST(ValueViaRegions, SeededTwoCoordinateStrategies) {
  Rng rng = make_rng(2024, 2);
  for (int trial = 0; trial < 100; ++trial) {
    const auto alice = random_table(3, 2, rng);
    const double a = to_double(value_via_regions(alice, 3, 2));
    const double b = to_double(best_response_value(alice, 3, 2));
    EXPECT_NEAR(a, b, 1e-12);
  }
  AliceTable parity(9);
  for (std::uint32_t x = 0; x < 9; ++x) parity[x] = (x % 3 % 2) | ((x / 3 % 2) << 1);
  EXPECT_EQ(value_via_regions(parity, 3, 2), best_response_value(parity, 3, 2));
  EXPECT_EQ(value_via_regions(parity, 3, 2), Rational(25, 36));
}

TEST(ValueViaRegions, ConsistentStrategyOnEvenCycleIsOne) {
  // On C_4 the parity table is consistent everywhere, so every region is full.
  AliceTable parity(16);
  for (std::uint32_t x = 0; x < 16; ++x) parity[x] = (x % 4 % 2) | ((x / 4 % 2) << 1);
  EXPECT_EQ(value_via_regions(parity, 4, 2), Rational(1));
}

TEST(Pearl, WellFormed) {
  Rng rng = make_rng(5, 5);
  const auto alice = random_table(5, 2, rng);
  const auto pearl = build_pearl(alice, 5, 2);
  EXPECT_EQ(pearl.regions.size(), 25U);
  EXPECT_TRUE(pearl_well_formed(pearl, alice, 5, 2, true));
  auto broken = pearl;
  broken.regions[3].members.push_back(24);
  std::sort(broken.regions[3].members.begin(), broken.regions[3].members.end());
  EXPECT_FALSE(pearl_well_formed(broken, alice, 5, 2, false));
}

torus::TorusGraph torical_graph(int n, std::uint64_t seed) {
  torus::TorusGraph g(n, 2);
  for (auto e : torus::cut_blocker(g)) g.remove_id(e);
  Rng rng = make_rng(seed, 77);
  const auto extra = uniform_index(rng, 6);
  for (std::uint64_t i = 0; i < extra; ++i) {
    const auto e = static_cast<torus::EdgeId>(uniform_index(rng, g.edge_slots()));
    if (g.alive(e)) g.remove_id(e);
  }
  return g;
}

TEST(Growth, CompletedCyclesOnToricalGraphsAreEven) {
  int closed = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = torical_graph(5, seed);
    const auto alice = labeling_strategy(g);
    ASSERT_TRUE(alice.has_value());
    const auto r = grow_consistent_cycle(g, *alice, seed, 200, GrowthOptions{true});
    EXPECT_TRUE(r.consistent);
    if (!r.closed) continue;
    ++closed;
    const auto w = torus::winding_and_parity(g, r.cycle.vertices);
    EXPECT_EQ(w.winding, r.cycle.winding);
    EXPECT_FALSE(w.odd);
    EXPECT_TRUE(r.even);
    EXPECT_EQ(r.homotopy_zero, !w.nontrivial);
  }
  EXPECT_GT(closed, 0);
}

TEST(Growth, EdgeCases) {
  torus::TorusGraph g(5, 2);
  const AliceTable zeros(25, 0);
  const auto none = grow_consistent_cycle(g, zeros, 1, 0);
  EXPECT_TRUE(none.cycle.vertices.empty());
  EXPECT_TRUE(none.consistent);
  EXPECT_EQ(none.reason, "empty");

  torus::TorusGraph bare(5, 2);
  for (torus::EdgeId e = 0; e < bare.edge_slots(); ++e) bare.remove_id(e);
  const auto stuck = grow_consistent_cycle(bare, zeros, 1, 10);
  EXPECT_TRUE(stuck.cycle.vertices.empty());
  EXPECT_EQ(stuck.reason, "no extension");

  // With all-zero answers no step is consistent, so the walk cannot leave x_0.
  const auto lonely = grow_consistent_cycle(g, zeros, 1, 10);
  EXPECT_EQ(lonely.cycle.vertices.size(), 1U);
  EXPECT_EQ(lonely.reason, "no extension");

  EXPECT_THROW(grow_consistent_cycle(g, zeros, 1, 10, GrowthOptions{true}), std::invalid_argument);
  EXPECT_THROW(grow_consistent_cycle(g, AliceTable(3), 1, 10), std::invalid_argument);
  EXPECT_FALSE(labeling_strategy(g).has_value());
}

TEST(Growth, IsoperimetricDiagnosticIsReported) {
  const auto g = torical_graph(5, 3);
  const auto alice = *labeling_strategy(g);
  const auto r = grow_consistent_cycle(g, alice, 3, 50);
  EXPECT_DOUBLE_EQ(r.isoperimetric_lhs, 7.5);
  EXPECT_DOUBLE_EQ(r.isoperimetric_rhs, 50.0 * (1.0 - to_double(value_via_regions(alice, 5, 2))));
  EXPECT_EQ(r.isoperimetric_holds, r.isoperimetric_lhs <= r.isoperimetric_rhs);
}

}  // namespace
}  // namespace oddcycle::pearls
