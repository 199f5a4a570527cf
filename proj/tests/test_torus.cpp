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

#include <functional>
#include <stdexcept>

#include "oddcycle/blocker.hpp"
#include "oddcycle/rng.hpp"
#include "oddcycle/torus.hpp"
#include "oracles.hpp"

namespace oddcycle::torus {
namespace {

TEST(WrappedDifference, SymmetricRange) {
  EXPECT_EQ(wrapped_difference(0, 4, 5), -1);
  EXPECT_EQ(wrapped_difference(4, 0, 5), 1);
  EXPECT_EQ(wrapped_difference(0, 2, 5), 2);
  EXPECT_EQ(wrapped_difference(0, 3, 5), -2);
  EXPECT_EQ(wrapped_difference(0, 2, 4), 2);
  EXPECT_EQ(wrapped_difference(2, 0, 4), 2);
  EXPECT_EQ(wrapped_difference(1, 0, 2), 1);
  for (int n = 2; n <= 7; ++n) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        const int r = wrapped_difference(a, b, n);
        EXPECT_LE(r, n / 2);
        EXPECT_GT(r, -(n / 2) - (n % 2 == 0 ? 0 : 1));
        EXPECT_EQ(((a + r) % n + n) % n, b);
      }
    }
  }
}

TEST(TorusGraph, IndexingAndRemoval) {
  TorusGraph g(4, 3);
  EXPECT_EQ(g.vertex_count(), 64U);
  EXPECT_EQ(g.edge_slots(), 192U);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    EXPECT_EQ(g.vertex(g.coords(v)), v);
    for (int axis = 0; axis < 3; ++axis) {
      const auto e = g.edge(g.edge_id(v, axis));
      EXPECT_EQ(e.v, v);
      EXPECT_EQ(e.axis, axis);
      EXPECT_EQ(g.neighbor(g.neighbor(v, axis, 1), axis, -1), v);
      EXPECT_EQ(g.edge_towards(g.neighbor(v, axis, 1), axis, -1), g.edge_id(v, axis));
    }
  }
  EXPECT_EQ(g.neighbor(g.vertex({3, 0, 0}), 0, 1), g.vertex({0, 0, 0}));
  g.remove(Edge{5, 1});
  EXPECT_TRUE(g.is_removed(g.edge_id(5, 1)));
  EXPECT_THROW(g.remove(Edge{5, 1}), std::invalid_argument);
  EXPECT_EQ(g.removed_count(), 1U);
  g.restore_id(g.edge_id(5, 1));
  EXPECT_EQ(g.removed_count(), 0U);
  g.remove_incident(0);
  EXPECT_EQ(g.removed_count(), 6U);
  EXPECT_TRUE(g.has_removed_incident(g.neighbor(0, 2, -1)));
  EXPECT_TRUE(g.steps_from(0).empty());
  EXPECT_EQ(g.surviving_edge_count(), 186U);
  EXPECT_THROW(TorusGraph(1, 2), std::invalid_argument);
  EXPECT_THROW(TorusGraph(3, 0), std::invalid_argument);
}

TEST(TorusGraph, StepOrder) {
  TorusGraph g(5, 2);
  const auto steps = g.steps_from(7);
  ASSERT_EQ(steps.size(), 4U);
  EXPECT_EQ(steps[0].axis, 0);
  EXPECT_EQ(steps[0].dir, 1);
  EXPECT_EQ(steps[1].dir, -1);
  EXPECT_EQ(steps[2].axis, 1);
}

TEST(Winding, LoopsAndContractibleSquares) {
  TorusGraph g(3, 2);
  const auto loop = winding_and_parity(g, {0, 1, 2, 0});
  EXPECT_EQ(loop.winding, (std::vector<int>{3, 0}));
  EXPECT_TRUE(loop.nontrivial);
  EXPECT_TRUE(loop.odd);
  const auto square = winding_and_parity(g, {0, 1, 4, 3, 0});
  EXPECT_EQ(square.winding, (std::vector<int>{0, 0}));
  EXPECT_FALSE(square.nontrivial);
  EXPECT_FALSE(square.odd);
  const auto twice = winding_and_parity(g, {0, 1, 2, 0, 1, 2, 0});
  EXPECT_EQ(twice.winding, (std::vector<int>{6, 0}));
  EXPECT_TRUE(twice.nontrivial);
  EXPECT_FALSE(twice.odd);
  const auto back = winding_and_parity(g, {0, 3, 6, 0});
  EXPECT_EQ(back.winding, (std::vector<int>{0, 3}));

  TorusGraph even(4, 2);
  const auto even_loop = winding_and_parity(even, {0, 1, 2, 3, 0});
  EXPECT_TRUE(even_loop.nontrivial);
  EXPECT_FALSE(even_loop.odd);
}

TEST(Winding, RejectsBadWalks) {
  TorusGraph g(3, 2);
  EXPECT_THROW(winding_and_parity(g, {0, 1, 2}), std::invalid_argument);
  EXPECT_THROW(winding_and_parity(g, {}), std::invalid_argument);
  EXPECT_THROW(winding_and_parity(g, {0, 4, 0}), std::invalid_argument);
  EXPECT_THROW(winding_and_parity(g, {0, 0}), std::invalid_argument);
  g.remove(Edge{0, 0});
  EXPECT_THROW(winding_and_parity(g, {0, 1, 2, 0}), std::invalid_argument);
}

TEST(Winding, Classification) {
  EXPECT_FALSE(classify_winding({0, 0, 0}).nontrivial);
  EXPECT_TRUE(classify_winding({0, 2, 0}).nontrivial);
  EXPECT_FALSE(classify_winding({0, 2, 0}).odd);
  EXPECT_TRUE(classify_winding({0, 2, -3}).odd);
}

TEST(BlockMode, Names) {
  EXPECT_EQ(to_string(BlockMode::kAllNontrivial), "all-nontrivial");
  EXPECT_EQ(parse_block_mode("odd-only"), BlockMode::kOddOnly);
  EXPECT_THROW(parse_block_mode("odd"), std::invalid_argument);
}

// Checks a certificate against the graph: witnesses must be live closed walks
// of the right class, labelings must respect every live edge.
void check_certificate(const TorusGraph& g, BlockMode mode, const BlockerCertificate& c) {
  if (!c.blocked) {
    ASSERT_TRUE(c.witness.has_value());
    const auto w = winding_and_parity(g, c.witness->vertices);
    EXPECT_EQ(w.winding, c.witness->winding);
    EXPECT_TRUE(mode == BlockMode::kOddOnly ? w.odd : w.nontrivial);
    ASSERT_EQ(c.witness->steps.size() + 1, c.witness->vertices.size());
    for (std::size_t i = 0; i < c.witness->steps.size(); ++i) {
      const auto& s = c.witness->steps[i];
      EXPECT_EQ(g.neighbor(c.witness->vertices[i], s.axis, s.dir), c.witness->vertices[i + 1]);
      EXPECT_EQ(g.edge_towards(c.witness->vertices[i], s.axis, s.dir), s.edge);
    }
    return;
  }
  ASSERT_EQ(c.labels.size(), g.vertex_count());
  for (EdgeId id = 0; id < g.edge_slots(); ++id) {
    if (g.is_removed(id)) continue;
    const auto e = g.edge(id);
    const Vertex w = g.neighbor(e.v, e.axis, 1);
    for (int k = 0; k < g.d(); ++k) {
      const int diff = c.labels[w][static_cast<std::size_t>(k)] - c.labels[e.v][static_cast<std::size_t>(k)];
      const int want = k == e.axis ? 1 : 0;
      if (mode == BlockMode::kAllNontrivial) {
        EXPECT_EQ(diff, want);
      } else {
        EXPECT_EQ(((diff - want) % 2 + 2) % 2, 0);
      }
    }
  }
}

void compare_with_cycle_enumeration(int n) {
  const auto cycles = oracle::torus_simple_cycles(n);
  const int edges = 2 * n * n;
  std::vector<int> pick;
  std::size_t sets = 0;
  auto visit = [&]() {
    std::uint64_t mask = 0;
    TorusGraph g(n, 2);
    for (int e : pick) {
      mask |= std::uint64_t{1} << e;
      g.remove_id(static_cast<EdgeId>(e));
    }
    bool nontrivial_alive = false, odd_alive = false;
    for (const auto& c : cycles) {
      if (c.mask & mask) continue;
      nontrivial_alive |= c.w0 != 0 || c.w1 != 0;
      odd_alive |= (c.w0 % 2 != 0) || (c.w1 % 2 != 0);
    }
    const auto all = verify_blocker(g, BlockMode::kAllNontrivial);
    const auto odd = verify_blocker(g, BlockMode::kOddOnly);
    EXPECT_EQ(all.blocked, !nontrivial_alive);
    EXPECT_EQ(odd.blocked, !odd_alive);
    check_certificate(g, BlockMode::kAllNontrivial, all);
    check_certificate(g, BlockMode::kOddOnly, odd);
    ++sets;
  };
  std::function<void(int, int)> rec = [&](int from, int left) {
    visit();
    if (left == 0) return;
    for (int e = from; e < edges; ++e) {
      pick.push_back(e);
      rec(e + 1, left - 1);
      pick.pop_back();
    }
  };
  rec(0, 3);
  std::size_t expected = 1 + edges + edges * (edges - 1) / 2 + edges * (edges - 1) * (edges - 2) / 6;
  EXPECT_EQ(sets, expected);
}

TEST(VerifyBlocker, AgreesWithCycleEnumerationOnSmallRemovalSets) {
  compare_with_cycle_enumeration(3);
  compare_with_cycle_enumeration(4);
}

TEST(VerifyBlocker, CutsAlongEveryAxisBlock) {
  for (int n : {3, 4, 5}) {
    // Every axis-0 edge leaving column 0 and every axis-1 edge leaving row 0.
    TorusGraph g(n, 2);
    for (int i = 0; i < n; ++i) {
      g.remove(Edge{g.vertex({0, i}), 0});
      g.remove(Edge{g.vertex({i, 0}), 1});
    }
    const auto c = verify_blocker(g, BlockMode::kAllNontrivial);
    EXPECT_TRUE(c.blocked);
    check_certificate(g, BlockMode::kAllNontrivial, c);
  }
  TorusGraph h(3, 3);
  for (auto e : cut_blocker(h)) h.remove_id(e);
  EXPECT_TRUE(verify_blocker(h, BlockMode::kAllNontrivial).blocked);
}

TEST(VerifyBlocker, EmptyGraphWitnesses) {
  TorusGraph g(3, 2);
  const auto odd = verify_blocker(g, BlockMode::kOddOnly);
  ASSERT_FALSE(odd.blocked);
  EXPECT_TRUE(classify_winding(odd.witness->winding).odd);
  // On an even torus every cycle is even.
  TorusGraph e(4, 2);
  EXPECT_TRUE(verify_blocker(e, BlockMode::kOddOnly).blocked);
  EXPECT_FALSE(verify_blocker(e, BlockMode::kAllNontrivial).blocked);
}

TEST(Geodesic, MatchesBreadthFirstDistances) {
  Rng rng = make_rng(5, 0);
  for (int trial = 0; trial < 20; ++trial) {
    TorusGraph g(5, 2);
    const auto k = uniform_index(rng, 15);
    for (std::uint64_t i = 0; i < k; ++i) {
      const auto e = static_cast<EdgeId>(uniform_index(rng, g.edge_slots()));
      if (g.alive(e)) g.remove_id(e);
    }
    const auto dist = oracle::bfs(
        static_cast<int>(g.vertex_count()),
        [&](int v) {
          std::vector<int> out;
          for (const auto& s : g.steps_from(static_cast<Vertex>(v))) {
            out.push_back(static_cast<int>(g.neighbor(static_cast<Vertex>(v), s.axis, s.dir)));
          }
          return out;
        },
        0);
    for (Vertex b = 0; b < g.vertex_count(); ++b) {
      if (dist[b] < 0) {
        EXPECT_THROW(geodesic(g, 0, b), std::invalid_argument);
        continue;
      }
      const auto path = geodesic(g, 0, b);
      ASSERT_EQ(static_cast<int>(path.size()), dist[b] + 1);
      EXPECT_EQ(path.front(), 0U);
      EXPECT_EQ(path.back(), b);
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        bool adjacent = false;
        for (const auto& s : g.steps_from(path[i])) adjacent |= g.neighbor(path[i], s.axis, s.dir) == path[i + 1];
        EXPECT_TRUE(adjacent);
      }
    }
  }
}

TEST(Geodesic, DiagonalDistance) {
  TorusGraph g(5, 2);
  EXPECT_EQ(geodesic(g, g.vertex({0, 0}), g.vertex({2, 2})).size(), 5U);
  EXPECT_EQ(geodesic(g, 3, 3), (std::vector<Vertex>{3}));
  EXPECT_THROW(geodesic(g, 0, 99), std::invalid_argument);
}

}  // namespace
}  // namespace oddcycle::torus
