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

#include "oddcycle/growth.hpp"

#include <algorithm>
#include <stdexcept>

#include "oddcycle/rng.hpp"

namespace oddcycle::pearls {

using torus::Step;
using torus::TorusGraph;
using torus::Vertex;

std::optional<AliceTable> labeling_strategy(const TorusGraph& g) {
  const auto cert = torus::verify_blocker(g, torus::BlockMode::kOddOnly);
  if (!cert.blocked) return std::nullopt;
  AliceTable alice(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (int i = 0; i < g.d(); ++i) {
      alice[v] |= static_cast<std::uint32_t>(cert.labels[v][static_cast<std::size_t>(i)] & 1) << i;
    }
  }
  return alice;
}

namespace {

bool pair_consistent(const TorusGraph& g, const AliceTable& alice, Vertex x, Vertex w) {
  const auto a = g.coords(x), b = g.coords(w);
  for (int i = 0; i < g.d(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    const unsigned bits = ((alice[x] ^ alice[w]) >> i) & 1U;
    const int diff = torus::wrapped_difference(b[k], a[k], g.n());
    if (bits != static_cast<unsigned>(diff & 1)) return false;
  }
  return true;
}

}  // namespace

bool step_consistent(const TorusGraph& g, const AliceTable& alice, Vertex x, Vertex w) {
  return pair_consistent(g, alice, x, w);
}

GrowthResult grow_consistent_cycle(const TorusGraph& g, const AliceTable& alice, std::uint64_t seed,
                                   std::uint32_t max_points, const GrowthOptions& options) {
  if (g.n() < 3) throw std::invalid_argument("grow_consistent_cycle: n must be >= 3");
  if (alice.size() != g.vertex_count()) {
    throw std::invalid_argument("grow_consistent_cycle: Alice table is not total over the torus");
  }
  if (options.strict && !torus::verify_blocker(g, torus::BlockMode::kOddOnly).blocked) {
    throw std::invalid_argument("grow_consistent_cycle: graph does not block every odd cycle");
  }
  GrowthResult r;
  const double n = g.n();
  r.isoperimetric_lhs = 1.5 * n;
  r.isoperimetric_rhs = 2.0 * n * n * (1.0 - to_double(value_via_regions(alice, g.n(), g.d())));
  r.isoperimetric_holds = r.isoperimetric_lhs <= r.isoperimetric_rhs;
  std::vector<int> winding(static_cast<std::size_t>(g.d()), 0);
  r.cycle.winding = winding;

  if (max_points == 0) {
    r.reason = "empty";
    r.even = true;
    r.homotopy_zero = true;
    return r;
  }
  std::vector<Vertex> starts;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!g.steps_from(v).empty()) starts.push_back(v);
  }
  if (starts.empty()) {
    r.reason = "no extension";
    return r;
  }
  Rng rng = make_rng(seed, 0);
  const Vertex x0 = starts[uniform_index(rng, starts.size())];

  std::vector<std::uint8_t> visited(g.vertex_count(), 0);
  auto record = [&](Vertex p, bool closing, bool with_prev) {
    GrowthEvent e;
    e.point = p;
    e.closing = closing;
    e.consistent_with_previous = with_prev;
    for (Vertex q : r.cycle.vertices) {
      if (q != p && !pair_consistent(g, alice, p, q)) e.consistent_with_all = false;
    }
    e.winding = winding;
    e.odd = torus::classify_winding(winding).odd;
    r.trace.push_back(std::move(e));
  };
  record(x0, false, true);
  r.cycle.vertices.push_back(x0);
  visited[x0] = 1;

  auto take = [&](const Step& s) {
    winding[static_cast<std::size_t>(s.axis)] += s.dir;
    r.cycle.steps.push_back(s);
  };

  while (true) {
    const Vertex y = r.cycle.vertices.back();
    const auto steps = g.steps_from(y);
    if (r.cycle.vertices.size() >= 3) {
      const auto close = std::find_if(steps.begin(), steps.end(), [&](const Step& s) {
        return g.neighbor(y, s.axis, s.dir) == x0 && pair_consistent(g, alice, y, x0);
      });
      if (close != steps.end()) {
        take(*close);
        record(x0, true, true);
        r.cycle.vertices.push_back(x0);
        r.closed = true;
        r.reason = "closed";
        break;
      }
    }
    if (r.cycle.vertices.size() >= max_points) {
      r.reason = "max points";
      break;
    }
    std::optional<Step> pick;
    Vertex pick_vertex = 0;
    for (int want : {1, -1}) {
      for (const Step& s : steps) {
        if (s.dir != want) continue;
        const Vertex w = g.neighbor(y, s.axis, s.dir);
        if (visited[w] || !pair_consistent(g, alice, y, w)) continue;
        if (!pick || w < pick_vertex) {
          pick = s;
          pick_vertex = w;
        }
      }
      if (pick) break;
    }
    if (!pick) {
      r.reason = "no extension";
      break;
    }
    take(*pick);
    record(pick_vertex, false, true);
    r.cycle.vertices.push_back(pick_vertex);
    visited[pick_vertex] = 1;
  }
  for (const auto& e : r.trace) r.consistent = r.consistent && e.consistent_with_previous;
  r.cycle.winding = winding;
  if (r.closed) {
    const auto w = torus::classify_winding(winding);
    r.even = !w.odd;
    r.homotopy_zero = !w.nontrivial;
  }
  return r;
}

}  // namespace oddcycle::pearls
