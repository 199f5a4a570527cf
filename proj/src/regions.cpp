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

#include "oddcycle/regions.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace oddcycle::torus {

std::string to_string(RegionKind k) {
  switch (k) {
    case RegionKind::kSection: return "section";
    case RegionKind::kTube: return "tube";
    case RegionKind::kCube: return "cube";
  }
  return "unknown";
}

namespace {

bool in_window(int c, int start, int len, int n) {
  return ((c - start) % n + n) % n < len;
}

void check_axis(const TorusGraph& g, int axis) {
  if (axis < 0 || axis >= g.d()) throw std::invalid_argument("region: axis out of range");
}

}  // namespace

RegionSet make_tube(const TorusGraph& g, int axis, const std::vector<int>& offset, int width) {
  check_axis(g, axis);
  if (offset.size() != static_cast<std::size_t>(g.d())) {
    throw std::invalid_argument("tube: offset has the wrong dimension");
  }
  if (width < 1 || width > g.n()) throw std::invalid_argument("tube: width must lie in [1, n]");
  RegionSet r;
  r.kind = RegionKind::kTube;
  r.axis = axis;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto c = g.coords(v);
    bool inside = true;
    for (int j = 0; j < g.d() && inside; ++j) {
      if (j == axis) continue;
      inside = in_window(c[static_cast<std::size_t>(j)], offset[static_cast<std::size_t>(j)], width, g.n());
    }
    if (inside) r.members.push_back(v);
  }
  return r;
}

RegionSet make_section(const TorusGraph& g, const RegionSet& tube, int position) {
  if (tube.kind != RegionKind::kTube) throw std::invalid_argument("section: source must be a tube");
  check_axis(g, tube.axis);
  const int p = ((position % g.n()) + g.n()) % g.n();
  RegionSet r;
  r.kind = RegionKind::kSection;
  r.axis = tube.axis;
  for (Vertex v : tube.members) {
    if (g.coords(v)[static_cast<std::size_t>(tube.axis)] == p) r.members.push_back(v);
  }
  for (Vertex v : tube.marked) {
    if (g.coords(v)[static_cast<std::size_t>(tube.axis)] == p) r.marked.push_back(v);
  }
  return r;
}

RegionSet make_cube(const TorusGraph& g, const std::vector<int>& corner, const std::vector<int>& sides) {
  if (corner.size() != static_cast<std::size_t>(g.d()) || sides.size() != corner.size()) {
    throw std::invalid_argument("cube: corner and sides must have dimension d");
  }
  for (int s : sides) {
    if (s < 1 || s > g.n()) throw std::invalid_argument("cube: sides must lie in [1, n]");
  }
  RegionSet r;
  r.kind = RegionKind::kCube;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto c = g.coords(v);
    bool inside = true;
    for (std::size_t j = 0; j < c.size() && inside; ++j) inside = in_window(c[j], corner[j], sides[j], g.n());
    if (inside) r.members.push_back(v);
  }
  return r;
}

std::vector<Vertex> marked_vertices(const TorusGraph& g, const RegionSet& region) {
  std::vector<Vertex> out;
  for (Vertex v : region.members) {
    if (!g.has_removed_incident(v)) out.push_back(v);
  }
  return out;
}

RegionSet with_marking(const TorusGraph& g, const RegionSet& region) {
  RegionSet r = region;
  r.marked = marked_vertices(g, region);
  return r;
}

void validate_region(const TorusGraph& g, const RegionSet& region) {
  if (!std::is_sorted(region.members.begin(), region.members.end()) ||
      std::adjacent_find(region.members.begin(), region.members.end()) != region.members.end()) {
    throw std::invalid_argument("region: members must be sorted and distinct");
  }
  if (!region.members.empty() && region.members.back() >= g.vertex_count()) {
    throw std::invalid_argument("region: member outside the grid");
  }
  if (!std::is_sorted(region.marked.begin(), region.marked.end()) ||
      !std::includes(region.members.begin(), region.members.end(), region.marked.begin(),
                     region.marked.end())) {
    throw std::invalid_argument("region: marked vertices must be a subset of the members");
  }
}

std::vector<RegionStats> region_stats(const std::vector<RegionSet>& regions) {
  std::vector<RegionStats> out;
  for (std::size_t i = 0; i < regions.size(); ++i) {
    const auto& r = regions[i];
    if (r.members.empty()) {
      throw std::invalid_argument("region_stats: region " + std::to_string(i) +
                                  " is empty; relative distribution undefined");
    }
    RegionStats s;
    s.degree = r.members.size();
    s.distribution = r.marked.size();
    s.relative = Rational(static_cast<std::int64_t>(s.distribution), static_cast<std::int64_t>(s.degree));
    out.push_back(s);
  }
  return out;
}

GiantReport giant_detect(const RegionSet& tube, const TorusGraph& g, Rational threshold) {
  if (tube.members.empty()) throw std::invalid_argument("giant_detect: empty tube");
  validate_region(g, tube);
  std::vector<std::uint8_t> marked(g.vertex_count(), 0);
  for (Vertex v : tube.marked) marked[v] = 1;
  std::vector<std::uint8_t> seen(g.vertex_count(), 0);
  GiantReport r;
  for (Vertex root : tube.marked) {
    if (seen[root]) continue;
    ++r.component_count;
    std::vector<Vertex> comp{root};
    seen[root] = 1;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (const Step& s : g.steps_from(u)) {
        const Vertex w = g.neighbor(u, s.axis, s.dir);
        if (!marked[w] || seen[w]) continue;
        seen[w] = 1;
        comp.push_back(w);
        queue.push_back(w);
      }
    }
    if (comp.size() > r.component.size()) {
      std::sort(comp.begin(), comp.end());
      r.component = std::move(comp);
    }
  }
  r.ratio = Rational(static_cast<std::int64_t>(r.component.size()),
                     static_cast<std::int64_t>(tube.members.size()));
  r.is_giant = !r.component.empty() && r.ratio >= threshold;
  r.all_components_meet_giant = r.component_count <= 1;
  return r;
}

}  // namespace oddcycle::torus
