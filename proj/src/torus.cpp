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

#include "oddcycle/torus.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace oddcycle::torus {

TorusGraph::TorusGraph(int n, int d) : n_(n), d_(d) {
  if (n < 2) throw std::invalid_argument("torus: n must be >= 2");
  if (d < 1) throw std::invalid_argument("torus: d must be >= 1");
  std::uint64_t count = 1;
  for (int i = 0; i < d; ++i) {
    stride_.push_back(static_cast<std::uint32_t>(count));
    count *= static_cast<std::uint64_t>(n);
    if (count * static_cast<std::uint64_t>(d) > (1ULL << 28)) {
      throw std::invalid_argument("torus: n^d too large");
    }
  }
  vertex_count_ = static_cast<std::uint32_t>(count);
  removed_.assign(edge_slots(), 0);
}

EdgeId TorusGraph::edge_id(Vertex v, int axis) const {
  if (v >= vertex_count_ || axis < 0 || axis >= d_) {
    throw std::invalid_argument("torus: edge (" + std::to_string(v) + "," + std::to_string(axis) +
                                ") outside the grid");
  }
  return v * static_cast<std::uint32_t>(d_) + static_cast<std::uint32_t>(axis);
}

Edge TorusGraph::edge(EdgeId id) const {
  if (id >= edge_slots()) throw std::invalid_argument("torus: edge id out of range");
  return Edge{id / static_cast<std::uint32_t>(d_), static_cast<int>(id % static_cast<std::uint32_t>(d_))};
}

Vertex TorusGraph::neighbor(Vertex v, int axis, int dir) const {
  const std::uint32_t s = stride_[static_cast<std::size_t>(axis)];
  const int c = static_cast<int>((v / s) % static_cast<std::uint32_t>(n_));
  const int nc = ((c + dir) % n_ + n_) % n_;
  return v + static_cast<std::uint32_t>(nc) * s - static_cast<std::uint32_t>(c) * s;
}

EdgeId TorusGraph::edge_towards(Vertex v, int axis, int dir) const {
  return dir > 0 ? edge_id(v, axis) : edge_id(neighbor(v, axis, -1), axis);
}

std::vector<int> TorusGraph::coords(Vertex v) const {
  std::vector<int> c(static_cast<std::size_t>(d_));
  for (int i = 0; i < d_; ++i) {
    c[static_cast<std::size_t>(i)] = static_cast<int>(v % static_cast<std::uint32_t>(n_));
    v /= static_cast<std::uint32_t>(n_);
  }
  return c;
}

Vertex TorusGraph::vertex(const std::vector<int>& coords) const {
  if (coords.size() != static_cast<std::size_t>(d_)) {
    throw std::invalid_argument("torus: coordinate vector has the wrong dimension");
  }
  Vertex v = 0;
  for (int i = 0; i < d_; ++i) {
    const int c = ((coords[static_cast<std::size_t>(i)] % n_) + n_) % n_;
    v += static_cast<std::uint32_t>(c) * stride_[static_cast<std::size_t>(i)];
  }
  return v;
}

void TorusGraph::remove(Edge e) { remove_id(edge_id(e.v, e.axis)); }

void TorusGraph::remove_id(EdgeId id) {
  if (id >= edge_slots()) throw std::invalid_argument("torus: edge id out of range");
  if (removed_[id]) throw std::invalid_argument("torus: edge " + std::to_string(id) + " removed twice");
  removed_[id] = 1;
  ++removed_count_;
}

void TorusGraph::restore_id(EdgeId id) {
  if (id >= edge_slots() || !removed_[id]) throw std::invalid_argument("torus: edge is not removed");
  removed_[id] = 0;
  --removed_count_;
}

void TorusGraph::remove_incident(Vertex v) {
  for (int axis = 0; axis < d_; ++axis) {
    for (int dir : {1, -1}) {
      const EdgeId e = edge_towards(v, axis, dir);
      if (!removed_[e]) remove_id(e);
    }
  }
}

std::vector<Edge> TorusGraph::removed_edges() const {
  std::vector<Edge> out;
  for (EdgeId id = 0; id < edge_slots(); ++id) {
    if (removed_[id]) out.push_back(edge(id));
  }
  return out;
}

std::vector<EdgeId> TorusGraph::removed_ids() const {
  std::vector<EdgeId> out;
  for (EdgeId id = 0; id < edge_slots(); ++id) {
    if (removed_[id]) out.push_back(id);
  }
  return out;
}

bool TorusGraph::has_removed_incident(Vertex v) const {
  for (int axis = 0; axis < d_; ++axis) {
    if (removed_[edge_towards(v, axis, 1)] || removed_[edge_towards(v, axis, -1)]) return true;
  }
  return false;
}

std::vector<Step> TorusGraph::steps_from(Vertex v) const {
  std::vector<Step> out;
  for (int axis = 0; axis < d_; ++axis) {
    for (int dir : {1, -1}) {
      const EdgeId e = edge_towards(v, axis, dir);
      if (!removed_[e]) out.push_back(Step{e, axis, dir});
    }
  }
  return out;
}

int wrapped_difference(int a, int b, int n) {
  int r = ((b - a) % n + n) % n;
  if (r > n / 2) r -= n;
  return r;
}

WindingReport classify_winding(const std::vector<int>& winding) {
  WindingReport r;
  r.winding = winding;
  for (int w : winding) {
    if (w != 0) r.nontrivial = true;
    if (w % 2 != 0) r.odd = true;
  }
  return r;
}

WindingReport winding_and_parity(const TorusGraph& g, const std::vector<Vertex>& walk) {
  if (walk.empty() || walk.front() != walk.back()) {
    throw std::invalid_argument("winding: walk is not closed");
  }
  std::vector<int> winding(static_cast<std::size_t>(g.d()), 0);
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    if (walk[i] >= g.vertex_count() || walk[i + 1] >= g.vertex_count()) {
      throw std::invalid_argument("winding: vertex outside the grid");
    }
    const auto a = g.coords(walk[i]), b = g.coords(walk[i + 1]);
    int axis = -1, dir = 0;
    for (int k = 0; k < g.d(); ++k) {
      const int diff = wrapped_difference(a[static_cast<std::size_t>(k)], b[static_cast<std::size_t>(k)], g.n());
      if (diff == 0) continue;
      if (axis != -1 || (diff != 1 && diff != -1)) {
        throw std::invalid_argument("winding: step " + std::to_string(i) + " is not a grid edge");
      }
      axis = k;
      dir = diff;
    }
    if (axis == -1) throw std::invalid_argument("winding: step " + std::to_string(i) + " does not move");
    if (g.is_removed(g.edge_towards(walk[i], axis, dir))) {
      throw std::invalid_argument("winding: step " + std::to_string(i) + " uses a removed edge");
    }
    winding[static_cast<std::size_t>(axis)] += dir;
  }
  return classify_winding(winding);
}

std::string to_string(BlockMode m) {
  return m == BlockMode::kAllNontrivial ? "all-nontrivial" : "odd-only";
}

BlockMode parse_block_mode(const std::string& s) {
  if (s == "all-nontrivial") return BlockMode::kAllNontrivial;
  if (s == "odd-only") return BlockMode::kOddOnly;
  throw std::invalid_argument("unknown blocker mode '" + s + "' (expected all-nontrivial or odd-only)");
}

BlockerCertificate verify_blocker(const TorusGraph& g, BlockMode mode) {
  const std::uint32_t nv = g.vertex_count();
  const auto d = static_cast<std::size_t>(g.d());
  constexpr std::uint32_t kNone = 0xffffffffu;
  std::vector<std::uint32_t> parent(nv, kNone);
  std::vector<Step> parent_step(nv);
  std::vector<std::uint32_t> depth(nv, 0);
  std::vector<int> lift(nv * d, 0);
  std::vector<std::uint8_t> seen(nv, 0);

  std::deque<Vertex> queue;
  for (Vertex root = 0; root < nv; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    queue.push_back(root);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (const Step& s : g.steps_from(u)) {
        const Vertex w = g.neighbor(u, s.axis, s.dir);
        if (seen[w]) continue;
        seen[w] = 1;
        parent[w] = u;
        parent_step[w] = s;
        depth[w] = depth[u] + 1;
        for (std::size_t k = 0; k < d; ++k) lift[w * d + k] = lift[u * d + k];
        lift[w * d + static_cast<std::size_t>(s.axis)] += s.dir;
        queue.push_back(w);
      }
    }
  }

  BlockerCertificate cert;
  for (EdgeId id = 0; id < g.edge_slots(); ++id) {
    if (g.is_removed(id)) continue;
    const Edge e = g.edge(id);
    const Vertex u = e.v;
    const Vertex w = g.neighbor(u, e.axis, 1);
    std::vector<int> delta(d);
    bool bad = false;
    for (std::size_t k = 0; k < d; ++k) {
      delta[k] = lift[u * d + k] + (static_cast<int>(k) == e.axis ? 1 : 0) - lift[w * d + k];
      if (mode == BlockMode::kAllNontrivial ? delta[k] != 0 : delta[k] % 2 != 0) bad = true;
    }
    if (!bad) continue;

    // Fundamental cycle: lca -> u along the tree, the edge u -> w, then w -> lca.
    std::vector<Vertex> up_u{u}, up_w{w};
    std::vector<Step> steps_u, steps_w;
    Vertex a = u, b = w;
    while (depth[a] > depth[b]) { steps_u.push_back(parent_step[a]); a = parent[a]; up_u.push_back(a); }
    while (depth[b] > depth[a]) { steps_w.push_back(parent_step[b]); b = parent[b]; up_w.push_back(b); }
    while (a != b) {
      steps_u.push_back(parent_step[a]); a = parent[a]; up_u.push_back(a);
      steps_w.push_back(parent_step[b]); b = parent[b]; up_w.push_back(b);
    }
    CyclePath cycle;
    for (std::size_t i = up_u.size(); i-- > 0;) cycle.vertices.push_back(up_u[i]);
    for (std::size_t i = steps_u.size(); i-- > 0;) cycle.steps.push_back(steps_u[i]);
    cycle.steps.push_back(Step{id, e.axis, 1});
    for (std::size_t i = 0; i < steps_w.size(); ++i) {
      Step s = steps_w[i];
      s.dir = -s.dir;
      cycle.steps.push_back(s);
      cycle.vertices.push_back(up_w[i]);
    }
    cycle.vertices.push_back(up_w.back());
    cycle.winding = delta;
    cert.blocked = false;
    cert.witness = std::move(cycle);
    return cert;
  }
  cert.blocked = true;
  cert.labels.assign(nv, std::vector<int>(d));
  for (Vertex v = 0; v < nv; ++v) {
    for (std::size_t k = 0; k < d; ++k) {
      const int x = lift[v * d + k];
      cert.labels[v][k] = mode == BlockMode::kAllNontrivial ? x : ((x % 2) + 2) % 2;
    }
  }
  return cert;
}

std::vector<Vertex> geodesic(const TorusGraph& g, Vertex a, Vertex b) {
  if (a >= g.vertex_count() || b >= g.vertex_count()) {
    throw std::invalid_argument("geodesic: vertex outside the grid");
  }
  constexpr std::uint32_t kNone = 0xffffffffu;
  std::vector<std::uint32_t> parent(g.vertex_count(), kNone);
  parent[a] = a;
  std::deque<Vertex> queue{a};
  while (!queue.empty() && parent[b] == kNone) {
    const Vertex u = queue.front();
    queue.pop_front();
    std::vector<Vertex> next;
    for (const Step& s : g.steps_from(u)) next.push_back(g.neighbor(u, s.axis, s.dir));
    std::sort(next.begin(), next.end());
    for (Vertex w : next) {
      if (parent[w] != kNone) continue;
      parent[w] = u;
      queue.push_back(w);
    }
  }
  if (parent[b] == kNone) throw std::invalid_argument("geodesic: endpoints are disconnected");
  std::vector<Vertex> path{b};
  while (path.back() != a) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace oddcycle::torus
