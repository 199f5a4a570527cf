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

#ifndef ODDCYCLE_TORUS_HPP_
#define ODDCYCLE_TORUS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace oddcycle::torus {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

// Edge (v, axis) joins v to v + e_axis. For n = 2 the grid is a multigraph:
// (v, axis) and (v + e_axis, axis) join the same two vertices.
struct Edge {
  Vertex v = 0;
  int axis = 0;

  auto operator<=>(const Edge&) const = default;
};

// One traversal of an edge: along `axis` in direction +1 or -1.
struct Step {
  EdgeId edge = 0;
  int axis = 0;
  int dir = 1;

  bool operator==(const Step&) const = default;
};

// The n^d wraparound grid with a set of removed edges. Vertex indices are
// mixed radix with coordinate 0 least significant.
class TorusGraph {
 public:
  TorusGraph(int n, int d = 2);

  int n() const { return n_; }
  int d() const { return d_; }
  std::uint32_t vertex_count() const { return vertex_count_; }
  std::uint32_t edge_slots() const { return vertex_count_ * static_cast<std::uint32_t>(d_); }

  EdgeId edge_id(Vertex v, int axis) const;
  Edge edge(EdgeId id) const;
  // Endpoint reached from v by moving dir (+1 or -1) along axis.
  Vertex neighbor(Vertex v, int axis, int dir) const;
  // The edge used when leaving v in direction dir along axis.
  EdgeId edge_towards(Vertex v, int axis, int dir) const;

  std::vector<int> coords(Vertex v) const;
  Vertex vertex(const std::vector<int>& coords) const;

  bool is_removed(EdgeId id) const { return removed_[id] != 0; }
  bool alive(EdgeId id) const { return removed_[id] == 0; }
  // Throws on an invalid or already removed edge.
  void remove(Edge e);
  void remove_id(EdgeId id);
  void restore_id(EdgeId id);
  // Removes every surviving edge incident to v (vertex-removal variant).
  void remove_incident(Vertex v);
  std::vector<Edge> removed_edges() const;
  std::vector<EdgeId> removed_ids() const;
  std::uint32_t removed_count() const { return removed_count_; }
  std::uint32_t surviving_edge_count() const { return edge_slots() - removed_count_; }
  // True when some edge incident to v is removed.
  bool has_removed_incident(Vertex v) const;

  // Surviving steps out of v ordered by (axis, +1 before -1).
  std::vector<Step> steps_from(Vertex v) const;

  bool operator==(const TorusGraph& o) const {
    return n_ == o.n_ && d_ == o.d_ && removed_ == o.removed_;
  }

 private:
  int n_;
  int d_;
  std::uint32_t vertex_count_;
  std::vector<std::uint32_t> stride_;
  std::vector<std::uint8_t> removed_;
  std::uint32_t removed_count_ = 0;
};

// Closed walk with the edges it uses. winding is the sum of the unit steps.
struct CyclePath {
  std::vector<Vertex> vertices;  // x_0 ... x_k with x_k = x_0
  std::vector<Step> steps;       // k entries
  std::vector<int> winding;

  bool operator==(const CyclePath&) const = default;
};

struct WindingReport {
  std::vector<int> winding;
  bool nontrivial = false;
  bool odd = false;
};

// Wrapped difference (b - a) reduced into (-floor(n/2), floor(n/2)].
int wrapped_difference(int a, int b, int n);

// Winding of a closed vertex walk with symmetric-range wrapped steps. Each
// step must be a unit move along one axis over a surviving edge; for n = 2
// a +1 step from u uses edge (u, axis). Throws on an open walk or a step
// through a removed or nonexistent edge.
WindingReport winding_and_parity(const TorusGraph& g, const std::vector<Vertex>& walk);

// Winding of a path given by explicit steps (no surviving-edge check).
WindingReport classify_winding(const std::vector<int>& winding);

enum class BlockMode { kAllNontrivial, kOddOnly };

std::string to_string(BlockMode m);
BlockMode parse_block_mode(const std::string& s);

struct BlockerCertificate {
  bool blocked = false;
  std::optional<CyclePath> witness;
  // When blocked: a lift of each vertex to Z^d (all-nontrivial) or its
  // reduction mod 2 (odd-only) that is consistent along every surviving edge.
  std::vector<std::vector<int>> labels;
};

// Decides whether every surviving cycle has zero (or even) winding by
// lifting each component breadth-first and checking non-tree edges. The
// first failing edge in id order yields a fundamental-cycle witness.
BlockerCertificate verify_blocker(const TorusGraph& g, BlockMode mode);

// Minimum-hop path over surviving edges. Throws when b is unreachable.
std::vector<Vertex> geodesic(const TorusGraph& g, Vertex a, Vertex b);

}  // namespace oddcycle::torus

#endif  // ODDCYCLE_TORUS_HPP_
