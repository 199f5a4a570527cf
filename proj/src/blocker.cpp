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

#include "oddcycle/blocker.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "oddcycle/parallel.hpp"
#include "oddcycle/rng.hpp"

namespace oddcycle::torus {

std::string to_string(BlockerMethod m) {
  return m == BlockerMethod::kExact ? "exact" : "heuristic";
}

std::vector<EdgeId> cut_blocker(const TorusGraph& g) {
  std::vector<EdgeId> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto c = g.coords(v);
    for (int axis = 0; axis < g.d(); ++axis) {
      if (c[static_cast<std::size_t>(axis)] == g.n() - 1) out.push_back(g.edge_id(v, axis));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool line_counts(const TorusGraph& g, BlockMode mode) {
  return mode == BlockMode::kAllNontrivial || g.n() % 2 == 1;
}

// Intact-line count; sets infeasible when an intact line has every edge
// marked as kept.
std::uint32_t line_bound(const TorusGraph& g, BlockMode mode, const std::vector<std::uint8_t>* kept,
                         bool* infeasible) {
  if (!line_counts(g, mode)) return 0;
  std::uint32_t count = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto c = g.coords(v);
    for (int axis = 0; axis < g.d(); ++axis) {
      if (c[static_cast<std::size_t>(axis)] != 0) continue;
      bool intact = true, all_kept = true;
      Vertex u = v;
      for (int i = 0; i < g.n(); ++i) {
        const EdgeId e = g.edge_id(u, axis);
        if (g.is_removed(e)) {
          intact = false;
          break;
        }
        if (kept && !(*kept)[e]) all_kept = false;
        u = g.neighbor(u, axis, 1);
      }
      if (!intact) continue;
      ++count;
      if (kept && all_kept && infeasible) *infeasible = true;
    }
  }
  return count;
}

std::vector<EdgeId> witness_edges(const CyclePath& c) {
  std::vector<EdgeId> out;
  for (const Step& s : c.steps) out.push_back(s.edge);
  return out;
}

struct Branch {
  BlockMode mode;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool aborted = false;
  std::uint32_t best;  // size to beat
  std::vector<EdgeId> best_set;
  bool found = false;

  void dfs(TorusGraph& g, std::vector<std::uint8_t>& kept) {
    if (aborted) return;
    if (++nodes > budget) {
      aborted = true;
      return;
    }
    bool infeasible = false;
    const std::uint32_t lb = line_bound(g, mode, &kept, &infeasible);
    if (infeasible || g.removed_count() + lb >= best) return;
    const BlockerCertificate cert = verify_blocker(g, mode);
    if (cert.blocked) {
      best = g.removed_count();
      best_set = g.removed_ids();
      found = true;
      return;
    }
    std::vector<EdgeId> marked;
    for (EdgeId e : witness_edges(*cert.witness)) {
      if (kept[e]) continue;
      g.remove_id(e);
      dfs(g, kept);
      g.restore_id(e);
      kept[e] = 1;
      marked.push_back(e);
      if (aborted) break;
    }
    for (EdgeId e : marked) kept[e] = 0;
  }
};

BlockerResult exact_search(const TorusGraph& g0, BlockMode mode, const BlockerOptions& options) {
  BlockerResult r;
  r.exact = true;
  r.lower_bound = g0.removed_count() + line_bound(g0, mode, nullptr, nullptr);
  const BlockerCertificate root = verify_blocker(g0, mode);
  r.nodes = 1;
  if (root.blocked) {
    r.edges = g0.removed_ids();
    r.size = g0.removed_count();
    return r;
  }
  std::uint32_t upper = g0.edge_slots();
  if (options.initial_incumbent) {
    TorusGraph with_cuts = g0;
    for (EdgeId e : cut_blocker(g0)) {
      if (with_cuts.alive(e)) with_cuts.remove_id(e);
    }
    upper = with_cuts.removed_count();
  }
  // Branches are searched independently against the same fixed incumbent so
  // that the returned set and node counts do not depend on scheduling.
  const std::vector<EdgeId> edges = witness_edges(*root.witness);
  std::vector<Branch> branches(edges.size(), Branch{mode, options.node_budget, 0, false, upper + 1, {}, false});
  const unsigned threads = options.threads == 0 ? default_threads() : options.threads;
  parallel_ranges(edges.size(), threads, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      TorusGraph g = g0;
      std::vector<std::uint8_t> kept(g.edge_slots(), 0);
      for (std::uint64_t j = 0; j < i; ++j) kept[edges[j]] = 1;
      g.remove_id(edges[i]);
      branches[i].dfs(g, kept);
    }
  });
  std::optional<std::size_t> top;
  for (std::size_t i = 0; i < branches.size(); ++i) {
    r.nodes += branches[i].nodes;
    if (branches[i].aborted) r.refused = true;
    if (branches[i].found && (!top || branches[i].best < branches[*top].best)) top = i;
  }
  if (r.refused) {
    r.exact = false;
    r.note = "node budget of " + std::to_string(options.node_budget) +
             " per branch exceeded; use the heuristic method";
    return r;
  }
  if (!top) throw std::logic_error("min_blocker: search finished without a blocker");
  r.edges = branches[*top].best_set;
  r.size = branches[*top].best;
  return r;
}

BlockerResult heuristic_search(const TorusGraph& g0, BlockMode mode, const BlockerOptions& options) {
  BlockerResult r;
  r.lower_bound = g0.removed_count() + line_bound(g0, mode, nullptr, nullptr);
  r.note = "upper bound";
  std::vector<EdgeId> free_edges;
  for (EdgeId e = 0; e < g0.edge_slots(); ++e) {
    if (g0.alive(e)) free_edges.push_back(e);
  }
  const unsigned restarts = std::max(1u, options.restarts);
  std::vector<std::vector<EdgeId>> found(restarts);
  const unsigned threads = options.threads == 0 ? default_threads() : options.threads;
  parallel_ranges(restarts, threads, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t k = begin; k < end; ++k) {
      Rng rng = make_rng(options.seed, k);
      std::vector<EdgeId> order = free_edges;
      for (std::size_t i = order.size(); i > 1; --i) {
        std::swap(order[i - 1], order[uniform_index(rng, i)]);
      }
      TorusGraph g = g0;
      for (EdgeId e : order) g.remove_id(e);
      for (EdgeId e : order) {
        g.restore_id(e);
        if (!verify_blocker(g, mode).blocked) g.remove_id(e);
      }
      found[k] = g.removed_ids();
    }
  });
  std::size_t top = 0;
  for (std::size_t k = 1; k < found.size(); ++k) {
    if (found[k].size() < found[top].size()) top = k;
  }
  r.nodes = static_cast<std::uint64_t>(restarts) * (free_edges.size() + 1);
  r.edges = found[top];
  r.size = static_cast<std::uint32_t>(r.edges.size());
  return r;
}

}  // namespace

std::uint32_t intact_line_bound(const TorusGraph& g, BlockMode mode) {
  return line_bound(g, mode, nullptr, nullptr);
}

BlockerResult min_blocker(const TorusGraph& g0, BlockMode mode, BlockerMethod method,
                          const BlockerOptions& options) {
  return method == BlockerMethod::kExact ? exact_search(g0, mode, options)
                                         : heuristic_search(g0, mode, options);
}

}  // namespace oddcycle::torus
