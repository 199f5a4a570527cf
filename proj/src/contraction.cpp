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

#include "oddcycle/contraction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "oddcycle/classical.hpp"
#include "oddcycle/growth.hpp"

namespace oddcycle::experiments {

using torus::TorusGraph;

double ContractionMap::count_ratio() const {
  if (image == 0) return std::numeric_limits<double>::infinity();
  return static_cast<double>(preimage) / static_cast<double>(image);
}

int ContractionMap::ratio_class() const {
  const double r = count_ratio();
  if (r < 1.25) return 1;
  if (r >= 2.0) return 2;
  return 3;
}

ContractionMap contraction_map(const TorusGraph& g, int depth) {
  if (depth < 1 || depth > g.d()) {
    throw std::invalid_argument("contraction_map: depth must lie in [1, torus dimension]");
  }
  const game::GameSpec full = game::make_odd_cycle_game(g.n(), depth);
  ContractionMap cm;
  cm.n = g.n();
  cm.depth = depth;
  cm.preimage = full.draws().size();
  cm.surviving.assign(full.draws().size(), false);
  for (std::size_t i = 0; i < full.draws().size(); ++i) {
    const auto& draw = full.draws()[i];
    auto coords = game::decode_question(draw.alice_q, full.radix(), depth);
    std::vector<int> at(static_cast<std::size_t>(g.d()), 0);
    for (int k = 0; k < depth; ++k) at[static_cast<std::size_t>(k)] = static_cast<int>(coords[static_cast<std::size_t>(k)]);
    torus::Vertex v = g.vertex(at);
    bool ok = true;
    for (int axis = 0; axis < depth && ok; ++axis) {
      if (((draw.target >> axis) & 1U) == 0) continue;
      ok = g.alive(g.edge_id(v, axis));
      v = g.neighbor(v, axis, 1);
    }
    cm.surviving[i] = ok;
    if (ok) ++cm.image;
  }
  return cm;
}

RemovalLaw RemovalLaw::parse(const std::string& text) {
  RemovalLaw law;
  if (text == "exact-cuts") return law;
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("removal law '" + text + "' not recognised");
  const std::string kind = text.substr(0, colon), range = text.substr(colon + 1);
  if (kind == "uniform-size") {
    law.kind = LawKind::kUniformSize;
  } else if (kind == "uniform-vertices") {
    law.kind = LawKind::kUniformVertices;
  } else if (kind == "cuts-plus-uniform") {
    law.kind = LawKind::kCutsPlusUniform;
  } else {
    throw std::invalid_argument("removal law '" + text + "' not recognised");
  }
  const auto dash = range.find('-');
  try {
    std::size_t used = 0;
    if (dash == std::string::npos) {
      law.lo = law.hi = static_cast<std::uint32_t>(std::stoul(range, &used));
      if (used != range.size()) throw std::invalid_argument("trailing");
    } else {
      const std::string a = range.substr(0, dash), b = range.substr(dash + 1);
      law.lo = static_cast<std::uint32_t>(std::stoul(a, &used));
      if (used != a.size()) throw std::invalid_argument("trailing");
      law.hi = static_cast<std::uint32_t>(std::stoul(b, &used));
      if (used != b.size()) throw std::invalid_argument("trailing");
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("removal law '" + text + "' has a malformed size range");
  }
  if (law.lo > law.hi) throw std::invalid_argument("removal law '" + text + "' has lo > hi");
  return law;
}

std::string RemovalLaw::to_string() const {
  const std::string range = ":" + std::to_string(lo) + "-" + std::to_string(hi);
  switch (kind) {
    case LawKind::kExactCuts: return "exact-cuts";
    case LawKind::kUniformSize: return "uniform-size" + range;
    case LawKind::kUniformVertices: return "uniform-vertices" + range;
    case LawKind::kCutsPlusUniform: return "cuts-plus-uniform" + range;
  }
  return "unknown";
}

namespace {

// k distinct values from [0, bound) by a partial Fisher-Yates shuffle.
std::vector<std::uint32_t> random_subset(Rng& rng, std::uint32_t bound, std::uint32_t k) {
  std::vector<std::uint32_t> pool(bound);
  for (std::uint32_t i = 0; i < bound; ++i) pool[i] = i;
  for (std::uint32_t i = 0; i < k; ++i) {
    std::swap(pool[i], pool[i + uniform_index(rng, bound - i)]);
  }
  pool.resize(k);
  return pool;
}

std::uint32_t draw_size(Rng& rng, const RemovalLaw& law, std::uint32_t cap) {
  const std::uint32_t hi = std::min(law.hi, cap);
  if (law.lo > hi) throw std::invalid_argument("removal law size range exceeds the available items");
  return law.lo + static_cast<std::uint32_t>(uniform_index(rng, hi - law.lo + 1));
}

void add_random_cuts(TorusGraph& g, Rng& rng) {
  std::vector<int> position(static_cast<std::size_t>(g.d()));
  for (auto& p : position) p = static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(g.n())));
  for (torus::Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto c = g.coords(v);
    for (int axis = 0; axis < g.d(); ++axis) {
      if (c[static_cast<std::size_t>(axis)] == position[static_cast<std::size_t>(axis)]) {
        g.remove_id(g.edge_id(v, axis));
      }
    }
  }
}

}  // namespace

ToricalSample sample_torical_graph(int n, int d, const RemovalLaw& law, Rng& rng) {
  for (std::uint64_t attempt = 1; attempt <= kMaxSamplingAttempts; ++attempt) {
    TorusGraph g(n, d);
    switch (law.kind) {
      case LawKind::kExactCuts:
        add_random_cuts(g, rng);
        break;
      case LawKind::kUniformSize:
        for (auto e : random_subset(rng, g.edge_slots(), draw_size(rng, law, g.edge_slots()))) g.remove_id(e);
        break;
      case LawKind::kUniformVertices:
        for (auto v : random_subset(rng, g.vertex_count(), draw_size(rng, law, g.vertex_count()))) {
          g.remove_incident(v);
        }
        break;
      case LawKind::kCutsPlusUniform: {
        add_random_cuts(g, rng);
        std::vector<torus::EdgeId> alive;
        for (torus::EdgeId e = 0; e < g.edge_slots(); ++e) {
          if (g.alive(e)) alive.push_back(e);
        }
        const auto k = draw_size(rng, law, static_cast<std::uint32_t>(alive.size()));
        for (auto i : random_subset(rng, static_cast<std::uint32_t>(alive.size()), k)) g.remove_id(alive[i]);
        break;
      }
    }
    if (torus::verify_blocker(g, torus::BlockMode::kOddOnly).blocked) return {std::move(g), attempt};
  }
  throw std::runtime_error("sample_torical_graph: no odd blocker in " +
                           std::to_string(kMaxSamplingAttempts) + " attempts under law " +
                           law.to_string() + " on n=" + std::to_string(n) +
                           " (acceptance rate below 1e-5)");
}

FullValues full_values(int n, int depth, const ValueOptions& options) {
  const game::GameSpec g = game::make_odd_cycle_game(n, depth);
  FullValues f;
  f.n = n;
  f.depth = depth;
  f.q_full = quantum::optimize_angles(g, quantum::canonical_odd_cycle_strategy(n, 0.0, depth),
                                      options.optimize)
                 .value;
  auto exact = game::classical_value_exact(g, game::ExactMode::kAliceBestResponse);
  if (exact.status == game::ValueStatus::kOk) {
    f.classical_ref = exact.value;
    f.classical_method = game::to_string(exact.method);
  } else {
    auto found = game::classical_value_search(g, options.optimize.seed, options.search_iterations);
    f.classical_ref = found.value;
    f.classical_method = "local-search lower bound";
  }
  return f;
}

RestrictedValues restricted_values(const TorusGraph& g, const FullValues& full,
                                   const ValueOptions& options) {
  if (g.n() != full.n) throw std::invalid_argument("restricted_values: graph and full values disagree on n");
  const ContractionMap cm = contraction_map(g, full.depth);
  RestrictedValues r;
  r.q_full = full.q_full;
  r.classical_ref = to_double(full.classical_ref);
  r.image = cm.image;
  r.preimage = cm.preimage;
  if (cm.image == 0) {
    r.degenerate = true;
    return r;
  }
  const game::GameSpec base = game::make_odd_cycle_game(full.n, full.depth);
  const game::GameSpec sub = base.restricted(cm.surviving, base.name() + "|contraction");
  std::optional<quantum::QubitStrategy> start;
  if (auto labels = pearls::labeling_strategy(g)) {
    // Questions of the depth-k game are the torus vertices with trailing
    // coordinates zero, which share the leading index digits.
    game::DeterministicStrategy s;
    const std::uint32_t mask = (1U << full.depth) - 1U;
    for (std::uint32_t q = 0; q < base.alice_count(); ++q) s.alice.push_back((*labels)[q] & mask);
    s.bob = s.alice;
    start = quantum::embed_deterministic(sub, s);
  } else {
    start = quantum::canonical_odd_cycle_strategy(full.n, 0.0, full.depth);
  }
  r.q_restricted = quantum::optimize_angles(sub, start, options.optimize).value;
  return r;
}

double ratio_R(const RestrictedValues& v) {
  if (!(v.classical_ref > 0.0)) throw std::invalid_argument("ratio_R: classical reference must be positive");
  return (v.q_restricted - v.q_full) / v.classical_ref;
}

double ratio_R_quantum(const RestrictedValues& v) {
  if (!(v.q_restricted > 0.0)) throw std::invalid_argument("ratio_R_quantum: restricted value must be positive");
  return std::abs(v.q_full - v.q_restricted) / v.q_restricted;
}

}  // namespace oddcycle::experiments
