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

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "oddcycle/blocker.hpp"
#include "oddcycle/experiment.hpp"
#include "oddcycle/norms.hpp"
#include "oddcycle/parallel.hpp"
#include "oddcycle/quantum.hpp"

namespace oddcycle::experiments {

using torus::TorusGraph;

std::uint32_t slice_area(const TorusGraph& g, int a, int b, const std::vector<int>& fixed) {
  if (a < 0 || b <= a || b >= g.d() || fixed.size() != static_cast<std::size_t>(g.d())) {
    throw std::invalid_argument("slice_area: bad axis pair or fixed coordinates");
  }
  TorusGraph slice(g.n(), 2);
  std::vector<int> at = fixed;
  for (int i = 0; i < g.n(); ++i) {
    for (int j = 0; j < g.n(); ++j) {
      at[static_cast<std::size_t>(a)] = i;
      at[static_cast<std::size_t>(b)] = j;
      const auto v = g.vertex(at);
      const auto sv = slice.vertex({i, j});
      if (g.is_removed(g.edge_id(v, a))) slice.remove_id(slice.edge_id(sv, 0));
      if (g.is_removed(g.edge_id(v, b))) slice.remove_id(slice.edge_id(sv, 1));
    }
  }
  const auto r = torus::min_blocker(slice, torus::BlockMode::kAllNontrivial, torus::BlockerMethod::kExact,
                                    torus::BlockerOptions{.threads = 1});
  if (r.refused) throw std::runtime_error("slice_area: exact blocker search refused");
  return r.size;
}

namespace {

struct FoamSample {
  std::vector<double> pair_area;
  std::vector<double> slice_areas;
  std::vector<std::vector<double>> pair_slices;
};

FoamSample run_foam_sample(const FoamConfig& config, std::uint64_t index) {
  const int n = 2;
  TorusGraph g(n, config.d);
  Rng rng = make_rng(config.seed, index);
  const auto k = static_cast<std::uint32_t>(uniform_index(rng, config.max_preremoved + 1ULL));
  for (std::uint32_t i = 0; i < k; ++i) {
    const auto e = static_cast<torus::EdgeId>(uniform_index(rng, g.edge_slots()));
    if (g.alive(e)) g.remove_id(e);
  }
  FoamSample s;
  for (int a = 0; a < config.d; ++a) {
    for (int b = a + 1; b < config.d; ++b) {
      int other = -1;
      for (int c = 0; c < config.d; ++c) {
        if (c != a && c != b) other = c;
      }
      std::vector<double> areas;
      const int layers = other < 0 ? 1 : n;
      for (int layer = 0; layer < layers; ++layer) {
        std::vector<int> fixed(static_cast<std::size_t>(config.d), 0);
        if (other >= 0) fixed[static_cast<std::size_t>(other)] = layer;
        areas.push_back(slice_area(g, a, b, fixed));
      }
      double total = 0.0;
      for (double x : areas) total += x;
      s.pair_area.push_back(total);
      s.slice_areas.insert(s.slice_areas.end(), areas.begin(), areas.end());
      s.pair_slices.push_back(areas);
    }
  }
  return s;
}

// Completely positive map sum_k w_k P_k rho P_k^dagger over the Pauli
// operators (cycled), applied to half of a maximally entangled pair.
double channel_norm(const std::vector<double>& weights) {
  const std::array<quantum::Mat2, 4> paulis = {quantum::Mat2::Identity(), quantum::pauli_x(),
                                               quantum::pauli_z(), quantum::pauli_x() * quantum::pauli_z()};
  quantum::Vec4 omega = quantum::Vec4::Zero();
  omega(0) = omega(3) = 1.0 / std::sqrt(2.0);
  const Eigen::Matrix4cd x = omega * omega.adjoint();
  Eigen::Matrix4cd out = Eigen::Matrix4cd::Zero();
  for (std::size_t k = 0; k < weights.size(); ++k) {
    const quantum::Mat4 u = quantum::kron(paulis[k % 4], quantum::Mat2::Identity());
    out += weights[k] * u * x * u.adjoint();
  }
  return norms::trace_norm(out);
}

}  // namespace

FoamReport foam_probes(const FoamConfig& config) {
  if (config.d != 2 && config.d != 3) throw std::invalid_argument("foam_probes: d must be 2 or 3");
  if (config.samples < 1) throw std::invalid_argument("foam_probes: samples must be >= 1");
  if (!(config.constant > 0.0)) throw std::invalid_argument("foam_probes: constant must be positive");
  std::vector<FoamSample> samples(config.samples);
  const unsigned threads = config.threads == 0 ? default_threads() : config.threads;
  parallel_ranges(config.samples, threads, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) samples[i] = run_foam_sample(config, i);
  });

  const double limit = config.constant * std::pow(2.0, config.d);
  std::uint64_t c1 = 0, c2 = 0, c3 = 0, c4 = 0, c5 = 0, i1 = 0, i2 = 0, i3 = 0;
  FoamReport rep;
  rep.config = config;
  const std::size_t pairs = samples.front().pair_area.size();
  rep.mean_pair_area.assign(pairs, 0.0);
  for (const auto& s : samples) {
    const auto best = static_cast<std::size_t>(
        std::min_element(s.pair_area.begin(), s.pair_area.end()) - s.pair_area.begin());
    c1 += s.pair_area[best] <= limit;
    c2 += *std::max_element(s.slice_areas.begin(), s.slice_areas.end()) <= limit;
    c3 += norms::diamond_norm_exact(s.slice_areas) <= limit;
    c4 += channel_norm(s.pair_slices[best]) <= limit;
    if (config.d == 3) {
      // Pairs are ordered {1,2}, {1,3}, {2,3}.
      c5 += norms::diamond_norm_exact({s.pair_area[0], s.pair_area[2]}) <= limit;
      i1 += best == 1;
      i2 += best == 0;
      i3 += best == 2;
    } else {
      i2 += 1;
    }
    for (std::size_t p = 0; p < pairs; ++p) rep.mean_pair_area[p] += s.pair_area[p];
  }
  for (double& a : rep.mean_pair_area) a /= static_cast<double>(samples.size());
  const auto total = static_cast<std::uint64_t>(samples.size());
  rep.p1 = make_estimate(c1, total);
  rep.p2 = make_estimate(c2, total);
  rep.p3 = make_estimate(c3, total);
  rep.p4 = make_estimate(c4, total);
  if (config.d == 3) rep.p5 = make_estimate(c5, total);
  rep.ind1 = make_estimate(i1, total);
  rep.ind2 = make_estimate(i2, total);
  rep.ind3 = make_estimate(i3, total);
  return rep;
}

}  // namespace oddcycle::experiments
