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

#include "oddcycle/norms.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "oddcycle/rng.hpp"

namespace oddcycle::norms {

double diamond_norm_exact(const std::vector<double>& a) {
  const std::size_t d = a.size();
  if (d > static_cast<std::size_t>(kMaxExactDiamondDim)) {
    throw std::invalid_argument("diamond_norm: exact enumeration is limited to " +
                                std::to_string(kMaxExactDiamondDim) + " entries");
  }
  if (d == 0) return 0.0;
  // |sum| is invariant under flipping every sign, so fix chi_0 = +1.
  const std::uint64_t half = std::uint64_t{1} << (d - 1);
  double total = 0.0;
  for (std::uint64_t mask = 0; mask < half; ++mask) {
    double s = a[0];
    for (std::size_t i = 1; i < d; ++i) s += ((mask >> (i - 1)) & 1U) ? -a[i] : a[i];
    total += std::abs(s);
  }
  return total / static_cast<double>(half);
}

DiamondResult diamond_norm(const std::vector<double>& a, DiamondMethod method, std::uint64_t samples,
                           std::uint64_t seed) {
  for (double x : a) {
    if (!std::isfinite(x)) throw std::invalid_argument("diamond_norm: entries must be finite");
  }
  DiamondResult r;
  double sq = 0.0;
  for (double x : a) sq += x * x;
  r.l2 = std::sqrt(sq);
  r.sandwich_lower = r.l2 / std::sqrt(2.0);
  r.sandwich_upper = r.l2;
  if (method == DiamondMethod::kExact) {
    r.value = diamond_norm_exact(a);
    return r;
  }
  if (samples < 2) throw std::invalid_argument("diamond_norm: Monte Carlo needs at least 2 samples");
  Rng rng = make_rng(seed, 0);
  double mean = 0.0, m2 = 0.0;
  for (std::uint64_t k = 0; k < samples; ++k) {
    double s = 0.0;
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i % 64 == 0) bits = rng();
      s += (bits & 1U) ? -a[i] : a[i];
      bits >>= 1;
    }
    const double x = std::abs(s);
    const double delta = x - mean;
    mean += delta / static_cast<double>(k + 1);
    m2 += delta * (x - mean);
  }
  r.value = mean;
  r.standard_error = std::sqrt(m2 / static_cast<double>(samples - 1) / static_cast<double>(samples));
  return r;
}

LambdaReport lambda_measure(const std::vector<std::vector<double>>& segments) {
  if (segments.empty()) throw std::invalid_argument("lambda_measure: no segments");
  LambdaReport r;
  for (const auto& s : segments) {
    const double v = 0.5 * diamond_norm(s, DiamondMethod::kExact).value;
    r.per_segment.push_back(v);
    r.total += v;
  }
  return r;
}

IntegralBound blocker_integral_bound(const std::vector<std::vector<int>>& steps, int n, double epsilon) {
  if (n < 1) throw std::invalid_argument("blocker_integral_bound: n must be >= 1");
  if (!(epsilon > 0.0)) throw std::invalid_argument("blocker_integral_bound: epsilon must be > 0");
  std::vector<long> sum;
  IntegralBound r;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const auto& s = steps[k];
    if (k == 0) sum.assign(s.size(), 0);
    if (s.size() != sum.size() || s.empty()) {
      throw std::invalid_argument("blocker_integral_bound: steps must share one nonzero dimension");
    }
    bool moves = false;
    std::vector<double> as_double;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < -1 || s[i] > 1) throw std::invalid_argument("blocker_integral_bound: step is not a unit step");
      moves = moves || s[i] != 0;
      sum[i] += s[i];
      as_double.push_back(s[i]);
    }
    if (!moves) throw std::invalid_argument("blocker_integral_bound: zero step");
    r.diamond_sum += diamond_norm_exact(as_double);
  }
  for (long c : sum) {
    if (c % n != 0) throw std::invalid_argument("blocker_integral_bound: curve is not closed on the torus");
  }
  r.raw = 1.0 - ((1.0 + epsilon) / n) * r.diamond_sum;
  r.bound = std::clamp(r.raw, 0.0, 1.0);
  r.clamped = r.bound != r.raw;
  return r;
}

GapReport gap_overlap(const SupportingSet& qa, const SupportingSet& qb) {
  if (qa.lo != qb.lo || qa.hi != qb.hi || qa.lo > qa.hi) {
    throw std::invalid_argument("gap_overlap: supporting sets must share one universe");
  }
  auto load = [&](const SupportingSet& q) {
    std::set<int> s;
    for (int m : q.members) {
      if (m < q.lo || m > q.hi) throw std::invalid_argument("gap_overlap: member outside the universe");
      s.insert(m);
    }
    return s;
  };
  const std::set<int> a = load(qa), b = load(qb);
  GapReport r;
  Gap current;
  bool open = false;
  for (int i = qa.lo; i <= qa.hi; ++i) {
    const bool differs = a.count(i) != b.count(i);
    if (differs) {
      ++r.overlap_count;
      if (!open) current = Gap{i, 0};
      open = true;
      ++current.length;
    } else if (open) {
      r.gaps.push_back(current);
      open = false;
    }
  }
  if (open) r.gaps.push_back(current);
  for (const Gap& g : r.gaps) r.max_gap_magnitude = std::max(r.max_gap_magnitude, g.length);
  return r;
}

double trace_norm(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues().sum();
}

}  // namespace oddcycle::norms
