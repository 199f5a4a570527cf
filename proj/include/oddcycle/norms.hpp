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

#ifndef ODDCYCLE_NORMS_HPP_
#define ODDCYCLE_NORMS_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

namespace oddcycle::norms {

inline constexpr int kMaxExactDiamondDim = 24;

enum class DiamondMethod { kExact, kMonteCarlo };

struct DiamondResult {
  double value = 0.0;
  double standard_error = 0.0;  // zero for exact enumeration
  double l2 = 0.0;
  double sandwich_lower = 0.0;  // |A|_2 / sqrt(2)
  double sandwich_upper = 0.0;  // |A|_2
};

// E|sum_i a_i chi_i| over uniform signs chi. Exact mode averages all sign
// vectors (up to kMaxExactDiamondDim entries); Monte Carlo draws `samples`
// seeded sign vectors. Throws on non-finite entries.
DiamondResult diamond_norm(const std::vector<double>& a, DiamondMethod method,
                           std::uint64_t samples = 10000, std::uint64_t seed = 0);

double diamond_norm_exact(const std::vector<double>& a);

struct LambdaReport {
  std::vector<double> per_segment;
  double total = 0.0;
};

// Half the exact diamond norm of each segment, and their sum.
LambdaReport lambda_measure(const std::vector<std::vector<double>>& segments);

struct IntegralBound {
  double diamond_sum = 0.0;
  double raw = 0.0;     // before clamping
  double bound = 0.0;   // clamped into [0, 1]
  bool clamped = false;
};

// Discretized blocker integral: each step is a displacement with entries in
// {-1, 0, 1}, not all zero, and the steps must sum to 0 mod n in every
// coordinate. Returns 1 - ((1 + epsilon)/n) * sum of step diamond norms.
IntegralBound blocker_integral_bound(const std::vector<std::vector<int>>& steps, int n, double epsilon);

// Index set over the universe [lo, hi].
struct SupportingSet {
  int lo = 0;
  int hi = 0;
  std::vector<int> members;
};

struct Gap {
  int start = 0;
  int length = 0;

  bool operator==(const Gap&) const = default;
};

struct GapReport {
  std::size_t overlap_count = 0;
  std::vector<Gap> gaps;
  int max_gap_magnitude = 0;
};

// Symmetric difference grouped into maximal runs of consecutive indices.
// Throws on mismatched universes or members outside them.
GapReport gap_overlap(const SupportingSet& qa, const SupportingSet& qb);

// Sum of singular values.
double trace_norm(const Eigen::MatrixXcd& m);

}  // namespace oddcycle::norms

#endif  // ODDCYCLE_NORMS_HPP_
