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

#ifndef ODDCYCLE_EXPERIMENT_HPP_
#define ODDCYCLE_EXPERIMENT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oddcycle/contraction.hpp"
#include "oddcycle/rational.hpp"
#include "oddcycle/regions.hpp"
#include "oddcycle/torus.hpp"

namespace oddcycle::experiments {

struct ExperimentConfig {
  std::vector<int> ns{3, 5};
  int d = 2;
  std::uint64_t samples = 500;
  std::string removal_law = "cuts-plus-uniform:0-3";
  double epsilon1 = 0.05;
  double epsilon2 = 0.05;
  double epsilon3 = 0.05;
  // Sandwich widths for the monotonicity sweep.
  std::vector<double> epsilon_grid{0.01, 0.02, 0.05, 0.1, 0.2, 0.5, 0.9};
  // Threshold sweep; each theta > 1 gives epsilon' = (theta - 1) / theta.
  std::vector<double> theta_grid{1.01, 1.02, 1.05, 1.1, 1.25, 1.5, 2.0, 3.0, 5.0, 10.0, 20.0};
  std::uint64_t seed = 42;
  Rational giant_threshold{95, 100};
  int tube_width = 2;
  int m = 1;
  double foam_constant = 2.0;
  // Acceptance band used when flagging probabilities as close to 1.
  double band_low = 0.9;
  bool keep_samples = false;
  unsigned threads = 0;
  ValueOptions values;

  bool operator==(const ExperimentConfig&) const = default;
};

// Throws std::invalid_argument on an inconsistent configuration.
void validate(const ExperimentConfig& config);

struct Estimate {
  std::uint64_t hits = 0;
  std::uint64_t trials = 0;
  double phat = 0.0;
  double halfwidth = 0.0;  // 1.96 sqrt(p (1 - p) / N)

  bool operator==(const Estimate&) const = default;
};

Estimate make_estimate(std::uint64_t hits, std::uint64_t trials);

// Both endpoints open: epsilon < r < 1 / epsilon.
bool in_sandwich(double r, double epsilon);

struct Prefactors {
  double f1 = 0, f2 = 0, f3 = 0, f4 = 0, f5 = 0, f6 = 0;
  double product = 0;  // f1 f2 / f3 * f4 f5 / f6 (0 when f3 or f6 is 0)
  bool event1 = false;  // removed set nonempty
  bool event2 = false;  // tube vertices touching removed edges <= m^-d |V(tube)|
  bool event3 = false;  // section strictly inside tube
  bool event4 = false;  // diamond norm of per-axis removal counts <= C n^d

  bool all_events() const { return event1 && event2 && event3 && event4; }
  bool operator==(const Prefactors&) const = default;
};

// f1 = surviving draws, f2 = |V(tube)|, f3 = |V(T)|, f4 = all draws,
// f5 = |largest marked component of the tube|, f6 = |V(section)|.
Prefactors proposition_prefactors(const torus::TorusGraph& g, const ContractionMap& contraction,
                                  const torus::RegionSet& tube, const torus::RegionSet& section,
                                  const ExperimentConfig& config);

struct SampleRecord {
  std::uint64_t index = 0;
  std::uint32_t removed = 0;
  std::uint64_t attempts = 0;
  double r1 = 0;  // depth 1, classical denominator
  double r2 = 0;  // depth d, classical denominator
  double r1_quantum = 0;
  double r2_quantum = 0;
  double q_restricted1 = 0;
  double q_restricted2 = 0;
  int ratio_class = 0;
  bool giant = false;
  bool degenerate = false;
  Prefactors prefactors;

  bool operator==(const SampleRecord&) const = default;
};

struct SweepPoint {
  double epsilon = 0;
  Estimate e1, e2, e3;

  bool operator==(const SweepPoint&) const = default;
};

struct ThetaPoint {
  double theta = 0;
  double epsilon_prime = 0;
  Estimate estimate;            // epsilon' < R < 1 / epsilon'
  std::optional<double> ratio;  // phat / P[E1]; absent when P[E1] = 0

  bool operator==(const ThetaPoint&) const = default;
};

struct Summary {
  double min = 0, max = 0, mean = 0;

  bool operator==(const Summary&) const = default;
};

struct NReport {
  int n = 0;
  FullValues full1;
  FullValues full2;
  std::uint64_t samples = 0;
  std::uint64_t used = 0;
  std::uint64_t excluded = 0;
  std::uint64_t attempts = 0;
  double acceptance_rate = 0;
  Estimate e1, e2, e3;
  Estimate foam_events;  // events (1)-(4) together
  std::optional<double> e3_foam_ratio;  // P[E3] / P[foam events]
  Summary r1, r2, r1_quantum, r2_quantum;
  std::vector<std::uint64_t> ratio_classes;  // counts for classes 1..4
  Estimate event1, event2, event3, event4;
  Estimate giant;
  Prefactors mean_prefactors;
  std::vector<SweepPoint> epsilon_sweep;
  std::vector<ThetaPoint> theta_sweep;
  std::vector<SampleRecord> records;  // only when keep_samples

  bool operator==(const NReport&) const = default;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<NReport> per_n;

  bool operator==(const ExperimentReport&) const = default;
};

ExperimentReport estimate_events(const ExperimentConfig& config);

// The threshold sweep of one n as CSV with header "theta,ratio,phat,halfwidth";
// a missing ratio prints as nan.
std::string theta_sweep_csv(const NReport& report);

struct FoamConfig {
  int d = 2;  // 2 or 3; the side length is fixed at 2
  std::uint64_t samples = 200;
  std::uint32_t max_preremoved = 2;
  double constant = 2.0;
  std::uint64_t seed = 42;
  unsigned threads = 0;

  bool operator==(const FoamConfig&) const = default;
};

struct FoamReport {
  FoamConfig config;
  Estimate p1, p2, p3, p4;
  std::optional<Estimate> p5;  // d = 3 only
  Estimate ind1, ind2, ind3;   // argmin pair is {1,3}, {1,2}, {2,3}
  std::vector<double> mean_pair_area;  // per axis pair in lexicographic order

  bool operator==(const FoamReport&) const = default;
};

// Axis pairs of {0..d-1} in lexicographic order and, for each, the 2D slices
// through the remaining coordinates. Each slice's area is the exact minimum
// blocker (all nontrivial cycles) of the T_2^2 slice containing the
// pre-removed edges that lie in it. Throws unless d is 2 or 3.
FoamReport foam_probes(const FoamConfig& config);

// Minimum blocker of the 2D slice of g along axes a < b through the vertex
// `fixed` (a full coordinate vector; its entries at a and b are ignored),
// forced to contain g's removed edges in that slice.
std::uint32_t slice_area(const torus::TorusGraph& g, int a, int b, const std::vector<int>& fixed);

}  // namespace oddcycle::experiments

#endif  // ODDCYCLE_EXPERIMENT_HPP_
