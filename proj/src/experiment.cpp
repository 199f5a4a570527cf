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

#include "oddcycle/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "oddcycle/norms.hpp"
#include "oddcycle/parallel.hpp"

namespace oddcycle::experiments {

using torus::TorusGraph;

void validate(const ExperimentConfig& c) {
  if (c.ns.empty()) throw std::invalid_argument("experiment: no values of n");
  for (int n : c.ns) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("experiment: n must be odd and >= 3");
  }
  if (c.d < 2 || c.d > 3) throw std::invalid_argument("experiment: d must be 2 or 3");
  if (c.samples < 1) throw std::invalid_argument("experiment: samples must be >= 1");
  auto check_eps = [](double e, const char* what) {
    if (!(e > 0.0 && e < 1.0)) throw std::invalid_argument(std::string("experiment: ") + what + " must lie in (0,1)");
  };
  check_eps(c.epsilon1, "epsilon1");
  check_eps(c.epsilon2, "epsilon2");
  check_eps(c.epsilon3, "epsilon3");
  for (double e : c.epsilon_grid) check_eps(e, "epsilon grid entries");
  for (double t : c.theta_grid) {
    if (!(t > 1.0) || !std::isfinite(t)) throw std::invalid_argument("experiment: theta grid entries must exceed 1");
  }
  if (c.giant_threshold <= Rational(0) || c.giant_threshold > Rational(1)) {
    throw std::invalid_argument("experiment: giant threshold must lie in (0,1]");
  }
  for (int n : c.ns) {
    if (c.tube_width < 1 || c.tube_width > n) throw std::invalid_argument("experiment: tube width must lie in [1, n]");
  }
  if (c.m < 1) throw std::invalid_argument("experiment: m must be >= 1");
  if (!(c.foam_constant > 0.0)) throw std::invalid_argument("experiment: foam constant must be positive");
  if (!(c.band_low >= 0.0 && c.band_low <= 1.0)) throw std::invalid_argument("experiment: band must lie in [0,1]");
  RemovalLaw::parse(c.removal_law);
}

Estimate make_estimate(std::uint64_t hits, std::uint64_t trials) {
  Estimate e;
  e.hits = hits;
  e.trials = trials;
  if (trials == 0) return e;
  e.phat = static_cast<double>(hits) / static_cast<double>(trials);
  e.halfwidth = 1.96 * std::sqrt(e.phat * (1.0 - e.phat) / static_cast<double>(trials));
  return e;
}

bool in_sandwich(double r, double epsilon) {
  return std::isfinite(r) && epsilon < r && r < 1.0 / epsilon;
}

Prefactors proposition_prefactors(const TorusGraph& g, const ContractionMap& contraction,
                                  const torus::RegionSet& tube, const torus::RegionSet& section,
                                  const ExperimentConfig& config) {
  torus::validate_region(g, tube);
  torus::validate_region(g, section);
  Prefactors p;
  p.f1 = static_cast<double>(contraction.image);
  p.f2 = static_cast<double>(tube.members.size());
  p.f3 = static_cast<double>(g.vertex_count());
  p.f4 = static_cast<double>(contraction.preimage);
  p.f5 = static_cast<double>(torus::giant_detect(tube, g, config.giant_threshold).component.size());
  p.f6 = static_cast<double>(section.members.size());
  p.product = (p.f3 == 0 || p.f6 == 0) ? 0.0 : p.f1 * p.f2 / p.f3 * p.f4 * p.f5 / p.f6;

  p.event1 = g.removed_count() > 0;
  std::size_t touched = 0;
  for (auto v : tube.members) {
    if (g.has_removed_incident(v)) ++touched;
  }
  p.event2 = static_cast<double>(touched) <= std::pow(config.m, -g.d()) * p.f2;
  p.event3 = section.members.size() < tube.members.size() &&
             std::includes(tube.members.begin(), tube.members.end(), section.members.begin(),
                           section.members.end());
  std::vector<double> per_axis(static_cast<std::size_t>(g.d()), 0.0);
  for (const auto& e : g.removed_edges()) per_axis[static_cast<std::size_t>(e.axis)] += 1.0;
  p.event4 = norms::diamond_norm_exact(per_axis) <= config.foam_constant * std::pow(g.n(), g.d());
  return p;
}

namespace {

Summary summarize(const std::vector<double>& xs) {
  Summary s;
  if (xs.empty()) return s;
  s.min = *std::min_element(xs.begin(), xs.end());
  s.max = *std::max_element(xs.begin(), xs.end());
  double total = 0.0;
  for (double x : xs) total += x;
  s.mean = total / static_cast<double>(xs.size());
  return s;
}

SampleRecord run_sample(int n, const ExperimentConfig& config, const RemovalLaw& law,
                        const FullValues& full1, const FullValues& full2, std::uint64_t index) {
  Rng rng = make_rng(derive_seed(config.seed, static_cast<std::uint64_t>(n)), index);
  ToricalSample sample = sample_torical_graph(n, config.d, law, rng);
  const TorusGraph& g = sample.graph;
  SampleRecord rec;
  rec.index = index;
  rec.removed = g.removed_count();
  rec.attempts = sample.attempts;
  const RestrictedValues v1 = restricted_values(g, full1, config.values);
  const RestrictedValues v2 = restricted_values(g, full2, config.values);
  const ContractionMap cm = contraction_map(g, config.d);
  rec.degenerate = v1.degenerate || v2.degenerate;
  rec.ratio_class = cm.ratio_class();
  std::vector<int> origin(static_cast<std::size_t>(g.d()), 0);
  const auto tube = torus::with_marking(g, torus::make_tube(g, 0, origin, config.tube_width));
  const auto section = torus::make_section(g, tube, 0);
  rec.giant = torus::giant_detect(tube, g, config.giant_threshold).is_giant;
  rec.prefactors = proposition_prefactors(g, cm, tube, section, config);
  if (rec.degenerate) return rec;
  rec.q_restricted1 = v1.q_restricted;
  rec.q_restricted2 = v2.q_restricted;
  rec.r1 = ratio_R(v1);
  rec.r2 = ratio_R(v2);
  rec.r1_quantum = ratio_R_quantum(v1);
  rec.r2_quantum = ratio_R_quantum(v2);
  return rec;
}

NReport run_n(int n, const ExperimentConfig& config) {
  const RemovalLaw law = RemovalLaw::parse(config.removal_law);
  NReport rep;
  rep.n = n;
  rep.full1 = full_values(n, 1, config.values);
  rep.full2 = full_values(n, config.d, config.values);
  rep.samples = config.samples;

  std::vector<SampleRecord> records(config.samples);
  const unsigned threads = config.threads == 0 ? default_threads() : config.threads;
  parallel_ranges(config.samples, threads, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      records[i] = run_sample(n, config, law, rep.full1, rep.full2, i);
    }
  });

  std::vector<double> r1, r2, r1q, r2q;
  rep.ratio_classes.assign(4, 0);
  std::uint64_t ev[4] = {0, 0, 0, 0}, all_events = 0, giants = 0;
  Prefactors sum;
  for (const auto& rec : records) {
    rep.attempts += rec.attempts;
    ++rep.ratio_classes[static_cast<std::size_t>(rec.ratio_class - 1)];
    const auto& p = rec.prefactors;
    ev[0] += p.event1;
    ev[1] += p.event2;
    ev[2] += p.event3;
    ev[3] += p.event4;
    all_events += p.all_events();
    giants += rec.giant;
    sum.f1 += p.f1; sum.f2 += p.f2; sum.f3 += p.f3;
    sum.f4 += p.f4; sum.f5 += p.f5; sum.f6 += p.f6;
    sum.product += p.product;
    if (rec.degenerate) {
      ++rep.excluded;
      continue;
    }
    ++rep.used;
    r1.push_back(rec.r1);
    r2.push_back(rec.r2);
    r1q.push_back(rec.r1_quantum);
    r2q.push_back(rec.r2_quantum);
  }
  const double count = static_cast<double>(records.size());
  rep.mean_prefactors = sum;
  for (double* f : {&rep.mean_prefactors.f1, &rep.mean_prefactors.f2, &rep.mean_prefactors.f3,
                    &rep.mean_prefactors.f4, &rep.mean_prefactors.f5, &rep.mean_prefactors.f6,
                    &rep.mean_prefactors.product}) {
    *f /= count;
  }
  rep.acceptance_rate = static_cast<double>(records.size()) / static_cast<double>(rep.attempts);
  rep.event1 = make_estimate(ev[0], records.size());
  rep.event2 = make_estimate(ev[1], records.size());
  rep.event3 = make_estimate(ev[2], records.size());
  rep.event4 = make_estimate(ev[3], records.size());
  rep.foam_events = make_estimate(all_events, records.size());
  rep.giant = make_estimate(giants, records.size());
  rep.r1 = summarize(r1);
  rep.r2 = summarize(r2);
  rep.r1_quantum = summarize(r1q);
  rep.r2_quantum = summarize(r2q);

  auto count_in = [](const std::vector<double>& xs, double eps) {
    return static_cast<std::uint64_t>(std::count_if(xs.begin(), xs.end(), [&](double x) { return in_sandwich(x, eps); }));
  };
  rep.e1 = make_estimate(count_in(r1, config.epsilon1), rep.used);
  rep.e2 = make_estimate(count_in(r2, config.epsilon2), rep.used);
  rep.e3 = make_estimate(count_in(r2q, config.epsilon3), rep.used);
  if (rep.foam_events.phat > 0.0) rep.e3_foam_ratio = rep.e3.phat / rep.foam_events.phat;
  for (double eps : config.epsilon_grid) {
    rep.epsilon_sweep.push_back(SweepPoint{eps, make_estimate(count_in(r1, eps), rep.used),
                                           make_estimate(count_in(r2, eps), rep.used),
                                           make_estimate(count_in(r2q, eps), rep.used)});
  }
  for (double theta : config.theta_grid) {
    ThetaPoint tp;
    tp.theta = theta;
    tp.epsilon_prime = (theta - 1.0) / theta;
    tp.estimate = make_estimate(count_in(r1, tp.epsilon_prime), rep.used);
    if (rep.e1.phat > 0.0) tp.ratio = tp.estimate.phat / rep.e1.phat;
    rep.theta_sweep.push_back(tp);
  }
  if (config.keep_samples) rep.records = std::move(records);
  return rep;
}

}  // namespace

ExperimentReport estimate_events(const ExperimentConfig& config) {
  validate(config);
  ExperimentReport report;
  report.config = config;
  for (int n : config.ns) report.per_n.push_back(run_n(n, config));
  return report;
}

std::string theta_sweep_csv(const NReport& report) {
  std::string out = "theta,ratio,phat,halfwidth\n";
  char buf[128];
  for (const auto& tp : report.theta_sweep) {
    std::string ratio = "nan";
    if (tp.ratio) {
      std::snprintf(buf, sizeof buf, "%.17g", *tp.ratio);
      ratio = buf;
    }
    std::snprintf(buf, sizeof buf, "%.17g", tp.theta);
    out += buf;
    out += "," + ratio + ",";
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", tp.estimate.phat, tp.estimate.halfwidth);
    out += buf;
  }
  return out;
}

}  // namespace oddcycle::experiments
