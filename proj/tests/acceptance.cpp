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

// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "oddcycle/blocker.hpp"
#include "oddcycle/classical.hpp"
#include "oddcycle/experiment.hpp"
#include "oddcycle/game.hpp"
#include "oddcycle/growth.hpp"
#include "oddcycle/norms.hpp"
#include "oddcycle/pearls.hpp"
#include "oddcycle/quantum.hpp"
#include "oddcycle/rng.hpp"
#include "oddcycle/serialize.hpp"
#include "oddcycle/torus.hpp"
#include "oracles.hpp"

namespace {

using namespace oddcycle;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + std::string("failed: ") + what;
    }
  }
  void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

bool same(const Rational& r, const oracle::Fraction& f) {
  return r == Rational(f.num, f.den);
}

Verdict single_shot() {
  Verdict v;
  const Rational expected[] = {Rational(5, 6), Rational(9, 10), Rational(13, 14)};
  for (int i = 0; i < 3; ++i) {
    const int n = 3 + 2 * i;
    const auto t0 = Clock::now();
    const auto r = game::classical_value_exact(game::make_odd_cycle_game(n, 1), game::ExactMode::kFull);
    const double s = seconds_since(t0);
    v.require(r.status == game::ValueStatus::kOk && r.value == expected[i], "n=" + std::to_string(n) + " value");
    v.require(same(r.value, oracle::value_full(oracle::odd_cycle(n, 1))), "n=" + std::to_string(n) + " oracle");
    v.require(s < 1.0, "n=" + std::to_string(n) + " runtime");
    v.note("n=" + std::to_string(n) + " " + to_string(r.value) + fmt(" in %.3fs", s));
  }
  return v;
}

Verdict repetition() {
  Verdict v;
  auto t0 = Clock::now();
  const auto br = game::classical_value_exact(game::make_odd_cycle_game(3, 2), game::ExactMode::kAliceBestResponse);
  double s = seconds_since(t0);
  v.require(br.status == game::ValueStatus::kOk && br.value == Rational(3, 4), "n=3 d=2 value 3/4");
  v.require(same(br.value, oracle::value_bob_exhaustive(oracle::odd_cycle(3, 2))), "n=3 d=2 mirrored oracle");
  v.require(s < 60.0, "n=3 d=2 runtime");
  v.note("n=3 d=2 " + to_string(br.value) + fmt(" in %.2fs", s));

  t0 = Clock::now();
  const auto ls = game::classical_value_search(game::make_odd_cycle_game(5, 2), 0, 1'000'000);
  s = seconds_since(t0);
  v.require(ls.value_double() >= 0.8499, "n=5 d=2 local search >= 0.8499");
  v.require(ls.evaluations <= 1'000'000, "n=5 d=2 iteration budget");
  v.require(s < 600.0, "n=5 d=2 runtime");
  v.note("n=5 d=2 local search " + to_string(ls.value) + fmt(" in %.2fs", s));
  return v;
}

Verdict quantum_band() {
  Verdict v;
  double worst_margin = 1.0, worst_gap = 0.0, slowest = 0.0;
  for (int n = 3; n <= 27; n += 2) {
    const auto game = game::make_odd_cycle_game(n, 1);
    const auto t0 = Clock::now();
    const double q = quantum::win_probability(game, quantum::canonical_odd_cycle_strategy(n, 0.0));
    slowest = std::max(slowest, seconds_since(t0));
    const double margin = q - (1.0 - 1.0 / (2.0 * n));
    const double gap = std::abs(q - oracle::odd_cycle_angle_search(n));
    worst_margin = std::min(worst_margin, margin);
    worst_gap = std::max(worst_gap, gap);
    v.require(margin >= 1e-4, "n=" + std::to_string(n) + " margin");
    v.require(gap <= 1e-6, "n=" + std::to_string(n) + " oracle agreement");
  }
  v.require(slowest < 1.0, "evaluation runtime");
  v.note(fmt("min margin %.3e", worst_margin) + fmt(", max oracle gap %.2e", worst_gap) +
         fmt(", slowest evaluation %.4fs", slowest));
  return v;
}

Verdict chsh_ladder() {
  Verdict v;
  const auto one = game::classical_value_exact(game::make_chsh_game(1), game::ExactMode::kFull);
  v.require(one.value == Rational(3, 4), "CHSH = 3/4");
  v.require(same(one.value, oracle::value_full(oracle::chsh(1))), "CHSH oracle");
  const auto two = game::classical_value_exact(game::make_chsh_game(2), game::ExactMode::kAliceBestResponse);
  v.require(two.value == Rational(10, 16), "CHSH^2 = 10/16");
  v.require(same(two.value, oracle::value_bob_exhaustive(oracle::chsh(2))), "CHSH^2 oracle");
  const auto t0 = Clock::now();
  const auto three = game::classical_value_exact(game::make_chsh_game(3), game::ExactMode::kAliceBestResponse);
  const double s = seconds_since(t0);
  v.require(three.status == game::ValueStatus::kOk, "CHSH^3 exact search completed");
  v.require(same(three.value, oracle::value_bob_exhaustive(oracle::chsh(3))), "CHSH^3 oracle");
  v.require(s <= 900.0, "CHSH^3 runtime");
  const bool matches = three.value == Rational(31, 64);
  v.note("CHSH " + to_string(one.value) + ", CHSH^2 " + to_string(two.value) + ", CHSH^3 " +
         to_string(three.value) + fmt(" in %.1fs", s));
  // 31/64 is quoted as a quantum value; the exact search shows it is the
  // classical one, so the comparison carries an erratum flag either way.
  v.note(matches ? "31/64 check: equal, ERRATUM flag set (31/64 is the classical value)"
                 : "31/64 check: differs, ERRATUM flag set");
  return v;
}

Verdict diamond_sandwich() {
  Verdict v;
  Rng rng = make_rng(2026, 5);
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> a(1 + uniform_index(rng, 12));
    for (auto& x : a) x = 20.0 * uniform_unit(rng) - 10.0;
    const auto r = norms::diamond_norm(a, norms::DiamondMethod::kExact);
    v.require(r.sandwich_lower <= r.value + 1e-12 && r.value <= r.sandwich_upper + 1e-12,
              "sandwich on trial " + std::to_string(trial));
    worst = std::max(worst, std::abs(r.value - oracle::diamond(a)));
  }
  const double s = seconds_since(t0);
  v.require(worst <= 1e-12, "sign-enumeration oracle");
  v.require(s < 5.0, "runtime");
  v.note(fmt("1000 vectors, max oracle gap %.1e", worst) + fmt(" in %.2fs", s));
  return v;
}

Rational best_response_value(const pearls::AliceTable& alice, int n, int d) {
  const auto game = game::make_odd_cycle_game(n, d);
  game::DeterministicStrategy s{alice, game::best_response_bob(game, alice)};
  return game::evaluate_strategy(game, s);
}

Verdict consistent_regions() {
  Verdict v;
  const auto t0 = Clock::now();
  for (std::uint32_t s = 0; s < 8; ++s) {
    const pearls::AliceTable alice = {s & 1U, (s >> 1) & 1U, (s >> 2) & 1U};
    v.require(std::abs(to_double(pearls::value_via_regions(alice, 3, 1)) -
                       to_double(best_response_value(alice, 3, 1))) <= 1e-12,
              "d=1 strategy " + std::to_string(s));
  }
  v.require(pearls::value_via_regions({0, 1, 0}, 3, 1) == Rational(5, 6), "x mod 2 gives 5/6");
  Rng rng = make_rng(2026, 6);
  for (int trial = 0; trial < 100; ++trial) {
    pearls::AliceTable alice(9);
    for (auto& a : alice) a = static_cast<std::uint32_t>(uniform_index(rng, 4));
    v.require(std::abs(to_double(pearls::value_via_regions(alice, 3, 2)) -
                       to_double(best_response_value(alice, 3, 2))) <= 1e-12,
              "d=2 trial " + std::to_string(trial));
  }
  const double s = seconds_since(t0);
  v.require(s < 10.0, "runtime");
  v.note("8 + 100 strategies" + fmt(" in %.2fs", s));
  return v;
}

Verdict blocker_machinery() {
  Verdict v;
  const auto t0 = Clock::now();
  std::size_t checked = 0;
  for (int n : {3, 4}) {
    const auto cycles = oracle::torus_simple_cycles(n);
    const int edges = 2 * n * n;
    std::vector<int> pick;
    std::function<void(int, int)> rec = [&](int from, int left) {
      std::uint64_t mask = 0;
      torus::TorusGraph g(n, 2);
      for (int e : pick) {
        mask |= std::uint64_t{1} << e;
        g.remove_id(static_cast<torus::EdgeId>(e));
      }
      bool nontrivial = false, odd = false;
      for (const auto& c : cycles) {
        if (c.mask & mask) continue;
        nontrivial |= c.w0 != 0 || c.w1 != 0;
        odd |= c.w0 % 2 != 0 || c.w1 % 2 != 0;
      }
      if (torus::verify_blocker(g, torus::BlockMode::kAllNontrivial).blocked == nontrivial ||
          torus::verify_blocker(g, torus::BlockMode::kOddOnly).blocked == odd) {
        v.require(false, "enumeration disagreement on T_" + std::to_string(n));
      }
      ++checked;
      if (left == 0) return;
      for (int e = from; e < edges; ++e) {
        pick.push_back(e);
        rec(e + 1, left - 1);
        pick.pop_back();
      }
    };
    rec(0, 3);
    const auto r = torus::min_blocker(torus::TorusGraph(n, 2), torus::BlockMode::kAllNontrivial,
                                      torus::BlockerMethod::kExact);
    v.require(!r.refused && r.exact && r.size == static_cast<std::uint32_t>(2 * n),
              "min blocker 2n on T_" + std::to_string(n));
    v.require(r.lower_bound == r.size, "disjoint-loop bound on T_" + std::to_string(n));
    v.note("T_" + std::to_string(n) + " min blocker " + std::to_string(r.size));
  }
  const double s = seconds_since(t0);
  v.require(s < 300.0, "runtime");
  v.note(std::to_string(checked) + " removal sets" + fmt(" in %.2fs", s));
  return v;
}

Verdict main_estimators() {
  Verdict v;
  const experiments::ExperimentConfig config;
  const auto t0 = Clock::now();
  const auto first = experiments::estimate_events(config);
  const double s = seconds_since(t0);
  const auto second = experiments::estimate_events(config);
  v.require(io::dump(io::encode(first)) == io::dump(io::encode(second)), "bitwise reproducibility");
  v.require(s <= 600.0, "runtime");
  for (const auto& n : first.per_n) {
    const std::string tag = "n=" + std::to_string(n.n) + " ";
    v.require(n.e1.halfwidth <= 0.05 && n.e2.halfwidth <= 0.05, tag + "half-widths");
    for (const auto* e : {&n.e1, &n.e2, &n.e3, &n.foam_events, &n.giant}) {
      v.require(e->phat >= 0.0 && e->phat <= 1.0, tag + "probability range");
    }
    for (std::size_t i = 1; i < n.epsilon_sweep.size(); ++i) {
      const auto& a = n.epsilon_sweep[i - 1];
      const auto& b = n.epsilon_sweep[i];
      v.require(b.e1.phat <= a.e1.phat && b.e2.phat <= a.e2.phat && b.e3.phat <= a.e3.phat,
                tag + "monotone sweep");
    }
    v.require(n.used + n.excluded == n.samples, tag + "sample conservation");
    v.require(n.ratio_classes.size() == 4 && n.ratio_classes[3] == 0, tag + "no ratio near 0");
    v.note(tag + fmt("E1 %.3f", n.e1.phat) + fmt(" +-%.3f", n.e1.halfwidth) + fmt(", E2 %.3f", n.e2.phat) +
           fmt(" +-%.3f", n.e2.halfwidth) + fmt(", E3 %.3f", n.e3.phat) +
           (n.e3_foam_ratio ? fmt(", E3/foam %.3f", *n.e3_foam_ratio) : std::string(", E3/foam undefined")) +
           fmt(", prefactor product %.4g", n.mean_prefactors.product));
  }
  v.note(fmt("%.2fs per run", s));
  return v;
}

Verdict growth() {
  Verdict v;
  const auto t0 = Clock::now();
  int closed = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng = make_rng(seed, 9);
    const auto sample = experiments::sample_torical_graph(5, 2, experiments::RemovalLaw::parse("cuts-plus-uniform:0-5"), rng);
    const auto alice = pearls::labeling_strategy(sample.graph);
    if (!alice) {
      v.require(false, "labeling strategy on seed " + std::to_string(seed));
      continue;
    }
    const auto r = pearls::grow_consistent_cycle(sample.graph, *alice, seed, 200, pearls::GrowthOptions{true});
    if (!r.closed) continue;
    ++closed;
    const auto w = torus::winding_and_parity(sample.graph, r.cycle.vertices);
    v.require(!w.odd && r.even, "even cycle on seed " + std::to_string(seed));
    v.require(w.winding == r.cycle.winding && r.homotopy_zero == !w.nontrivial,
              "winding report on seed " + std::to_string(seed));
  }
  const double s = seconds_since(t0);
  v.require(closed > 0, "at least one completed cycle");
  v.require(s < 30.0, "runtime");
  v.note(std::to_string(closed) + " of 100 runs closed" + fmt(" in %.2fs", s));
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"single-shot classical values", single_shot},
      {"parallel repetition value", repetition},
      {"quantum advantage band", quantum_band},
      {"CHSH ladder", chsh_ladder},
      {"diamond-norm sandwich", diamond_sandwich},
      {"consistent-region formula", consistent_regions},
      {"blocker machinery", blocker_machinery},
      {"event estimators", main_estimators},
      {"growth procedure", growth},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Verdict v = criteria[i].second();
    failures += !v.pass;
    std::printf("%s criterion %zu: %s (%s)\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                v.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
