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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "oddcycle/serialize.hpp"

namespace oddcycle::io {
namespace {

// decode(encode(x)) must encode back to the same JSON, and survive a trip
// through text.
template <typename T, typename Decode>
T round_trip(const T& value, Decode decode) {
  const Json first = encode(value);
  const Json reparsed = Json::parse(dump(first));
  const T back = decode(reparsed);
  EXPECT_EQ(encode(back), first);
  return back;
}

TEST(Serialize, GameAndStrategy) {
  const auto game = game::make_odd_cycle_game(3, 2);
  const auto back = round_trip(game, decode_game);
  EXPECT_EQ(back.draws().size(), game.draws().size());
  const auto witness = game::classical_value_exact(game, game::ExactMode::kAliceBestResponse).witness;
  ASSERT_TRUE(witness.has_value());
  EXPECT_EQ(round_trip(*witness, decode_strategy), *witness);
  EXPECT_EQ(game::evaluate_strategy(back, *witness), game::evaluate_strategy(game, *witness));
  const auto chsh = game::make_chsh_game(2, game::DeltaTable{{0, 1}, {0, 0}});
  const auto chsh_back = round_trip(chsh, decode_game);
  EXPECT_EQ(game::classical_value_exact(chsh_back, game::ExactMode::kFull).value,
            game::classical_value_exact(chsh, game::ExactMode::kFull).value);
}

TEST(Serialize, ValueReports) {
  const auto game = game::make_odd_cycle_game(5, 1);
  const auto r = game::classical_value_exact(game, game::ExactMode::kFull);
  EXPECT_EQ(round_trip(r, decode_value_report), r);
  game::ValueReport refused;
  refused.status = game::ValueStatus::kIntractable;
  refused.note = "budget";
  EXPECT_EQ(round_trip(refused, decode_value_report), refused);
  const auto decay = game::repetition_decay_check(3, 1, 5.0 / 6.0);
  EXPECT_FALSE(round_trip(decay, decode_decay).bound_quantity.has_value());
  round_trip(game::repetition_decay_check(5, 3, 0.8), decode_decay);
}

TEST(Serialize, QuantumStrategyKeepsValue) {
  const auto game = game::make_odd_cycle_game(5, 2);
  const auto qs = quantum::canonical_odd_cycle_strategy(5, 0.3, 2);
  const auto back = round_trip(qs, decode_qubit_strategy);
  EXPECT_EQ(quantum::win_probability(game, back), quantum::win_probability(game, qs));
  EXPECT_EQ(back.alice_angles, qs.alice_angles);
  EXPECT_EQ(back.state.theta, qs.state.theta);
  const auto chsh = game::make_chsh_game(1);
  round_trip(quantum::bias_and_approximality(chsh, quantum::random_strategy(chsh, 3), 0.1), decode_bias);
}

TEST(Serialize, TorusObjects) {
  torus::TorusGraph g(4, 3);
  g.remove(torus::Edge{5, 2});
  g.remove(torus::Edge{0, 0});
  const auto back = round_trip(g, decode_graph);
  EXPECT_EQ(back.removed_edges(), g.removed_edges());
  EXPECT_EQ(back.n(), 4);

  torus::TorusGraph t(3, 2);
  const auto open = torus::verify_blocker(t, torus::BlockMode::kOddOnly);
  ASSERT_TRUE(open.witness.has_value());
  EXPECT_EQ(round_trip(*open.witness, decode_cycle), *open.witness);
  EXPECT_EQ(round_trip(open, decode_certificate).witness, open.witness);
  for (auto e : torus::cut_blocker(t)) t.remove_id(e);
  const auto closed = torus::verify_blocker(t, torus::BlockMode::kAllNontrivial);
  EXPECT_EQ(round_trip(closed, decode_certificate).labels, closed.labels);
  const auto mb = torus::min_blocker(torus::TorusGraph(3, 2), torus::BlockMode::kAllNontrivial,
                                     torus::BlockerMethod::kExact);
  EXPECT_EQ(round_trip(mb, decode_blocker_result).edges, mb.edges);
}

TEST(Serialize, Pearls) {
  const pearls::AliceTable alice = {0, 1, 2, 3, 1, 0, 2, 2, 1};
  const auto pearl = pearls::build_pearl(alice, 3, 2);
  const auto back = round_trip(pearl, decode_pearl);
  ASSERT_EQ(back.regions.size(), pearl.regions.size());
  for (std::size_t y = 0; y < pearl.regions.size(); ++y) EXPECT_EQ(back.regions[y], pearl.regions[y]);
  EXPECT_EQ(back.consistent, pearl.consistent);

  torus::TorusGraph g(5, 2);
  for (auto e : torus::cut_blocker(g)) g.remove_id(e);
  const auto growth = pearls::grow_consistent_cycle(g, *pearls::labeling_strategy(g), 4, 40);
  const auto gb = round_trip(growth, decode_growth);
  EXPECT_EQ(gb.cycle, growth.cycle);
  EXPECT_EQ(gb.trace.size(), growth.trace.size());
  EXPECT_EQ(gb.reason, growth.reason);
}

TEST(Serialize, Norms) {
  round_trip(norms::diamond_norm({3.0, 4.0, -1.5}, norms::DiamondMethod::kMonteCarlo, 50, 1), decode_diamond);
  const auto gaps = norms::gap_overlap({0, 9, {0, 1, 2, 7}}, {0, 9, {8}});
  EXPECT_EQ(round_trip(gaps, decode_gaps).gaps, gaps.gaps);
  round_trip(norms::blocker_integral_bound({{1, 0}, {0, 1}, {-1, -1}}, 9, 0.01), decode_integral);
}

TEST(Serialize, ExperimentConfigAndReport) {
  experiments::ExperimentConfig c;
  c.ns = {3};
  c.samples = 6;
  c.keep_samples = true;
  c.giant_threshold = Rational(9, 10);
  c.theta_grid = {1.5, 4.0};
  EXPECT_EQ(round_trip(c, decode_experiment_config), c);
  const auto report = experiments::estimate_events(c);
  EXPECT_EQ(round_trip(report, decode_experiment_report), report);

  experiments::FoamConfig f;
  f.d = 3;
  f.samples = 4;
  EXPECT_EQ(round_trip(f, decode_foam_config), f);
  const auto foam = experiments::foam_probes(f);
  EXPECT_EQ(round_trip(foam, decode_foam_report), foam);
}

TEST(Serialize, ConfigDecodingMergesDefaultsAndRejectsUnknownKeys) {
  const auto c = decode_experiment_config(Json{{"samples", 12}, {"ns", {7}}});
  EXPECT_EQ(c.samples, 12U);
  EXPECT_EQ(c.ns, (std::vector<int>{7}));
  EXPECT_EQ(c.seed, experiments::ExperimentConfig{}.seed);
  EXPECT_THROW(decode_experiment_config(Json{{"sampels", 12}}), std::invalid_argument);
  EXPECT_THROW(decode_experiment_config(Json{{"samples", "many"}}), std::invalid_argument);
  EXPECT_THROW(decode_experiment_config(Json::array()), std::invalid_argument);
}

TEST(Serialize, NonFiniteNumbers) {
  experiments::ExperimentReport r;
  experiments::NReport n;
  n.r1.min = std::numeric_limits<double>::infinity();
  n.r1.max = -std::numeric_limits<double>::infinity();
  n.r1.mean = std::numeric_limits<double>::quiet_NaN();
  r.per_n.push_back(n);
  const Json j = Json::parse(dump(encode(r)));
  const auto back = decode_experiment_report(j);
  EXPECT_TRUE(std::isinf(back.per_n[0].r1.min) && back.per_n[0].r1.min > 0);
  EXPECT_TRUE(std::isinf(back.per_n[0].r1.max) && back.per_n[0].r1.max < 0);
  EXPECT_TRUE(std::isnan(back.per_n[0].r1.mean));
}

TEST(Serialize, ManifestAndEnvelope) {
  RunManifest m;
  m.command = "value";
  m.parameters = Json{{"n", 3}, {"method", "exhaustive"}};
  m.seed = 42;
  m.version = "1.0.0";
  m.timings = {{"compute", 0.25}, {"write", 0.001}};
  m.outputs = {"value.json"};
  EXPECT_EQ(round_trip(m, decode_manifest), m);

  const Json env = envelope("value", "value.manifest.json", Json{{"x", 1}});
  EXPECT_EQ(env.at("schema_version"), kSchemaVersion);
  EXPECT_EQ(open_envelope(env, "value"), (Json{{"x", 1}}));
  EXPECT_THROW(open_envelope(env, "qvalue"), std::invalid_argument);
  Json old = env;
  old["schema_version"] = kSchemaVersion + 1;
  EXPECT_THROW(open_envelope(old, "value"), std::invalid_argument);
  EXPECT_EQ(dump(Json{{"a", 1}}), "{\n  \"a\": 1\n}\n");
}

TEST(Serialize, MalformedInputThrows) {
  EXPECT_THROW(decode_graph(Json{{"n", 3}}), std::invalid_argument);
  EXPECT_THROW(decode_graph(Json{{"n", 3}, {"d", 2}, {"removed", {{0, 5}}}}), std::invalid_argument);
  EXPECT_THROW(decode_value_report(Json{{"status", "ok"}, {"value", "1/0"}}), std::invalid_argument);
  EXPECT_THROW(decode_strategy(Json("x")), std::invalid_argument);
}

}  // namespace
}  // namespace oddcycle::io
