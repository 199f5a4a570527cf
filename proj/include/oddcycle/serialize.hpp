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

#ifndef ODDCYCLE_SERIALIZE_HPP_
#define ODDCYCLE_SERIALIZE_HPP_

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "oddcycle/blocker.hpp"
#include "oddcycle/classical.hpp"
#include "oddcycle/experiment.hpp"
#include "oddcycle/game.hpp"
#include "oddcycle/growth.hpp"
#include "oddcycle/norms.hpp"
#include "oddcycle/pearls.hpp"
#include "oddcycle/quantum.hpp"
#include "oddcycle/torus.hpp"

namespace oddcycle::io {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Encoders produce plain JSON values; decoders throw std::invalid_argument on
// malformed input. Rationals travel as "p/q" strings next to a float copy.

Json encode(const game::GameSpec& game);  // XOR games only; predicates are code
game::GameSpec decode_game(const Json& j);

Json encode(const game::DeterministicStrategy& s);
game::DeterministicStrategy decode_strategy(const Json& j);

Json encode(const game::ValueReport& r);
game::ValueReport decode_value_report(const Json& j);

Json encode(const game::DecayDiagnostic& r);
game::DecayDiagnostic decode_decay(const Json& j);

Json encode(const quantum::QubitStrategy& s);
quantum::QubitStrategy decode_qubit_strategy(const Json& j);

Json encode(const quantum::BiasReport& r);
quantum::BiasReport decode_bias(const Json& j);

Json encode(const torus::TorusGraph& g);
torus::TorusGraph decode_graph(const Json& j);

Json encode(const torus::CyclePath& c);
torus::CyclePath decode_cycle(const Json& j);

Json encode(const torus::BlockerCertificate& c);
torus::BlockerCertificate decode_certificate(const Json& j);

Json encode(const torus::BlockerResult& r);
torus::BlockerResult decode_blocker_result(const Json& j);

Json encode(const pearls::Pearl& p);
pearls::Pearl decode_pearl(const Json& j);

Json encode(const pearls::GrowthResult& r);
pearls::GrowthResult decode_growth(const Json& j);

Json encode(const norms::DiamondResult& r);
norms::DiamondResult decode_diamond(const Json& j);

Json encode(const norms::GapReport& r);
norms::GapReport decode_gaps(const Json& j);

Json encode(const norms::IntegralBound& r);
norms::IntegralBound decode_integral(const Json& j);

Json encode(const experiments::ExperimentConfig& c);
experiments::ExperimentConfig decode_experiment_config(const Json& j);

Json encode(const experiments::ExperimentReport& r);
experiments::ExperimentReport decode_experiment_report(const Json& j);

Json encode(const experiments::FoamConfig& c);
experiments::FoamConfig decode_foam_config(const Json& j);

Json encode(const experiments::FoamReport& r);
experiments::FoamReport decode_foam_report(const Json& j);

struct PhaseTiming {
  std::string phase;
  double seconds = 0.0;

  bool operator==(const PhaseTiming&) const = default;
};

struct RunManifest {
  std::string command;
  Json parameters = Json::object();
  std::uint64_t seed = 0;
  std::string version;
  std::vector<PhaseTiming> timings;
  std::vector<std::string> outputs;

  bool operator==(const RunManifest&) const = default;
};

Json encode(const RunManifest& m);
RunManifest decode_manifest(const Json& j);

// {"schema_version", "kind", "manifest", "result"}
Json envelope(const std::string& kind, const std::string& manifest_path, Json result);
// Checks schema_version and kind, returns the result payload.
Json open_envelope(const Json& j, const std::string& kind);

std::string dump(const Json& j);  // two-space indent, trailing newline

}  // namespace oddcycle::io

#endif  // ODDCYCLE_SERIALIZE_HPP_
