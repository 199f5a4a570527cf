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

#include "oddcycle/serialize.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace oddcycle::io {

namespace {

// Non-finite doubles become strings so that they survive a round trip.
Json num(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double to_num(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
  }
  throw std::invalid_argument("json: expected a number, got " + j.dump());
}

const Json& at(const Json& j, const char* key) {
  if (!j.is_object()) throw std::invalid_argument(std::string("json: expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw std::invalid_argument(std::string("json: missing key '") + key + "'");
  return *it;
}

template <typename T>
T get(const Json& j, const char* key) {
  try {
    return at(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("json: bad value for '") + key + "': " + e.what());
  }
}

double get_num(const Json& j, const char* key) { return to_num(at(j, key)); }

Rational get_rational(const Json& j, const char* key) { return parse_rational(get<std::string>(j, key)); }

Json opt_num(const std::optional<double>& x) { return x ? num(*x) : Json(nullptr); }

std::optional<double> get_opt_num(const Json& j, const char* key) {
  const Json& v = at(j, key);
  if (v.is_null()) return std::nullopt;
  return to_num(v);
}

Json num_list(const std::vector<double>& xs) {
  Json out = Json::array();
  for (double x : xs) out.push_back(num(x));
  return out;
}

std::vector<double> get_num_list(const Json& j, const char* key) {
  const Json& v = at(j, key);
  if (!v.is_array()) throw std::invalid_argument(std::string("json: '") + key + "' must be an array");
  std::vector<double> out;
  for (const auto& x : v) out.push_back(to_num(x));
  return out;
}

Json num_table(const std::vector<std::vector<double>>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back(num_list(r));
  return out;
}

std::vector<std::vector<double>> get_num_table(const Json& j, const char* key) {
  const Json& v = at(j, key);
  if (!v.is_array()) throw std::invalid_argument(std::string("json: '") + key + "' must be an array");
  std::vector<std::vector<double>> out;
  for (const auto& row : v) {
    Json wrap = {{"row", row}};
    out.push_back(get_num_list(wrap, "row"));
  }
  return out;
}

}  // namespace

Json encode(const game::GameSpec& g) {
  if (!g.is_xor()) throw std::invalid_argument("json: only XOR games serialize; predicates are code");
  Json draws = Json::array();
  for (const auto& d : g.draws()) {
    draws.push_back({{"alice", d.alice_q}, {"bob", d.bob_q}, {"weight", to_string(d.weight)}, {"target", d.target}});
  }
  return {{"name", g.name()},         {"alice_questions", g.alice_count()},
          {"bob_questions", g.bob_count()}, {"answers", g.answer_count()},
          {"depth", g.depth()},       {"radix", g.radix()},
          {"draws", draws}};
}

game::GameSpec decode_game(const Json& j) {
  std::vector<game::Draw> draws;
  for (const auto& d : at(j, "draws")) {
    draws.push_back(game::Draw{get<std::uint32_t>(d, "alice"), get<std::uint32_t>(d, "bob"),
                               get_rational(d, "weight"), get<std::uint32_t>(d, "target")});
  }
  return game::GameSpec(get<std::string>(j, "name"), get<std::uint32_t>(j, "alice_questions"),
                        get<std::uint32_t>(j, "bob_questions"), get<std::uint32_t>(j, "answers"),
                        get<int>(j, "depth"), get<std::uint32_t>(j, "radix"), std::move(draws));
}

Json encode(const game::DeterministicStrategy& s) { return {{"alice", s.alice}, {"bob", s.bob}}; }

game::DeterministicStrategy decode_strategy(const Json& j) {
  return {get<std::vector<std::uint32_t>>(j, "alice"), get<std::vector<std::uint32_t>>(j, "bob")};
}

Json encode(const game::ValueReport& r) {
  return {{"status", game::to_string(r.status)},
          {"method", game::to_string(r.method)},
          {"value", to_string(r.value)},
          {"value_float", r.value_double()},
          {"witness", r.witness ? encode(*r.witness) : Json(nullptr)},
          {"evaluations", r.evaluations},
          {"note", r.note}};
}

game::ValueReport decode_value_report(const Json& j) {
  game::ValueReport r;
  const auto status = get<std::string>(j, "status");
  if (status == game::to_string(game::ValueStatus::kOk)) {
    r.status = game::ValueStatus::kOk;
  } else if (status == game::to_string(game::ValueStatus::kIntractable)) {
    r.status = game::ValueStatus::kIntractable;
  } else {
    throw std::invalid_argument("json: unknown value status '" + status + "'");
  }
  const auto method = get<std::string>(j, "method");
  bool found = false;
  for (auto m : {game::ValueMethod::kExhaustive, game::ValueMethod::kAliceExhaustiveBestResponse,
                 game::ValueMethod::kLocalSearch}) {
    if (game::to_string(m) == method) {
      r.method = m;
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("json: unknown value method '" + method + "'");
  r.value = get_rational(j, "value");
  if (!at(j, "witness").is_null()) r.witness = decode_strategy(at(j, "witness"));
  r.evaluations = get<std::uint64_t>(j, "evaluations");
  r.note = get<std::string>(j, "note");
  return r;
}

Json encode(const game::DecayDiagnostic& r) {
  return {{"n", r.n},
          {"d", r.d},
          {"value", num(r.value)},
          {"gap", num(r.gap)},
          {"bound_quantity", opt_num(r.bound_quantity)},
          {"gap_over_bound", num(r.gap_over_bound)},
          {"in_regime", r.in_regime},
          {"flag", r.flag}};
}

game::DecayDiagnostic decode_decay(const Json& j) {
  game::DecayDiagnostic r;
  r.n = get<int>(j, "n");
  r.d = get<int>(j, "d");
  r.value = get_num(j, "value");
  r.gap = get_num(j, "gap");
  r.bound_quantity = get_opt_num(j, "bound_quantity");
  r.gap_over_bound = get_num(j, "gap_over_bound");
  r.in_regime = get<bool>(j, "in_regime");
  r.flag = get<std::string>(j, "flag");
  return r;
}

Json encode(const quantum::QubitStrategy& s) {
  Json amps = Json::array();
  for (int i = 0; i < 4; ++i) amps.push_back({s.state.amplitudes(i).real(), s.state.amplitudes(i).imag()});
  return {{"theta", s.state.theta},
          {"amplitudes", amps},
          {"alice_angles", num_table(s.alice_angles)},
          {"bob_angles", num_table(s.bob_angles)},
          {"alice_flip", s.alice_flip},
          {"bob_flip", s.bob_flip},
          {"convention",
           "radians; alice measures (|0>+e^{ia}|1>)/sqrt2, bob (|0>+e^{-ib}|1>)/sqrt2 per coordinate; "
           "a flip xors that player's answer bits"}};
}

quantum::QubitStrategy decode_qubit_strategy(const Json& j) {
  quantum::QubitStrategy s;
  const Json& amps = at(j, "amplitudes");
  if (!amps.is_array() || amps.size() != 4) throw std::invalid_argument("json: amplitudes must hold 4 entries");
  quantum::Vec4 v;
  for (int i = 0; i < 4; ++i) {
    const Json& a = amps[static_cast<std::size_t>(i)];
    if (!a.is_array() || a.size() != 2) throw std::invalid_argument("json: amplitude must be [re, im]");
    v(i) = quantum::Complex(to_num(a[0]), to_num(a[1]));
  }
  s.state = quantum::SharedState::from_amplitudes(v);
  s.state.amplitudes = v;
  s.state.theta = get_num(j, "theta");
  s.alice_angles = get_num_table(j, "alice_angles");
  s.bob_angles = get_num_table(j, "bob_angles");
  s.alice_flip = get<int>(j, "alice_flip");
  s.bob_flip = get<int>(j, "bob_flip");
  return s;
}

Json encode(const quantum::BiasReport& r) {
  return {{"win_probability", num(r.win_probability)}, {"bias", num(r.bias)},
          {"reference_bias", num(r.reference_bias)},   {"lower", num(r.lower)},
          {"upper", num(r.upper)},                     {"within", r.within}};
}

quantum::BiasReport decode_bias(const Json& j) {
  return {get_num(j, "win_probability"), get_num(j, "bias"), get_num(j, "reference_bias"),
          get_num(j, "lower"), get_num(j, "upper"), get<bool>(j, "within")};
}

Json encode(const torus::TorusGraph& g) {
  Json removed = Json::array();
  for (const auto& e : g.removed_edges()) removed.push_back({e.v, e.axis});
  return {{"n", g.n()}, {"d", g.d()}, {"removed", removed}};
}

torus::TorusGraph decode_graph(const Json& j) {
  torus::TorusGraph g(get<int>(j, "n"), get<int>(j, "d"));
  for (const auto& e : at(j, "removed")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("json: removed edge must be [vertex, axis]");
    const auto v = e[0].get<long long>();
    const auto axis = e[1].get<int>();
    if (v < 0 || v >= static_cast<long long>(g.vertex_count()) || axis < 0 || axis >= g.d()) {
      throw std::invalid_argument("json: removed edge out of range");
    }
    g.remove(torus::Edge{static_cast<torus::Vertex>(v), axis});
  }
  return g;
}

Json encode(const torus::CyclePath& c) {
  Json steps = Json::array();
  for (const auto& s : c.steps) steps.push_back({{"edge", s.edge}, {"axis", s.axis}, {"dir", s.dir}});
  return {{"vertices", c.vertices}, {"steps", steps}, {"winding", c.winding}};
}

torus::CyclePath decode_cycle(const Json& j) {
  torus::CyclePath c;
  c.vertices = get<std::vector<torus::Vertex>>(j, "vertices");
  for (const auto& s : at(j, "steps")) {
    c.steps.push_back(torus::Step{get<torus::EdgeId>(s, "edge"), get<int>(s, "axis"), get<int>(s, "dir")});
  }
  c.winding = get<std::vector<int>>(j, "winding");
  return c;
}

Json encode(const torus::BlockerCertificate& c) {
  return {{"blocked", c.blocked},
          {"witness", c.witness ? encode(*c.witness) : Json(nullptr)},
          {"labels", c.labels}};
}

torus::BlockerCertificate decode_certificate(const Json& j) {
  torus::BlockerCertificate c;
  c.blocked = get<bool>(j, "blocked");
  if (!at(j, "witness").is_null()) c.witness = decode_cycle(at(j, "witness"));
  c.labels = get<std::vector<std::vector<int>>>(j, "labels");
  return c;
}

Json encode(const torus::BlockerResult& r) {
  return {{"refused", r.refused}, {"exact", r.exact}, {"size", r.size}, {"edges", r.edges},
          {"nodes", r.nodes},     {"lower_bound", r.lower_bound},      {"note", r.note}};
}

torus::BlockerResult decode_blocker_result(const Json& j) {
  torus::BlockerResult r;
  r.refused = get<bool>(j, "refused");
  r.exact = get<bool>(j, "exact");
  r.size = get<std::uint32_t>(j, "size");
  r.edges = get<std::vector<torus::EdgeId>>(j, "edges");
  r.nodes = get<std::uint64_t>(j, "nodes");
  r.lower_bound = get<std::uint32_t>(j, "lower_bound");
  r.note = get<std::string>(j, "note");
  return r;
}

Json encode(const pearls::Pearl& p) {
  Json regions = Json::object();
  for (const auto& r : p.regions) regions[std::to_string(r.center)] = r.members;
  return {{"consistent", p.consistent}, {"regions", regions}};
}

pearls::Pearl decode_pearl(const Json& j) {
  pearls::Pearl p;
  p.consistent = get<bool>(j, "consistent");
  // Object keys sort as strings; restore numeric order.
  std::map<std::uint32_t, std::vector<std::uint32_t>> by_center;
  for (const auto& [key, members] : at(j, "regions").items()) {
    std::size_t used = 0;
    unsigned long y = 0;
    try {
      y = std::stoul(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size()) throw std::invalid_argument("json: pearl key '" + key + "' is not a question index");
    by_center[static_cast<std::uint32_t>(y)] = members.get<std::vector<std::uint32_t>>();
  }
  for (auto& [y, members] : by_center) p.regions.push_back(pearls::ConsistentRegion{y, std::move(members)});
  return p;
}

Json encode(const pearls::GrowthResult& r) {
  Json trace = Json::array();
  for (const auto& e : r.trace) {
    trace.push_back({{"point", e.point},
                     {"closing", e.closing},
                     {"consistent_with_previous", e.consistent_with_previous},
                     {"consistent_with_all", e.consistent_with_all},
                     {"winding", e.winding},
                     {"odd", e.odd}});
  }
  return {{"cycle", encode(r.cycle)},
          {"closed", r.closed},
          {"consistent", r.consistent},
          {"even", r.even},
          {"homotopy_zero", r.homotopy_zero},
          {"reason", r.reason},
          {"trace", trace},
          {"isoperimetric_lhs", num(r.isoperimetric_lhs)},
          {"isoperimetric_rhs", num(r.isoperimetric_rhs)},
          {"isoperimetric_holds", r.isoperimetric_holds}};
}

pearls::GrowthResult decode_growth(const Json& j) {
  pearls::GrowthResult r;
  r.cycle = decode_cycle(at(j, "cycle"));
  r.closed = get<bool>(j, "closed");
  r.consistent = get<bool>(j, "consistent");
  r.even = get<bool>(j, "even");
  r.homotopy_zero = get<bool>(j, "homotopy_zero");
  r.reason = get<std::string>(j, "reason");
  for (const auto& e : at(j, "trace")) {
    r.trace.push_back(pearls::GrowthEvent{get<torus::Vertex>(e, "point"), get<bool>(e, "closing"),
                                          get<bool>(e, "consistent_with_previous"),
                                          get<bool>(e, "consistent_with_all"),
                                          get<std::vector<int>>(e, "winding"), get<bool>(e, "odd")});
  }
  r.isoperimetric_lhs = get_num(j, "isoperimetric_lhs");
  r.isoperimetric_rhs = get_num(j, "isoperimetric_rhs");
  r.isoperimetric_holds = get<bool>(j, "isoperimetric_holds");
  return r;
}

Json encode(const norms::DiamondResult& r) {
  return {{"value", num(r.value)},
          {"standard_error", num(r.standard_error)},
          {"l2", num(r.l2)},
          {"sandwich_lower", num(r.sandwich_lower)},
          {"sandwich_upper", num(r.sandwich_upper)}};
}

norms::DiamondResult decode_diamond(const Json& j) {
  return {get_num(j, "value"), get_num(j, "standard_error"), get_num(j, "l2"),
          get_num(j, "sandwich_lower"), get_num(j, "sandwich_upper")};
}

Json encode(const norms::GapReport& r) {
  Json gaps = Json::array();
  for (const auto& g : r.gaps) gaps.push_back({{"start", g.start}, {"length", g.length}});
  return {{"overlap_count", r.overlap_count}, {"gaps", gaps}, {"max_gap_magnitude", r.max_gap_magnitude}};
}

norms::GapReport decode_gaps(const Json& j) {
  norms::GapReport r;
  r.overlap_count = get<std::size_t>(j, "overlap_count");
  for (const auto& g : at(j, "gaps")) r.gaps.push_back(norms::Gap{get<int>(g, "start"), get<int>(g, "length")});
  r.max_gap_magnitude = get<int>(j, "max_gap_magnitude");
  return r;
}

Json encode(const norms::IntegralBound& r) {
  return {{"diamond_sum", num(r.diamond_sum)}, {"raw", num(r.raw)}, {"bound", num(r.bound)}, {"clamped", r.clamped}};
}

norms::IntegralBound decode_integral(const Json& j) {
  return {get_num(j, "diamond_sum"), get_num(j, "raw"), get_num(j, "bound"), get<bool>(j, "clamped")};
}

namespace {

Json encode_estimate(const experiments::Estimate& e) {
  return {{"hits", e.hits}, {"trials", e.trials}, {"phat", num(e.phat)}, {"halfwidth", num(e.halfwidth)}};
}

experiments::Estimate decode_estimate(const Json& j) {
  return {get<std::uint64_t>(j, "hits"), get<std::uint64_t>(j, "trials"), get_num(j, "phat"),
          get_num(j, "halfwidth")};
}

experiments::Estimate get_estimate(const Json& j, const char* key) { return decode_estimate(at(j, key)); }

Json encode_prefactors(const experiments::Prefactors& p) {
  return {{"f1", num(p.f1)},         {"f2", num(p.f2)},         {"f3", num(p.f3)},
          {"f4", num(p.f4)},         {"f5", num(p.f5)},         {"f6", num(p.f6)},
          {"product", num(p.product)}, {"event1", p.event1},    {"event2", p.event2},
          {"event3", p.event3},      {"event4", p.event4}};
}

experiments::Prefactors decode_prefactors(const Json& j) {
  experiments::Prefactors p;
  p.f1 = get_num(j, "f1");
  p.f2 = get_num(j, "f2");
  p.f3 = get_num(j, "f3");
  p.f4 = get_num(j, "f4");
  p.f5 = get_num(j, "f5");
  p.f6 = get_num(j, "f6");
  p.product = get_num(j, "product");
  p.event1 = get<bool>(j, "event1");
  p.event2 = get<bool>(j, "event2");
  p.event3 = get<bool>(j, "event3");
  p.event4 = get<bool>(j, "event4");
  return p;
}

Json encode_summary(const experiments::Summary& s) {
  return {{"min", num(s.min)}, {"max", num(s.max)}, {"mean", num(s.mean)}};
}

experiments::Summary get_summary(const Json& j, const char* key) {
  const Json& s = at(j, key);
  return {get_num(s, "min"), get_num(s, "max"), get_num(s, "mean")};
}

Json encode_full(const experiments::FullValues& f) {
  return {{"n", f.n},
          {"depth", f.depth},
          {"q_full", num(f.q_full)},
          {"classical_ref", to_string(f.classical_ref)},
          {"classical_ref_float", to_double(f.classical_ref)},
          {"classical_method", f.classical_method}};
}

experiments::FullValues get_full(const Json& j, const char* key) {
  const Json& f = at(j, key);
  return {get<int>(f, "n"), get<int>(f, "depth"), get_num(f, "q_full"), get_rational(f, "classical_ref"),
          get<std::string>(f, "classical_method")};
}

Json encode_record(const experiments::SampleRecord& r) {
  return {{"index", r.index},
          {"removed", r.removed},
          {"attempts", r.attempts},
          {"r1", num(r.r1)},
          {"r2", num(r.r2)},
          {"r1_quantum", num(r.r1_quantum)},
          {"r2_quantum", num(r.r2_quantum)},
          {"q_restricted1", num(r.q_restricted1)},
          {"q_restricted2", num(r.q_restricted2)},
          {"ratio_class", r.ratio_class},
          {"giant", r.giant},
          {"degenerate", r.degenerate},
          {"prefactors", encode_prefactors(r.prefactors)}};
}

experiments::SampleRecord decode_record(const Json& j) {
  experiments::SampleRecord r;
  r.index = get<std::uint64_t>(j, "index");
  r.removed = get<std::uint32_t>(j, "removed");
  r.attempts = get<std::uint64_t>(j, "attempts");
  r.r1 = get_num(j, "r1");
  r.r2 = get_num(j, "r2");
  r.r1_quantum = get_num(j, "r1_quantum");
  r.r2_quantum = get_num(j, "r2_quantum");
  r.q_restricted1 = get_num(j, "q_restricted1");
  r.q_restricted2 = get_num(j, "q_restricted2");
  r.ratio_class = get<int>(j, "ratio_class");
  r.giant = get<bool>(j, "giant");
  r.degenerate = get<bool>(j, "degenerate");
  r.prefactors = decode_prefactors(at(j, "prefactors"));
  return r;
}

Json encode_n(const experiments::NReport& r) {
  Json sweep = Json::array();
  for (const auto& s : r.epsilon_sweep) {
    sweep.push_back({{"epsilon", num(s.epsilon)},
                     {"e1", encode_estimate(s.e1)},
                     {"e2", encode_estimate(s.e2)},
                     {"e3", encode_estimate(s.e3)}});
  }
  Json theta = Json::array();
  for (const auto& t : r.theta_sweep) {
    theta.push_back({{"theta", num(t.theta)},
                     {"epsilon_prime", num(t.epsilon_prime)},
                     {"estimate", encode_estimate(t.estimate)},
                     {"ratio", opt_num(t.ratio)}});
  }
  Json records = Json::array();
  for (const auto& rec : r.records) records.push_back(encode_record(rec));
  return {{"n", r.n},
          {"full1", encode_full(r.full1)},
          {"full2", encode_full(r.full2)},
          {"samples", r.samples},
          {"used", r.used},
          {"excluded", r.excluded},
          {"attempts", r.attempts},
          {"acceptance_rate", num(r.acceptance_rate)},
          {"e1", encode_estimate(r.e1)},
          {"e2", encode_estimate(r.e2)},
          {"e3", encode_estimate(r.e3)},
          {"foam_events", encode_estimate(r.foam_events)},
          {"e3_foam_ratio", opt_num(r.e3_foam_ratio)},
          {"r1", encode_summary(r.r1)},
          {"r2", encode_summary(r.r2)},
          {"r1_quantum", encode_summary(r.r1_quantum)},
          {"r2_quantum", encode_summary(r.r2_quantum)},
          {"ratio_classes", r.ratio_classes},
          {"event1", encode_estimate(r.event1)},
          {"event2", encode_estimate(r.event2)},
          {"event3", encode_estimate(r.event3)},
          {"event4", encode_estimate(r.event4)},
          {"giant", encode_estimate(r.giant)},
          {"mean_prefactors", encode_prefactors(r.mean_prefactors)},
          {"epsilon_sweep", sweep},
          {"theta_sweep", theta},
          {"records", records}};
}

experiments::NReport decode_n(const Json& j) {
  experiments::NReport r;
  r.n = get<int>(j, "n");
  r.full1 = get_full(j, "full1");
  r.full2 = get_full(j, "full2");
  r.samples = get<std::uint64_t>(j, "samples");
  r.used = get<std::uint64_t>(j, "used");
  r.excluded = get<std::uint64_t>(j, "excluded");
  r.attempts = get<std::uint64_t>(j, "attempts");
  r.acceptance_rate = get_num(j, "acceptance_rate");
  r.e1 = get_estimate(j, "e1");
  r.e2 = get_estimate(j, "e2");
  r.e3 = get_estimate(j, "e3");
  r.foam_events = get_estimate(j, "foam_events");
  r.e3_foam_ratio = get_opt_num(j, "e3_foam_ratio");
  r.r1 = get_summary(j, "r1");
  r.r2 = get_summary(j, "r2");
  r.r1_quantum = get_summary(j, "r1_quantum");
  r.r2_quantum = get_summary(j, "r2_quantum");
  r.ratio_classes = get<std::vector<std::uint64_t>>(j, "ratio_classes");
  r.event1 = get_estimate(j, "event1");
  r.event2 = get_estimate(j, "event2");
  r.event3 = get_estimate(j, "event3");
  r.event4 = get_estimate(j, "event4");
  r.giant = get_estimate(j, "giant");
  r.mean_prefactors = decode_prefactors(at(j, "mean_prefactors"));
  for (const auto& s : at(j, "epsilon_sweep")) {
    r.epsilon_sweep.push_back({get_num(s, "epsilon"), get_estimate(s, "e1"), get_estimate(s, "e2"),
                               get_estimate(s, "e3")});
  }
  for (const auto& t : at(j, "theta_sweep")) {
    r.theta_sweep.push_back({get_num(t, "theta"), get_num(t, "epsilon_prime"), get_estimate(t, "estimate"),
                             get_opt_num(t, "ratio")});
  }
  for (const auto& rec : at(j, "records")) r.records.push_back(decode_record(rec));
  return r;
}

}  // namespace

// Unknown keys are rejected so that a misspelled option in a config file
// cannot silently fall back to its default.
Json encode(const experiments::ExperimentConfig& c) {
  return {{"ns", c.ns},
          {"d", c.d},
          {"samples", c.samples},
          {"removal_law", c.removal_law},
          {"epsilon1", num(c.epsilon1)},
          {"epsilon2", num(c.epsilon2)},
          {"epsilon3", num(c.epsilon3)},
          {"epsilon_grid", num_list(c.epsilon_grid)},
          {"theta_grid", num_list(c.theta_grid)},
          {"seed", c.seed},
          {"giant_threshold", to_string(c.giant_threshold)},
          {"tube_width", c.tube_width},
          {"m", c.m},
          {"foam_constant", num(c.foam_constant)},
          {"band_low", num(c.band_low)},
          {"keep_samples", c.keep_samples},
          {"threads", c.threads},
          {"optimize_starts", c.values.optimize.starts},
          {"optimize_sweeps", c.values.optimize.sweeps},
          {"optimize_seed", c.values.optimize.seed},
          {"search_iterations", c.values.search_iterations}};
}

experiments::ExperimentConfig decode_experiment_config(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("json: experiment config must be an object");
  experiments::ExperimentConfig c;
  const Json defaults = encode(c);
  for (const auto& [key, value] : j.items()) {
    if (!defaults.contains(key)) throw std::invalid_argument("config: unknown key '" + key + "'");
  }
  // Missing keys keep their defaults.
  Json merged = defaults;
  merged.update(j);
  c.ns = get<std::vector<int>>(merged, "ns");
  c.d = get<int>(merged, "d");
  c.samples = get<std::uint64_t>(merged, "samples");
  c.removal_law = get<std::string>(merged, "removal_law");
  c.epsilon1 = get_num(merged, "epsilon1");
  c.epsilon2 = get_num(merged, "epsilon2");
  c.epsilon3 = get_num(merged, "epsilon3");
  c.epsilon_grid = get_num_list(merged, "epsilon_grid");
  c.theta_grid = get_num_list(merged, "theta_grid");
  c.seed = get<std::uint64_t>(merged, "seed");
  c.giant_threshold = get_rational(merged, "giant_threshold");
  c.tube_width = get<int>(merged, "tube_width");
  c.m = get<int>(merged, "m");
  c.foam_constant = get_num(merged, "foam_constant");
  c.band_low = get_num(merged, "band_low");
  c.keep_samples = get<bool>(merged, "keep_samples");
  c.threads = get<unsigned>(merged, "threads");
  c.values.optimize.starts = get<unsigned>(merged, "optimize_starts");
  c.values.optimize.sweeps = get<unsigned>(merged, "optimize_sweeps");
  c.values.optimize.seed = get<std::uint64_t>(merged, "optimize_seed");
  c.values.search_iterations = get<std::uint64_t>(merged, "search_iterations");
  return c;
}

Json encode(const experiments::ExperimentReport& r) {
  Json per_n = Json::array();
  for (const auto& n : r.per_n) per_n.push_back(encode_n(n));
  return {{"config", encode(r.config)}, {"per_n", per_n}};
}

experiments::ExperimentReport decode_experiment_report(const Json& j) {
  experiments::ExperimentReport r;
  r.config = decode_experiment_config(at(j, "config"));
  for (const auto& n : at(j, "per_n")) r.per_n.push_back(decode_n(n));
  return r;
}

Json encode(const experiments::FoamConfig& c) {
  return {{"d", c.d},
          {"samples", c.samples},
          {"max_preremoved", c.max_preremoved},
          {"constant", num(c.constant)},
          {"seed", c.seed},
          {"threads", c.threads}};
}

experiments::FoamConfig decode_foam_config(const Json& j) {
  experiments::FoamConfig c;
  c.d = get<int>(j, "d");
  c.samples = get<std::uint64_t>(j, "samples");
  c.max_preremoved = get<std::uint32_t>(j, "max_preremoved");
  c.constant = get_num(j, "constant");
  c.seed = get<std::uint64_t>(j, "seed");
  c.threads = get<unsigned>(j, "threads");
  return c;
}

Json encode(const experiments::FoamReport& r) {
  return {{"config", encode(r.config)},
          {"p1", encode_estimate(r.p1)},
          {"p2", encode_estimate(r.p2)},
          {"p3", encode_estimate(r.p3)},
          {"p4", encode_estimate(r.p4)},
          {"p5", r.p5 ? encode_estimate(*r.p5) : Json(nullptr)},
          {"ind1", encode_estimate(r.ind1)},
          {"ind2", encode_estimate(r.ind2)},
          {"ind3", encode_estimate(r.ind3)},
          {"mean_pair_area", num_list(r.mean_pair_area)}};
}

experiments::FoamReport decode_foam_report(const Json& j) {
  experiments::FoamReport r;
  r.config = decode_foam_config(at(j, "config"));
  r.p1 = get_estimate(j, "p1");
  r.p2 = get_estimate(j, "p2");
  r.p3 = get_estimate(j, "p3");
  r.p4 = get_estimate(j, "p4");
  if (!at(j, "p5").is_null()) r.p5 = get_estimate(j, "p5");
  r.ind1 = get_estimate(j, "ind1");
  r.ind2 = get_estimate(j, "ind2");
  r.ind3 = get_estimate(j, "ind3");
  r.mean_pair_area = get_num_list(j, "mean_pair_area");
  return r;
}

Json encode(const RunManifest& m) {
  Json timings = Json::array();
  for (const auto& t : m.timings) timings.push_back({{"phase", t.phase}, {"seconds", num(t.seconds)}});
  return {{"schema_version", kSchemaVersion},
          {"command", m.command},
          {"parameters", m.parameters},
          {"seed", m.seed},
          {"version", m.version},
          {"timings", timings},
          {"outputs", m.outputs}};
}

RunManifest decode_manifest(const Json& j) {
  if (get<int>(j, "schema_version") != kSchemaVersion) throw std::invalid_argument("json: unsupported manifest schema");
  RunManifest m;
  m.command = get<std::string>(j, "command");
  m.parameters = at(j, "parameters");
  m.seed = get<std::uint64_t>(j, "seed");
  m.version = get<std::string>(j, "version");
  for (const auto& t : at(j, "timings")) m.timings.push_back({get<std::string>(t, "phase"), get_num(t, "seconds")});
  m.outputs = get<std::vector<std::string>>(j, "outputs");
  return m;
}

Json envelope(const std::string& kind, const std::string& manifest_path, Json result) {
  return {{"schema_version", kSchemaVersion}, {"kind", kind}, {"manifest", manifest_path}, {"result", std::move(result)}};
}

Json open_envelope(const Json& j, const std::string& kind) {
  if (get<int>(j, "schema_version") != kSchemaVersion) throw std::invalid_argument("json: unsupported schema version");
  if (get<std::string>(j, "kind") != kind) {
    throw std::invalid_argument("json: expected a '" + kind + "' report, got '" + get<std::string>(j, "kind") + "'");
  }
  return at(j, "result");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace oddcycle::io
