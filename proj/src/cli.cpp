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

#include "oddcycle/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "oddcycle/blocker.hpp"
#include "oddcycle/classical.hpp"
#include "oddcycle/contraction.hpp"
#include "oddcycle/experiment.hpp"
#include "oddcycle/growth.hpp"
#include "oddcycle/norms.hpp"
#include "oddcycle/pearls.hpp"
#include "oddcycle/quantum.hpp"
#include "oddcycle/rng.hpp"
#include "oddcycle/serialize.hpp"

namespace oddcycle::cli {

namespace {

using io::Json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computation that declined to run, e.g. over budget.
struct Refusal : std::runtime_error {
  Refusal(std::string reason, Json details)
      : std::runtime_error(reason), reason(std::move(reason)), details(std::move(details)) {}
  std::string reason;
  Json details;
};

struct Globals {
  std::string out_dir;
  std::uint64_t seed = 42;
  unsigned threads = 0;
  std::string format = "json";
  std::string config;
};

class Clock {
 public:
  void mark(const std::string& phase) {
    const auto now = std::chrono::steady_clock::now();
    timings_.push_back({phase, std::chrono::duration<double>(now - last_).count()});
    last_ = now;
  }
  const std::vector<io::PhaseTiming>& timings() const { return timings_; }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
  std::vector<io::PhaseTiming> timings_;
};

// Each subcommand produces named artifacts; the driver writes them.
struct Artifact {
  std::string file;
  std::string text;
};

struct Outcome {
  std::string kind;
  Json result;
  std::vector<Artifact> extra;  // CSV sweeps and the like
  std::optional<Refusal> refusal;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

template <typename T>
std::vector<T> parse_list(const std::string& text, const char* what) {
  std::vector<T> out;
  for (const auto& item : split(text, ',')) {
    std::istringstream in(item);
    T v{};
    if (!(in >> v) || !(in >> std::ws).eof()) {
      throw UsageError(std::string(what) + ": cannot parse '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw UsageError(std::string(what) + ": empty list");
  return out;
}

std::string csv_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// One row per leaf, keyed by JSON pointer.
std::string flat_csv(const Json& j) {
  std::string out = "key,value\n";
  const Json flat = j.flatten();
  for (const auto& [key, value] : flat.items()) {
    std::string v;
    if (value.is_number_float()) {
      v = csv_number(value.get<double>());
    } else if (value.is_string()) {
      v = value.get<std::string>();
    } else {
      v = value.dump();
    }
    out += csv_escape(key) + "," + csv_escape(v) + "\n";
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw UsageError("config file '" + path + "' is not valid JSON: " + e.what());
  }
}

// Config file values override defaults; unknown keys are an error.
Json merge_config(Json defaults, const Json& file) {
  if (!file.is_object()) throw UsageError("config file must hold a JSON object");
  for (const auto& [key, value] : file.items()) {
    if (!defaults.contains(key)) throw UsageError("config: unknown key '" + key + "'");
  }
  defaults.update(file);
  return defaults;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw UsageError("cannot write '" + path.string() + "'");
}

Json parameter_echo(const CLI::App& app) {
  Json params = Json::object();
  for (const CLI::Option* opt : app.get_options()) {
    const std::string name = opt->get_name(false, true);
    if (name.empty() || opt->get_lnames().empty() || opt->get_lnames().front() == "help") continue;
    const std::string key = opt->get_lnames().front();
    if (opt->get_expected_max() == 0) {
      params[key] = opt->count() > 0;
    } else if (opt->count() > 0) {
      params[key] = opt->as<std::string>();
    } else {
      params[key] = opt->get_default_str();
    }
  }
  return params;
}

game::GameSpec build_game(const std::string& name, int n, int d, const std::string& delta) {
  if (name == "odd-cycle") {
    if (!delta.empty()) throw UsageError("--delta applies to chsh only");
    return game::make_odd_cycle_game(n, d);
  }
  if (name == "chsh") {
    std::optional<game::DeltaTable> table;
    if (!delta.empty()) {
      const auto v = parse_list<int>(delta, "--delta");
      if (v.size() != 4) throw UsageError("--delta needs four entries d00,d01,d10,d11");
      table = game::DeltaTable{{v[0], v[1]}, {v[2], v[3]}};
    }
    return game::make_chsh_game(d, table);
  }
  throw UsageError("unknown game '" + name + "' (expected odd-cycle or chsh)");
}

Json value_outcome(const game::ValueReport& r) {
  return io::encode(r);
}

void refuse_if_intractable(Outcome& o, const game::ValueReport& r) {
  if (r.status == game::ValueStatus::kIntractable) {
    o.refusal = Refusal("budget", {{"status", "intractable"}, {"reason", "budget"}, {"note", r.note}});
  }
}

// ---- value -----------------------------------------------------------------

struct ValueArgs {
  std::string game = "odd-cycle";
  int n = 3;
  int d = 1;
  std::string method = "exhaustive";
  std::uint64_t iterations = 1'000'000;
  std::uint64_t budget = std::uint64_t{1} << 26;
  std::string delta;
  bool emit_game = false;
};

game::ValueReport compute_value(const game::GameSpec& g, const std::string& method, std::uint64_t budget,
                                std::uint64_t iterations, const Globals& globals) {
  game::ExactOptions eo;
  eo.budget = budget;
  eo.threads = globals.threads;
  if (method == "exhaustive") return game::classical_value_exact(g, game::ExactMode::kFull, eo);
  if (method == "best-response") return game::classical_value_exact(g, game::ExactMode::kAliceBestResponse, eo);
  if (method == "local-search") {
    game::SearchOptions so;
    so.threads = globals.threads;
    return game::classical_value_search(g, globals.seed, iterations, so);
  }
  throw UsageError("unknown method '" + method + "' (expected exhaustive, best-response or local-search)");
}

Outcome run_value(const ValueArgs& a, const Globals& globals) {
  const auto g = build_game(a.game, a.n, a.d, a.delta);
  Outcome o;
  o.kind = "value";
  const auto r = compute_value(g, a.method, a.budget, a.iterations, globals);
  o.result = {{"game", g.name()}, {"n", a.n}, {"d", a.d}, {"report", value_outcome(r)}};
  if (a.emit_game) o.extra.push_back({"game.json", io::dump(io::encode(g))});
  refuse_if_intractable(o, r);
  return o;
}

// ---- qvalue ----------------------------------------------------------------

struct QValueArgs {
  std::string game = "odd-cycle";
  int n = 3;
  int d = 1;
  double theta = 0.0;
  std::string strategy = "canonical";
  unsigned starts = 8;
  unsigned sweeps = 200;
  double epsilon = 0.05;
  std::string delta;
};

Outcome run_qvalue(const QValueArgs& a, const Globals& globals) {
  const auto g = build_game(a.game, a.n, a.d, a.delta);
  quantum::OptimizeOptions oo;
  oo.starts = a.starts;
  oo.sweeps = a.sweeps;
  oo.seed = globals.seed;
  oo.threads = globals.threads;
  quantum::QubitStrategy qs;
  std::optional<unsigned> best_start;
  if (a.strategy == "canonical") {
    if (a.game != "odd-cycle") throw UsageError("the canonical strategy exists for odd-cycle only");
    qs = quantum::canonical_odd_cycle_strategy(a.n, a.theta, a.d);
  } else if (a.strategy == "optimize") {
    std::optional<quantum::QubitStrategy> init;
    if (a.game == "odd-cycle") init = quantum::canonical_odd_cycle_strategy(a.n, a.theta, a.d);
    const auto r = quantum::optimize_angles(g, init, oo);
    qs = r.strategy;
    best_start = r.best_start;
  } else {
    throw UsageError("unknown strategy '" + a.strategy + "' (expected canonical or optimize)");
  }
  const double p = quantum::win_probability(g, qs);
  const auto bias = quantum::bias_and_approximality(g, qs, a.epsilon);
  Outcome o;
  o.kind = "qvalue";
  o.result = {{"game", g.name()},
              {"n", a.n},
              {"d", a.d},
              {"strategy_kind", a.strategy},
              {"win_probability", p},
              {"bias", 2.0 * p - 1.0},
              {"approximality", io::encode(bias)},
              {"strategy", io::encode(qs)}};
  if (best_start) o.result["best_start"] = *best_start;
  if (a.game == "odd-cycle" && a.d == 1) {
    const double classical = 1.0 - 1.0 / (2.0 * a.n);
    o.result["classical_value"] = classical;
    o.result["advantage"] = p - classical;
  }
  return o;
}

// ---- repeat ----------------------------------------------------------------

struct RepeatArgs {
  int n = 3;
  int d = 2;
  std::string method = "best-response";
  std::uint64_t iterations = 1'000'000;
  std::uint64_t budget = std::uint64_t{1} << 26;
};

Outcome run_repeat(const RepeatArgs& a, const Globals& globals) {
  const auto g = game::make_odd_cycle_game(a.n, a.d);
  const auto r = compute_value(g, a.method, a.budget, a.iterations, globals);
  Outcome o;
  o.kind = "repeat";
  o.result = {{"game", g.name()}, {"n", a.n}, {"d", a.d}, {"report", value_outcome(r)}};
  if (r.status == game::ValueStatus::kOk) {
    o.result["decay"] = io::encode(game::repetition_decay_check(a.n, a.d, r.value_double()));
  }
  o.result["canonical_quantum"] =
      quantum::win_probability(g, quantum::canonical_odd_cycle_strategy(a.n, 0.0, a.d));
  refuse_if_intractable(o, r);
  return o;
}

// ---- pearls ----------------------------------------------------------------

struct PearlsArgs {
  int n = 3;
  int d = 1;
  std::string strategy = "mod2";
  bool grow = false;
  std::string law = "cuts-plus-uniform:0-3";
  std::uint32_t max_points = 1000;
};

Outcome run_pearls(const PearlsArgs& a, const Globals& globals) {
  Outcome o;
  o.kind = "pearls";
  if (a.grow) {
    if (a.d != 2) throw UsageError("--grow samples torical graphs with d = 2");
    if (a.n < 3 || a.n % 2 == 0) throw std::invalid_argument("pearls: n must be odd and >= 3");
    Rng rng = make_rng(globals.seed, 0);
    const auto sample = experiments::sample_torical_graph(a.n, 2, experiments::RemovalLaw::parse(a.law), rng);
    const auto alice = pearls::labeling_strategy(sample.graph);
    if (!alice) throw std::runtime_error("pearls: sampled graph has no consistent labeling");
    const auto growth = pearls::grow_consistent_cycle(sample.graph, *alice, globals.seed, a.max_points);
    o.result = {{"n", a.n},
                {"d", a.d},
                {"graph", io::encode(sample.graph)},
                {"alice", *alice},
                {"growth", io::encode(growth)}};
    return o;
  }
  const auto g = game::make_odd_cycle_game(a.n, a.d);
  pearls::AliceTable alice(g.alice_count());
  if (a.strategy == "mod2") {
    for (std::uint32_t x = 0; x < g.alice_count(); ++x) {
      const auto coords = game::decode_question(x, g.radix(), g.depth());
      std::uint32_t ans = 0;
      for (std::size_t i = 0; i < coords.size(); ++i) ans |= (coords[i] & 1U) << i;
      alice[x] = ans;
    }
  } else if (a.strategy == "random") {
    Rng rng = make_rng(globals.seed, 0);
    for (auto& ans : alice) ans = static_cast<std::uint32_t>(uniform_index(rng, g.answer_count()));
  } else {
    throw UsageError("unknown strategy '" + a.strategy + "' (expected mod2 or random)");
  }
  const auto pearl = pearls::build_pearl(alice, a.n, a.d);
  const auto via = pearls::value_via_regions(alice, a.n, a.d);
  const game::DeterministicStrategy s{alice, game::best_response_bob(g, alice)};
  const auto direct = game::evaluate_strategy(g, s);
  o.result = {{"n", a.n},
              {"d", a.d},
              {"alice", alice},
              {"pearl", io::encode(pearl)},
              {"value_via_regions", to_string(via)},
              {"value_best_response", to_string(direct)},
              {"agree", via == direct}};
  return o;
}

// ---- blocker ---------------------------------------------------------------

struct BlockerArgs {
  int n = 3;
  int d = 2;
  std::string mode = "all-nontrivial";
  std::string method = "exact";
  std::string remove;
  std::uint64_t budget = 2'000'000;
  unsigned restarts = 16;
  bool verify_only = false;
};

Outcome run_blocker(const BlockerArgs& a, const Globals& globals) {
  torus::TorusGraph g(a.n, a.d);
  if (!a.remove.empty()) {
    for (const auto& item : split(a.remove, ';')) {
      const auto parts = parse_list<long long>(item, "--remove");
      if (parts.size() != 2 || parts[0] < 0 || parts[0] >= g.vertex_count() || parts[1] < 0 || parts[1] >= a.d) {
        throw UsageError("--remove entries are 'vertex,axis' separated by ';'");
      }
      g.remove(torus::Edge{static_cast<torus::Vertex>(parts[0]), static_cast<int>(parts[1])});
    }
  }
  const auto mode = torus::parse_block_mode(a.mode);
  Outcome o;
  o.kind = "blocker";
  o.result = {{"n", a.n}, {"d", a.d}, {"mode", torus::to_string(mode)}, {"graph", io::encode(g)}};
  if (a.verify_only) {
    o.result["certificate"] = io::encode(torus::verify_blocker(g, mode));
    return o;
  }
  torus::BlockerMethod method;
  if (a.method == "exact") {
    method = torus::BlockerMethod::kExact;
  } else if (a.method == "heuristic") {
    method = torus::BlockerMethod::kHeuristic;
  } else {
    throw UsageError("unknown method '" + a.method + "' (expected exact or heuristic)");
  }
  torus::BlockerOptions bo;
  bo.node_budget = a.budget;
  bo.restarts = a.restarts;
  bo.seed = globals.seed;
  bo.threads = globals.threads;
  const auto r = torus::min_blocker(g, mode, method, bo);
  o.result["result"] = io::encode(r);
  if (r.refused) {
    o.refusal = Refusal("budget", {{"status", "refused"}, {"reason", "budget"}, {"note", r.note}});
    return o;
  }
  torus::TorusGraph blocked = g;
  for (auto e : r.edges) {
    if (blocked.alive(e)) blocked.remove_id(e);
  }
  o.result["certificate"] = io::encode(torus::verify_blocker(blocked, mode));
  return o;
}

// ---- foam ------------------------------------------------------------------

struct FoamArgs {
  int d = 2;
  std::uint64_t samples = 200;
  std::uint32_t max_preremoved = 2;
  double constant = 2.0;
};

Outcome run_foam(const FoamArgs& a, const CLI::App& sub, const Globals& globals, const CLI::App& root) {
  experiments::FoamConfig c;
  if (!globals.config.empty()) {
    c = io::decode_foam_config(merge_config(io::encode(c), read_json_file(globals.config)));
  }
  if (sub.count("--d") || globals.config.empty()) c.d = a.d;
  if (sub.count("--samples") || globals.config.empty()) c.samples = a.samples;
  if (sub.count("--max-preremoved") || globals.config.empty()) c.max_preremoved = a.max_preremoved;
  if (sub.count("--constant") || globals.config.empty()) c.constant = a.constant;
  if (root.count("--seed") || globals.config.empty()) c.seed = globals.seed;
  c.threads = globals.threads;
  Outcome o;
  o.kind = "foam";
  o.result = io::encode(experiments::foam_probes(c));
  return o;
}

// ---- norms -----------------------------------------------------------------

struct NormsArgs {
  bool diamond = false;
  bool gaps = false;
  bool integral = false;
  std::string vector;
  bool monte_carlo = false;
  std::uint64_t samples = 10000;
  std::string universe;
  std::string qa;
  std::string qb;
  std::string steps;
  int n = 3;
  double epsilon = 0.05;
};

Outcome run_norms(const NormsArgs& a, const Globals& globals) {
  const int modes = int{a.diamond} + int{a.gaps} + int{a.integral};
  if (modes != 1) throw UsageError("norms: pick exactly one of --diamond, --gaps, --integral");
  Outcome o;
  o.kind = "norms";
  if (a.diamond) {
    if (a.vector.empty()) throw UsageError("--diamond needs --vector");
    const auto v = parse_list<double>(a.vector, "--vector");
    const auto method = a.monte_carlo ? norms::DiamondMethod::kMonteCarlo : norms::DiamondMethod::kExact;
    o.result = {{"vector", v}, {"method", a.monte_carlo ? "monte-carlo" : "exact"},
                {"diamond", io::encode(norms::diamond_norm(v, method, a.samples, globals.seed))}};
  } else if (a.gaps) {
    const auto bounds = parse_list<int>(a.universe, "--universe");
    if (bounds.size() != 2) throw UsageError("--universe is 'lo,hi'");
    auto members = [](const std::string& text) {
      return text.empty() ? std::vector<int>{} : parse_list<int>(text, "--qa/--qb");
    };
    const norms::SupportingSet qa{bounds[0], bounds[1], members(a.qa)};
    const norms::SupportingSet qb{bounds[0], bounds[1], members(a.qb)};
    o.result = {{"universe", bounds}, {"qa", qa.members}, {"qb", qb.members},
                {"gaps", io::encode(norms::gap_overlap(qa, qb))}};
  } else {
    if (a.steps.empty()) throw UsageError("--integral needs --steps");
    std::vector<std::vector<int>> steps;
    for (const auto& s : split(a.steps, ';')) steps.push_back(parse_list<int>(s, "--steps"));
    o.result = {{"n", a.n}, {"epsilon", a.epsilon}, {"steps", steps},
                {"integral", io::encode(norms::blocker_integral_bound(steps, a.n, a.epsilon))}};
  }
  return o;
}

// ---- experiment ------------------------------------------------------------

struct ExperimentArgs {
  std::string ns;
  int d = 2;
  std::uint64_t samples = 500;
  std::string law;
  double epsilon = 0.05;
  bool keep_samples = false;
};

Outcome run_experiment(const ExperimentArgs& a, const CLI::App& sub, const Globals& globals,
                       const CLI::App& root) {
  experiments::ExperimentConfig c;
  if (!globals.config.empty()) {
    c = io::decode_experiment_config(merge_config(io::encode(c), read_json_file(globals.config)));
  }
  if (sub.count("--ns")) c.ns = parse_list<int>(a.ns, "--ns");
  if (sub.count("--d")) c.d = a.d;
  if (sub.count("--samples")) c.samples = a.samples;
  if (sub.count("--law")) c.removal_law = a.law;
  if (sub.count("--epsilon")) c.epsilon1 = c.epsilon2 = c.epsilon3 = a.epsilon;
  if (sub.count("--keep-samples")) c.keep_samples = true;
  if (root.count("--seed") || globals.config.empty()) c.seed = globals.seed;
  if (root.count("--threads")) c.threads = globals.threads;
  const auto report = experiments::estimate_events(c);
  Outcome o;
  o.kind = "experiment";
  o.result = io::encode(report);
  for (const auto& n : report.per_n) {
    o.extra.push_back({"theta_sweep_n" + std::to_string(n.n) + ".csv", experiments::theta_sweep_csv(n)});
  }
  return o;
}

std::filesystem::path resolve_out_dir(const Globals& g) {
  if (!g.out_dir.empty()) return g.out_dir;
  if (const char* env = std::getenv(kOutDirEnv); env != nullptr && *env != '\0') return env;
  return "oddcycle-out";
}

int emit(const std::string& command, const Outcome& o, const CLI::App& root, const CLI::App& sub,
         const Globals& globals, Clock& clock, std::ostream& out) {
  const auto dir = resolve_out_dir(globals);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw UsageError("cannot create output directory '" + dir.string() + "': " + ec.message());

  const std::string manifest_name = command + ".manifest.json";
  std::vector<Artifact> files;
  Json payload = o.result;
  if (o.refusal) payload = {{"refusal", o.refusal->details}, {"partial", o.result}};
  const Json report = io::envelope(o.kind, manifest_name, payload);
  if (globals.format == "json") {
    files.push_back({command + ".json", io::dump(report)});
  } else {
    files.push_back({command + ".csv", "# manifest: " + manifest_name + "\n" + flat_csv(payload)});
  }
  for (const auto& e : o.extra) {
    const bool csv = e.file.size() > 4 && e.file.compare(e.file.size() - 4, 4, ".csv") == 0;
    files.push_back({e.file, csv ? "# manifest: " + manifest_name + "\n" + e.text : e.text});
  }
  clock.mark("compute");

  io::RunManifest manifest;
  manifest.command = command;
  manifest.parameters = parameter_echo(root);
  manifest.parameters["subcommand"] = parameter_echo(sub);
  manifest.seed = globals.seed;
  manifest.version = ODDCYCLE_VERSION;
  for (const auto& f : files) {
    write_file(dir / f.file, f.text);
    manifest.outputs.push_back((dir / f.file).string());
  }
  clock.mark("write");
  manifest.timings = clock.timings();
  write_file(dir / manifest_name, io::dump(io::encode(manifest)));

  out << (globals.format == "json" ? io::dump(report) : files.front().text);
  return o.refusal ? kExitRefused : kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Odd-cycle and CHSH nonlocal games, torus blockers and foam estimators", "oddcycle"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--out", globals.out_dir, std::string("Output directory (default $") + kOutDirEnv + " or ./oddcycle-out)");
  app.add_option("--seed", globals.seed, "Seed for every random choice")->capture_default_str();
  app.add_option("--threads", globals.threads, "Worker threads; 0 uses the machine's parallelism")->capture_default_str();
  app.add_option("--format", globals.format, "Report format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  app.add_option("--config", globals.config, "JSON config file (experiment, foam); flags take precedence");

  ValueArgs va;
  auto* value = app.add_subcommand("value", "Classical value of a game");
  value->add_option("--game", va.game, "odd-cycle or chsh")->capture_default_str();
  value->add_option("--n", va.n, "Cycle length")->capture_default_str();
  value->add_option("--d", va.d, "Number of parallel rounds")->capture_default_str();
  value->add_option("--method", va.method, "exhaustive, best-response or local-search")->capture_default_str();
  value->add_option("--iterations", va.iterations, "Local-search iterations")->capture_default_str();
  value->add_option("--budget", va.budget, "Maximum strategy tables to enumerate")->capture_default_str();
  value->add_option("--delta", va.delta, "CHSH twist table d00,d01,d10,d11");
  value->add_flag("--emit-game", va.emit_game, "Also write the game as game.json");

  QValueArgs qa;
  auto* qvalue = app.add_subcommand("qvalue", "Quantum win probability with qubit strategies");
  qvalue->add_option("--game", qa.game, "odd-cycle or chsh")->capture_default_str();
  qvalue->add_option("--n", qa.n, "Cycle length")->capture_default_str();
  qvalue->add_option("--d", qa.d, "Number of parallel rounds")->capture_default_str();
  qvalue->add_option("--theta", qa.theta, "Phase of the shared state")->capture_default_str();
  qvalue->add_option("--strategy", qa.strategy, "canonical or optimize")->capture_default_str();
  qvalue->add_option("--starts", qa.starts, "Optimizer starts")->capture_default_str();
  qvalue->add_option("--sweeps", qa.sweeps, "Optimizer sweeps per start")->capture_default_str();
  qvalue->add_option("--epsilon", qa.epsilon, "Approximality tolerance")->capture_default_str();
  qvalue->add_option("--delta", qa.delta, "CHSH twist table d00,d01,d10,d11");

  RepeatArgs ra;
  auto* repeat = app.add_subcommand("repeat", "Parallel-repeated odd-cycle game");
  repeat->add_option("--n", ra.n, "Cycle length")->capture_default_str();
  repeat->add_option("--d", ra.d, "Number of parallel rounds")->capture_default_str();
  repeat->add_option("--method", ra.method, "exhaustive, best-response or local-search")->capture_default_str();
  repeat->add_option("--iterations", ra.iterations, "Local-search iterations")->capture_default_str();
  repeat->add_option("--budget", ra.budget, "Maximum strategy tables to enumerate")->capture_default_str();

  PearlsArgs pa;
  auto* pearls_cmd = app.add_subcommand("pearls", "Consistent regions, pearls and cycle growth");
  pearls_cmd->add_option("--n", pa.n, "Cycle length")->capture_default_str();
  pearls_cmd->add_option("--d", pa.d, "Number of parallel rounds")->capture_default_str();
  pearls_cmd->add_option("--strategy", pa.strategy, "mod2 or random")->capture_default_str();
  pearls_cmd->add_flag("--grow", pa.grow, "Grow a consistent cycle on a sampled torical graph");
  pearls_cmd->add_option("--law", pa.law, "Removal law for --grow")->capture_default_str();
  pearls_cmd->add_option("--max-points", pa.max_points, "Point cap for --grow")->capture_default_str();

  BlockerArgs ba;
  auto* blocker = app.add_subcommand("blocker", "Minimum blockers on the torus grid");
  blocker->add_option("--n", ba.n, "Side length")->capture_default_str();
  blocker->add_option("--d", ba.d, "Dimension")->capture_default_str();
  blocker->add_option("--mode", ba.mode, "all-nontrivial or odd-only")->capture_default_str();
  blocker->add_option("--method", ba.method, "exact or heuristic")->capture_default_str();
  blocker->add_option("--remove", ba.remove, "Edges removed up front, 'v,axis;v,axis'");
  blocker->add_option("--budget", ba.budget, "Search nodes per root branch")->capture_default_str();
  blocker->add_option("--restarts", ba.restarts, "Heuristic restarts")->capture_default_str();
  blocker->add_flag("--verify", ba.verify_only, "Only check whether the given removals block");

  FoamArgs fa;
  auto* foam = app.add_subcommand("foam", "Foam probability probes on T_2^d");
  foam->add_option("--d", fa.d, "2 or 3")->capture_default_str();
  foam->add_option("--samples", fa.samples, "Samples")->capture_default_str();
  foam->add_option("--max-preremoved", fa.max_preremoved, "Random edges removed before each probe")->capture_default_str();
  foam->add_option("--constant", fa.constant, "Constant C in C n^d")->capture_default_str();

  NormsArgs na;
  auto* norms_cmd = app.add_subcommand("norms", "Diamond norms, gap overlaps and blocker integrals");
  norms_cmd->add_flag("--diamond", na.diamond, "Diamond norm of --vector");
  norms_cmd->add_flag("--gaps", na.gaps, "Gap overlap of --qa and --qb inside --universe");
  norms_cmd->add_flag("--integral", na.integral, "Blocker integral bound of --steps");
  norms_cmd->add_option("--vector", na.vector, "Comma-separated reals");
  norms_cmd->add_flag("--monte-carlo", na.monte_carlo, "Sample signs instead of enumerating");
  norms_cmd->add_option("--samples", na.samples, "Monte Carlo samples")->capture_default_str();
  norms_cmd->add_option("--universe", na.universe, "lo,hi");
  norms_cmd->add_option("--qa", na.qa, "Members of Alice's supporting set");
  norms_cmd->add_option("--qb", na.qb, "Members of Bob's supporting set");
  norms_cmd->add_option("--steps", na.steps, "Closed walk steps 'dx,dy;dx,dy;...'");
  norms_cmd->add_option("--n", na.n, "Side length for --integral")->capture_default_str();
  norms_cmd->add_option("--epsilon", na.epsilon, "Epsilon for --integral")->capture_default_str();

  ExperimentArgs ea;
  auto* experiment = app.add_subcommand("experiment", "Seeded Monte Carlo estimators on torical graphs");
  experiment->add_option("--ns", ea.ns, "Comma-separated odd n values (default 3,5)");
  experiment->add_option("--d", ea.d, "Depth")->capture_default_str();
  experiment->add_option("--samples", ea.samples, "Samples per n")->capture_default_str();
  experiment->add_option("--law", ea.law, "Removal law (default cuts-plus-uniform:0-3)");
  experiment->add_option("--epsilon", ea.epsilon, "Sets all three event epsilons")->capture_default_str();
  experiment->add_flag("--keep-samples", ea.keep_samples, "Include per-sample records");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run 'oddcycle --help' for usage\n";
    return kExitUsage;
  }

  const CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  try {
    if (!globals.config.empty() && command != "experiment" && command != "foam") {
      throw UsageError("--config applies to experiment and foam only");
    }
    Clock clock;
    Outcome o;
    if (command == "value") o = run_value(va, globals);
    if (command == "qvalue") o = run_qvalue(qa, globals);
    if (command == "repeat") o = run_repeat(ra, globals);
    if (command == "pearls") o = run_pearls(pa, globals);
    if (command == "blocker") o = run_blocker(ba, globals);
    if (command == "foam") o = run_foam(fa, *sub, globals, app);
    if (command == "norms") o = run_norms(na, globals);
    if (command == "experiment") o = run_experiment(ea, *sub, globals, app);
    const int code = emit(command, o, app, *sub, globals, clock, out);
    if (o.refusal) err << "refused: " << o.refusal->reason << ": " << o.refusal->details.value("note", "") << "\n";
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "refused: " << e.what() << "\n";
    return kExitRefused;
  }
}

int run(int argc, const char* const* argv) { return run(argc, argv, std::cout, std::cerr); }

}  // namespace oddcycle::cli
