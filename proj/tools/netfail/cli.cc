// Copyright 2026 The netfail Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "netfail/cascade.h"
#include "netfail/errors.h"
#include "netfail/frontal.h"
#include "netfail/graph_io.h"
#include "netfail/markov.h"
#include "netfail/parallel.h"
#include "netfail/protection.h"
#include "netfail/random_graph.h"
#include "netfail/rng.h"
#include "netfail/spectral.h"

namespace netfail::cli {
namespace {

using nlohmann::json;

std::string num(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

json steps_json(Steps s) { return s == kInfinite ? json(nullptr) : json(s); }

std::vector<double> parse_doubles(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size())
      throw std::invalid_argument(std::string("bad value in ") + what + ": '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument(std::string(what) + " is empty");
  return out;
}

std::vector<VertexId> parse_vertices(const std::string& text, const char* what) {
  std::vector<VertexId> out;
  for (double v : parse_doubles(text, what)) {
    if (v < 0 || v != std::floor(v) || v > 4e9)
      throw std::invalid_argument(std::string("bad vertex id in ") + what);
    out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

// What a subcommand produced: the JSON report and its CSV companion.
struct Output {
  json report;
  std::string csv;
};

struct Globals {
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string format = "both";
  std::string output;
  int threads = 0;
};

// ---------------------------------------------------------------- cascade

struct CascadeArgs {
  std::string graph;
  std::string seeds;
  std::optional<std::size_t> max_t;
};

Output cmd_cascade(const CascadeArgs& a) {
  const Graph g = io::read_graph_file(a.graph);
  const auto seeds = parse_vertices(a.seeds, "--seeds");
  const auto timeline = cascade::simulate_cascade(g, seeds);
  const bool connected = is_connected(g);

  json r;
  r["n"] = g.vertex_count();
  r["edges"] = g.edge_count();
  r["connected"] = connected;
  r["seeds"] = timeline.seeds;
  r["total_time"] = steps_json(timeline.total_time);
  r["damaged_count"] = timeline.damaged_count();
  if (connected && g.vertex_count() > 0) {
    const auto lo = cascade::min_damage_time(g);
    const auto hi = cascade::max_damage_time(g);
    r["t_min"] = lo.steps;
    r["argmin"] = lo.vertex;
    r["t_max"] = hi.steps;
    r["argmax"] = hi.vertex;
  } else {
    r["t_min"] = r["argmin"] = r["t_max"] = r["argmax"] = nullptr;
    r["warning"] = "graph is disconnected; some vertices are never damaged";
  }
  std::size_t shown = timeline.waves.size();
  if (a.max_t && *a.max_t + 1 < shown) shown = *a.max_t + 1;
  r["max_t"] = a.max_t ? json(*a.max_t) : json(nullptr);
  r["truncated"] = shown < timeline.waves.size();

  std::ostringstream csv;
  csv << "step,newly_damaged_count,cumulative_count,vertex_list\n";
  std::size_t cumulative = 0;
  for (std::size_t s = 0; s < shown; ++s) {
    cumulative += timeline.waves[s].size();
    csv << s << ',' << timeline.waves[s].size() << ',' << cumulative << ',';
    for (std::size_t i = 0; i < timeline.waves[s].size(); ++i)
      csv << (i ? " " : "") << timeline.waves[s][i];
    csv << '\n';
  }
  return {r, csv.str()};
}

// ---------------------------------------------------------------- protect

struct ProtectArgs {
  std::string graph;
  std::string mode = "exact";
  std::size_t budget = protection::kDefaultTreeCap;
};

Output cmd_protect(const ProtectArgs& a, std::uint64_t seed) {
  const Graph g = io::read_graph_file(a.graph);
  const auto mode = a.mode == "exact" ? protection::Mode::kExact : protection::Mode::kSampled;
  if (mode == protection::Mode::kSampled && a.budget == 0)
    throw std::invalid_argument("--budget must be >= 1 in sampled mode");
  const auto plan = protection::select_protection_tree(g, mode, a.budget, seed);

  json edges = json::array();
  for (auto [u, v] : plan.chosen_tree.tree.edges()) edges.push_back({u, v});
  json r;
  r["n"] = g.vertex_count();
  r["t_tilde"] = plan.t_tilde;
  r["center"] = plan.protected_vertex;
  r["tree_edges"] = edges;
  r["tree_index"] = plan.chosen_tree.index;
  r["mode"] = a.mode;
  r["trees_examined"] = plan.trees_examined;
  r["lower_bound"] = plan.lower_bound;

  std::ostringstream csv;
  csv << "u,v\n";
  for (auto [u, v] : plan.chosen_tree.tree.edges()) csv << u << ',' << v << '\n';
  return {r, csv.str()};
}

// ----------------------------------------------------------------- markov

struct MarkovArgs {
  std::string graph;
  std::string matrix;
  std::string model = "exact";
  double rate = 1.0;
  std::string times = "1";
  std::size_t trials = 10000;
  std::string seeds = "0";
  std::string initial;
  std::string kind = "generator";
  std::size_t limit = markov::kExactChainLimit;
};

json rate_or_null(const Matrix& m) {
  if (m.rows() == 0 || max_abs(m) == 0.0) return nullptr;
  try {
    return markov::damage_rate(m);
  } catch (const ConvergenceError&) {
    return nullptr;
  }
}

Output curves(const std::vector<double>& times, const std::vector<std::vector<double>>& p,
              const std::vector<std::vector<double>>& se, const char* unit) {
  std::ostringstream csv;
  csv << "time," << unit << ",p,stderr\n";
  for (std::size_t ti = 0; ti < times.size(); ++ti)
    for (std::size_t v = 0; v < p[ti].size(); ++v)
      csv << num(times[ti]) << ',' << v << ',' << num(p[ti][v]) << ',' << num(se[ti][v]) << '\n';
  return {json::object(), csv.str()};
}

Output cmd_markov(const MarkovArgs& a, std::uint64_t seed) {
  const auto times = parse_doubles(a.times, "--times");
  for (double t : times)
    if (!(t >= 0.0)) throw std::invalid_argument("--times must be >= 0");

  if (a.model == "matrix") {
    if (a.matrix.empty()) throw std::invalid_argument("matrix model needs --matrix");
    const Matrix m = io::read_matrix_file(a.matrix);
    const auto kind = a.kind == "generator" ? markov::RateKind::kGenerator : markov::RateKind::kGeneral;
    const markov::RateMatrix rates(m, kind);
    markov::StateVector pi0 = markov::StateVector::point_mass(m.rows(), 0);
    if (!a.initial.empty()) {
      pi0.probabilities = parse_doubles(a.initial, "--initial");
      pi0.semantics = kind == markov::RateKind::kGenerator ? markov::Semantics::kDistribution
                                                           : markov::Semantics::kMarginal;
      pi0.validate();
    }
    std::vector<std::vector<double>> p, se;
    for (double t : times) {
      p.push_back(markov::evolve_continuous(pi0, rates, t).probabilities);
      se.emplace_back(m.rows(), 0.0);
    }
    Output out = curves(times, p, se, "state");
    out.report = {{"model", "matrix"}, {"kind", a.kind}, {"times", times},
                  {"state_probabilities", p}, {"damage_rate", rate_or_null(m)}};
    return out;
  }

  if (a.graph.empty()) throw std::invalid_argument(a.model + " model needs --graph");
  const Graph g = io::read_graph_file(a.graph);
  const auto seeds = parse_vertices(a.seeds, "--seeds");
  std::vector<std::vector<double>> p, se;
  std::size_t trials = 0;
  if (a.model == "exact") {
    const auto chain = markov::exact_state_chain(g, a.rate, seeds, a.limit);
    // Dense exponential while it is cheap, uniformization beyond.
    const bool dense = chain.states.size() <= 512;
    const auto generator = dense ? chain.generator()
                                 : markov::RateMatrix(Matrix(0, 0), markov::RateKind::kGeneral);
    for (double t : times) {
      const auto pi = dense ? markov::evolve_continuous(chain.initial, generator, t)
                            : markov::evolve_uniformized(chain, t);
      p.push_back(chain.vertex_marginals(pi));
      se.emplace_back(g.vertex_count(), 0.0);
    }
  } else if (a.model == "montecarlo") {
    markov::EpidemicParams params;
    params.rates = markov::TransmissionRates::uniform(a.rate);
    params.seeds = seeds;
    params.sample_times = times;
    params.trials = a.trials;
    params.rng_seed = seed;
    const auto outcome = markov::simulate_epidemic(g, params);
    p = outcome.probabilities;
    se = outcome.standard_errors;
    trials = outcome.trials;
  } else {
    throw std::invalid_argument("unknown model " + a.model);
  }
  Output out = curves(times, p, se, "vertex");
  out.report = {{"model", a.model},
                {"rate", a.rate},
                {"seeds", seeds},
                {"trials", trials},
                {"times", times},
                {"vertex_probabilities", p},
                {"standard_errors", se},
                {"damage_rate", rate_or_null(adjacency_matrix(g))}};
  return out;
}

// --------------------------------------------------------------------- er

struct ErArgs {
  std::size_t n = 0;
  double c = 4.0;
  std::size_t trials = 300;
  std::string sweep;
};

json report_json(const random_graph::ThresholdReport& r) {
  return {{"n", r.n},
          {"c", r.c},
          {"p", r.p},
          {"trials", r.trials},
          {"connected_count", r.connected_count},
          {"empirical_probability", r.empirical_probability},
          {"bound", r.bound},
          {"sampling_slack", r.sampling_slack},
          {"pass", r.pass},
          {"theorem_regime", random_graph::in_theorem_regime(r.c)}};
}

Output cmd_er(const ErArgs& a, std::uint64_t seed, std::ostream& err) {
  if (a.n < 2) throw std::invalid_argument("--n must be >= 2");
  if (!(a.c > 0.0)) throw std::invalid_argument("--c must be > 0");
  if (a.trials < 1) throw std::invalid_argument("--trials must be >= 1");
  if (!random_graph::in_theorem_regime(a.c))
    err << "warning: c = " << a.c << " is outside the c > 3 regime of the connectivity bound\n";
  const auto report = random_graph::threshold_experiment(a.n, a.c, a.trials, seed);
  std::vector<random_graph::ThresholdReport> rows{report};
  if (!a.sweep.empty()) {
    const auto grid = parse_doubles(a.sweep, "--sweep");
    rows = random_graph::threshold_sweep(a.n, grid, a.trials, seed);
  }
  std::ostringstream csv;
  csv << "n,c,p,trials,connected_count,empirical_probability,bound,pass\n";
  json sweep = json::array();
  for (const auto& r : rows) {
    csv << r.n << ',' << num(r.c) << ',' << num(r.p) << ',' << r.trials << ','
        << r.connected_count << ',' << num(r.empirical_probability) << ',' << num(r.bound)
        << ',' << (r.pass ? "true" : "false") << '\n';
    sweep.push_back(report_json(r));
  }
  json out = report_json(report);
  if (!a.sweep.empty()) out["sweep"] = sweep;
  return {out, csv.str()};
}

// ---------------------------------------------------------------- frontal

struct FrontalArgs {
  std::size_t n = 10000;
  std::size_t r = 5;
  std::size_t k = 20;
  std::optional<double> p;
  bool default_p = false;
  std::size_t trials = 2000;
  std::optional<double> damage_fraction;
  std::string sweep_n;
};

json mc_json(const frontal::MonteCarloStats& s) {
  return {{"trials", s.trials},
          {"mean", s.mean},
          {"variance", s.variance},
          {"mean_stderr", s.mean_stderr},
          {"variance_stderr", s.variance_stderr}};
}

Output cmd_frontal(const FrontalArgs& a, std::uint64_t seed) {
  if (a.p.has_value() == a.default_p)
    throw std::invalid_argument("give exactly one of --p and --default-p");
  if (a.n < 1 || a.r < 1 || a.k < 1) throw std::invalid_argument("N, r and k must be >= 1");
  if (a.trials < 2) throw std::invalid_argument("--trials must be >= 2");
  const double p = a.default_p ? frontal::default_p(a.n, a.r) : *a.p;
  auto stats = frontal::activation_stats(a.n, p, a.r, a.k);
  stats.empirical = frontal::monte_carlo_stats(a.n, a.r, a.k, p, a.trials, seed);

  json r;
  r["N"] = a.n;
  r["r"] = a.r;
  r["k"] = a.k;
  r["p"] = p;
  r["p_source"] = a.default_p ? "default" : "given";
  r["p_c"] = stats.p_c;
  r["p_c_approx"] = frontal::connection_probability_approx(p, a.r, a.k);
  r["expected_active"] = stats.expected_active;
  r["variance"] = stats.variance;
  r["leading_order"] = a.k;
  r["overlap_estimate"] = {{"value", frontal::overlap_estimate(a.n, p, a.r, a.k)},
                           {"formula", "N*p_c^2"},
                           {"derived", true}};
  r["empirical"] = mc_json(*stats.empirical);
  if (a.damage_fraction) {
    const auto regen = frontal::regeneration_cycle(a.n, a.r, a.k, p, *a.damage_fraction,
                                                   a.trials, rng::substream_seed(seed, 1));
    r["regeneration"] = {{"damage_fraction", regen.damage_fraction},
                         {"before", mc_json(regen.before)},
                         {"damaged", mc_json(regen.damaged)},
                         {"after", mc_json(regen.after)},
                         {"expected_after", regen.expected_after}};
  }

  std::vector<std::size_t> grid{a.n};
  if (!a.sweep_n.empty()) {
    grid.clear();
    for (double x : parse_doubles(a.sweep_n, "--sweep-n")) {
      if (x < 1 || x != std::floor(x)) throw std::invalid_argument("--sweep-n needs positive integers");
      grid.push_back(static_cast<std::size_t>(x));
    }
  }
  std::ostringstream csv;
  csv << "N,p,p_c,expected_active,variance,gap_to_k\n";
  for (std::size_t n : grid) {
    const double pn = a.default_p ? frontal::default_p(n, a.r) : p;
    const auto s = frontal::activation_stats(n, pn, a.r, a.k);
    csv << n << ',' << num(pn) << ',' << num(s.p_c) << ',' << num(s.expected_active) << ','
        << num(s.variance) << ',' << num(static_cast<double>(a.k) - s.expected_active) << '\n';
  }
  return {r, csv.str()};
}

// ------------------------------------------------------------- line-graph

Output cmd_line_graph(const std::string& path) {
  const Graph g = io::read_graph_file(path);
  const Graph lg = line_graph(g);
  json edges = json::array();
  for (auto [u, v] : lg.edges()) edges.push_back({u, v});
  json sources = json::array();
  for (auto [u, v] : g.edges()) sources.push_back({u, v});
  return {{{"n", lg.vertex_count()}, {"edges", edges}, {"source_edges", sources}},
          io::write_edge_list(lg)};
}

// ------------------------------------------------------------------ output

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

void emit(const Output& o, const Globals& g, const std::string& command, const json& params,
          double seconds, std::ostream& out) {
  const bool want_json = g.format != "csv";
  const bool want_csv = g.format != "json";
  const std::string report = o.report.dump(2) + "\n";
  if (g.output.empty()) {
    if (want_json) out << report;
    if (want_csv) out << o.csv;
    return;
  }
  if (want_json) write_file(g.output + ".json", report);
  if (want_csv) write_file(g.output + ".csv", o.csv);
  const json manifest = {{"command", command},
                         {"parameters", params},
                         {"seed", g.seed},
                         {"version", kVersion},
                         {"threads", thread_count()},
                         {"wall_clock_seconds", seconds}};
  write_file(g.output + ".manifest.json", manifest.dump(2) + "\n");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Destruction scenarios and reliability reinforcement for large networks",
               "netfail"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  app.set_version_flag("--version", kVersion);

  Globals globals;
  app.add_option("--seed", globals.seed, "Master RNG seed (default 0, or $NETFAIL_SEED)");
  app.add_option("--format", globals.format, "Report format")
      ->check(CLI::IsMember({"json", "csv", "both"}));
  app.add_option("--output", globals.output,
                 "Output path prefix; writes <prefix>.json, .csv and .manifest.json");
  app.add_option("--threads", globals.threads, "Worker threads (speed only)")
      ->check(CLI::NonNegativeNumber);

  CascadeArgs cascade_args;
  auto* cascade_cmd = app.add_subcommand("cascade", "Deterministic cascade damage");
  cascade_cmd->add_option("--graph", cascade_args.graph, "Edge-list or JSON graph")->required();
  cascade_cmd->add_option("--seeds", cascade_args.seeds, "Comma-separated seed vertices")->required();
  cascade_cmd->add_option("--max-t", cascade_args.max_t, "Report at most this many steps");

  ProtectArgs protect_args;
  auto* protect_cmd = app.add_subcommand("protect", "Protection tree selection");
  protect_cmd->add_option("--graph", protect_args.graph)->required();
  protect_cmd->add_option("--mode", protect_args.mode)->check(CLI::IsMember({"exact", "sampled"}));
  protect_cmd->add_option("--budget", protect_args.budget,
                          "Exact: max trees enumerated; sampled: trees drawn");

  MarkovArgs markov_args;
  auto* markov_cmd = app.add_subcommand("markov", "Probabilistic damage");
  markov_cmd->add_option("--graph", markov_args.graph);
  markov_cmd->add_option("--matrix", markov_args.matrix, "Rate matrix CSV (rows=<n> header)");
  markov_cmd->add_option("--model", markov_args.model)
      ->check(CLI::IsMember({"exact", "montecarlo", "matrix"}));
  markov_cmd->add_option("--rate", markov_args.rate, "Uniform per-edge rate")
      ->check(CLI::NonNegativeNumber);
  markov_cmd->add_option("--times", markov_args.times, "Comma-separated sample times");
  markov_cmd->add_option("--trials", markov_args.trials)->check(CLI::PositiveNumber);
  markov_cmd->add_option("--seeds", markov_args.seeds, "Initially damaged vertices");
  markov_cmd->add_option("--initial", markov_args.initial, "Initial vector for the matrix model");
  markov_cmd->add_option("--kind", markov_args.kind)->check(CLI::IsMember({"generator", "general"}));
  markov_cmd->add_option("--limit", markov_args.limit, "Vertex limit of the exact model");

  ErArgs er_args;
  auto* er_cmd = app.add_subcommand("er", "Random-graph connectivity threshold");
  er_cmd->add_option("--n", er_args.n)->required();
  er_cmd->add_option("--c", er_args.c);
  er_cmd->add_option("--trials", er_args.trials);
  er_cmd->add_option("--sweep", er_args.sweep, "Comma-separated c grid for the CSV sweep");

  FrontalArgs frontal_args;
  auto* frontal_cmd = app.add_subcommand("frontal", "Frontal-layer reliability statistics");
  frontal_cmd->add_option("--N", frontal_args.n);
  frontal_cmd->add_option("--r", frontal_args.r);
  frontal_cmd->add_option("--k", frontal_args.k);
  frontal_cmd->add_option("--p", frontal_args.p)->check(CLI::Range(0.0, 1.0));
  frontal_cmd->add_flag("--default-p", frontal_args.default_p, "Use p = (N r)^-1/2");
  frontal_cmd->add_option("--trials", frontal_args.trials);
  frontal_cmd->add_option("--damage-fraction", frontal_args.damage_fraction)
      ->check(CLI::Range(0.0, 1.0));
  frontal_cmd->add_option("--sweep-n", frontal_args.sweep_n, "Comma-separated N grid for the CSV");

  std::string line_graph_path;
  auto* line_cmd = app.add_subcommand("line-graph", "Edge-to-vertex line graph");
  line_cmd->add_option("--graph", line_graph_path)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  globals.seed_given = app.count("--seed") > 0;
  if (!globals.seed_given) {
    if (const char* env = std::getenv("NETFAIL_SEED")) {
      try {
        globals.seed = std::stoull(env);
      } catch (const std::exception&) {
        err << "error: NETFAIL_SEED is not an unsigned integer\n";
        return kUsageError;
      }
    }
  }
  const int previous_threads = thread_count();
  if (globals.threads > 0) set_thread_count(globals.threads);

  const auto start = std::chrono::steady_clock::now();
  int code = kOk;
  try {
    Output result;
    std::string command;
    json params;
    if (*cascade_cmd) {
      command = "cascade";
      result = cmd_cascade(cascade_args);
      params = {{"graph", cascade_args.graph}, {"seeds", cascade_args.seeds},
                {"max_t", cascade_args.max_t ? json(*cascade_args.max_t) : json(nullptr)}};
      if (!result.report["connected"].get<bool>())
        err << "warning: graph is disconnected\n";
    } else if (*protect_cmd) {
      command = "protect";
      result = cmd_protect(protect_args, globals.seed);
      params = {{"graph", protect_args.graph}, {"mode", protect_args.mode},
                {"budget", protect_args.budget}};
    } else if (*markov_cmd) {
      command = "markov";
      result = cmd_markov(markov_args, globals.seed);
      params = {{"graph", markov_args.graph}, {"matrix", markov_args.matrix},
                {"model", markov_args.model}, {"rate", markov_args.rate},
                {"times", markov_args.times}, {"trials", markov_args.trials},
                {"seeds", markov_args.seeds}, {"initial", markov_args.initial},
                {"kind", markov_args.kind}, {"limit", markov_args.limit}};
    } else if (*er_cmd) {
      command = "er";
      result = cmd_er(er_args, globals.seed, err);
      params = {{"n", er_args.n}, {"c", er_args.c}, {"trials", er_args.trials},
                {"sweep", er_args.sweep}};
    } else if (*frontal_cmd) {
      command = "frontal";
      result = cmd_frontal(frontal_args, globals.seed);
      params = {{"N", frontal_args.n}, {"r", frontal_args.r}, {"k", frontal_args.k},
                {"p", frontal_args.p ? json(*frontal_args.p) : json(nullptr)},
                {"default_p", frontal_args.default_p}, {"trials", frontal_args.trials},
                {"damage_fraction", frontal_args.damage_fraction
                                        ? json(*frontal_args.damage_fraction)
                                        : json(nullptr)},
                {"sweep_n", frontal_args.sweep_n}};
    } else if (*line_cmd) {
      command = "line-graph";
      result = cmd_line_graph(line_graph_path);
      params = {{"graph", line_graph_path}};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit(result, globals, command, params, seconds, out);
  } catch (const InfeasibleError& e) {
    err << "error: " << e.what() << '\n';
    if (dynamic_cast<const CapExceededError*>(&e) != nullptr)
      err << "hint: use sampled mode, a smaller graph, or raise the limit\n";
    code = kInfeasible;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    code = kUsageError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    code = kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    code = 1;
  }
  set_thread_count(previous_threads);
  return code;
}

}  // namespace netfail::cli
