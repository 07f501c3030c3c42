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

#include "netfail/markov.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <limits>
#include <string>
#include <tuple>
#include <unordered_map>

#include "netfail/errors.h"
#include "netfail/rng.h"
#include "netfail/spectral.h"

namespace netfail::markov {

StateVector StateVector::point_mass(std::size_t n, std::size_t state) {
  if (state >= n) throw std::out_of_range("point_mass: state out of range");
  StateVector v{std::vector<double>(n, 0.0), Semantics::kDistribution};
  v.probabilities[state] = 1.0;
  return v;
}

void StateVector::validate() const {
  for (double p : probabilities) {
    if (!std::isfinite(p) || p < -kClampTolerance)
      throw std::invalid_argument("state vector has a negative or non-finite entry");
    if (semantics == Semantics::kMarginal && p > 1.0 + kClampTolerance)
      throw std::invalid_argument("marginal probability exceeds 1");
  }
  if (semantics == Semantics::kDistribution) {
    const double sum = std::accumulate(probabilities.begin(), probabilities.end(), 0.0);
    if (std::abs(sum - 1.0) > kSumTolerance)
      throw std::invalid_argument("distribution does not sum to 1");
  }
}

RateMatrix::RateMatrix(Matrix entries, RateKind kind) : entries_(std::move(entries)), kind_(kind) {
  if (!entries_.square()) throw std::invalid_argument("rate matrix must be square");
  if (kind_ != RateKind::kGenerator) return;
  for (std::size_t i = 0; i < entries_.rows(); ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < entries_.cols(); ++j) {
      if (i != j && entries_(i, j) < 0.0)
        throw std::invalid_argument("generator has a negative off-diagonal rate");
      sum += entries_(i, j);
    }
    if (std::abs(sum) > kSumTolerance)
      throw std::invalid_argument("generator row " + std::to_string(i) + " does not sum to 0");
  }
}

TransitionMatrix::TransitionMatrix(Matrix p) : p_(std::move(p)) {
  if (!p_.square()) throw std::invalid_argument("transition matrix must be square");
  for (std::size_t i = 0; i < p_.rows(); ++i) {
    double sum = 0.0;
    for (double v : p_.row(i)) {
      if (v < 0.0 || v > 1.0) throw std::invalid_argument("transition probability outside [0,1]");
      sum += v;
    }
    if (std::abs(sum - 1.0) > kSumTolerance)
      throw std::invalid_argument("transition row " + std::to_string(i) + " does not sum to 1");
  }
}

namespace {

void clamp_distribution(std::vector<double>& pi) {
  for (double& p : pi) {
    if (p < -kClampTolerance)
      throw std::runtime_error("evolution produced probability " + std::to_string(p));
    if (p < 0.0) p = 0.0;
  }
}

}  // namespace

StateVector evolve_continuous(const StateVector& pi0, const RateMatrix& a, double t) {
  if (pi0.probabilities.size() != a.size())
    throw std::invalid_argument("evolve_continuous: dimension mismatch");
  if (!(t >= 0.0)) throw std::invalid_argument("evolve_continuous: negative time");
  const Matrix propagator = spectral::matrix_exponential(a.entries(), t);
  StateVector out{left_multiply(pi0.probabilities, propagator), pi0.semantics};
  if (a.kind() == RateKind::kGenerator && pi0.semantics == Semantics::kDistribution)
    clamp_distribution(out.probabilities);
  return out;
}

StateVector evolve_discrete(const StateVector& pi0, const TransitionMatrix& p, std::size_t steps) {
  if (pi0.probabilities.size() != p.size())
    throw std::invalid_argument("evolve_discrete: dimension mismatch");
  StateVector out = pi0;
  for (std::size_t s = 0; s < steps; ++s) out.probabilities = left_multiply(out.probabilities, p.entries());
  return out;
}

ErgodicPartition ergodic_classes(const TransitionMatrix& p) {
  const std::size_t n = p.size();
  // Tarjan's algorithm, iterative.
  constexpr std::size_t kUnvisited = ~std::size_t{0};
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0), component(n, kUnvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> classes;
  std::size_t counter = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    std::vector<std::pair<std::size_t, std::size_t>> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, next] = call.back();
      if (next < n) {
        const std::size_t w = next++;
        if (p.entries()(v, w) <= 0.0) continue;
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const std::size_t done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == index[done]) {
        std::vector<std::size_t> members;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component[w] = classes.size();
          members.push_back(w);
        } while (w != done);
        std::sort(members.begin(), members.end());
        classes.push_back(std::move(members));
      }
    }
  }

  std::vector<bool> closed(classes.size(), true);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (p.entries()(i, j) > 0.0 && component[i] != component[j]) closed[component[i]] = false;

  ErgodicPartition out;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (closed[c]) {
      out.recurrent.push_back(classes[c]);
    } else {
      out.transient.insert(out.transient.end(), classes[c].begin(), classes[c].end());
    }
  }
  std::sort(out.recurrent.begin(), out.recurrent.end());
  std::sort(out.transient.begin(), out.transient.end());
  return out;
}

double damage_rate(const Matrix& a) { return spectral::dominant_eigenvalue(a); }

TransmissionRates TransmissionRates::uniform(double rate) {
  TransmissionRates r;
  r.uniform_ = rate;
  return r;
}

TransmissionRates TransmissionRates::per_edge(std::vector<double> rates) {
  TransmissionRates r;
  r.per_edge_ = std::move(rates);
  return r;
}

void TransmissionRates::validate(const Graph& g) const {
  auto bad = [](double x) { return !std::isfinite(x) || x < 0.0; };
  if (per_edge_.empty()) {
    if (bad(uniform_)) throw std::invalid_argument("transmission rate must be finite and >= 0");
    return;
  }
  if (per_edge_.size() != g.edge_count())
    throw std::invalid_argument("per-edge rate count does not match edge count");
  if (std::any_of(per_edge_.begin(), per_edge_.end(), bad))
    throw std::invalid_argument("transmission rate must be finite and >= 0");
}

namespace {

// Damage time of every vertex in one SI trajectory (kNever if not damaged by
// the horizon).
constexpr double kNever = std::numeric_limits<double>::infinity();

void run_trial(const Graph& g, const EpidemicParams& params, std::uint64_t trial,
               std::vector<double>& hit_time, std::vector<double>& hazard) {
  const std::size_t n = g.vertex_count();
  rng::Stream stream(params.rng_seed, trial);
  std::fill(hit_time.begin(), hit_time.end(), kNever);
  std::fill(hazard.begin(), hazard.end(), 0.0);
  auto damage = [&](VertexId v, double at) {
    hit_time[v] = at;
    for (VertexId w : g.neighbors(v))
      if (hit_time[w] == kNever)
        hazard[w] += params.rates.is_uniform() ? params.rates.uniform_rate()
                                               : params.rates.rate(g.edge_index(v, w));
  };
  for (VertexId s : params.seeds)
    if (hit_time[s] == kNever) damage(s, 0.0);

  double now = 0.0;
  while (true) {
    double total = 0.0;
    for (std::size_t v = 0; v < n; ++v)
      if (hit_time[v] == kNever) total += hazard[v];
    if (total <= 0.0) break;
    now += stream.exponential(total);
    if (now > params.horizon) break;
    double pick = stream.uniform() * total;
    VertexId chosen = 0;
    bool found = false;
    for (VertexId v = 0; v < n; ++v) {
      if (hit_time[v] != kNever || hazard[v] <= 0.0) continue;
      chosen = v;
      found = true;
      if (pick < hazard[v]) break;
      pick -= hazard[v];
    }
    if (!found) break;
    damage(chosen, now);
  }
}

void tally(const std::vector<double>& hit_time, const std::vector<double>& times,
           std::vector<std::uint64_t>& counts) {
  const std::size_t n = hit_time.size();
  for (std::size_t ti = 0; ti < times.size(); ++ti)
    for (std::size_t v = 0; v < n; ++v)
      if (hit_time[v] <= times[ti]) ++counts[ti * n + v];
}

}  // namespace

EpidemicOutcome simulate_epidemic(const Graph& g, const EpidemicParams& params, Execution exec) {
  if (params.trials < 1) throw std::invalid_argument("simulate_epidemic: trials must be >= 1");
  if (params.seeds.empty()) throw std::invalid_argument("simulate_epidemic: seed set is empty");
  for (VertexId s : params.seeds)
    if (s >= g.vertex_count()) throw std::out_of_range("simulate_epidemic: seed out of range");
  params.rates.validate(g);
  for (double t : params.sample_times)
    if (!(t >= 0.0)) throw std::invalid_argument("simulate_epidemic: negative sample time");

  EpidemicParams run = params;
  run.horizon = std::max(params.horizon, params.sample_times.empty()
                                              ? 0.0
                                              : *std::max_element(params.sample_times.begin(),
                                                                  params.sample_times.end()));
  const std::size_t n = g.vertex_count();
  const std::size_t cells = run.sample_times.size() * n;
  std::vector<std::uint64_t> counts(cells, 0);
  const auto trials = static_cast<std::ptrdiff_t>(run.trials);

  if (exec == Execution::kSerial) {
    std::vector<double> hit_time(n), hazard(n);
    for (std::ptrdiff_t i = 0; i < trials; ++i) {
      run_trial(g, run, static_cast<std::uint64_t>(i), hit_time, hazard);
      tally(hit_time, run.sample_times, counts);
    }
  } else {
#pragma omp parallel
    {
      std::vector<double> hit_time(n), hazard(n);
      std::vector<std::uint64_t> local(cells, 0);
#pragma omp for schedule(static)
      for (std::ptrdiff_t i = 0; i < trials; ++i) {
        run_trial(g, run, static_cast<std::uint64_t>(i), hit_time, hazard);
        tally(hit_time, run.sample_times, local);
      }
#pragma omp critical
      for (std::size_t c = 0; c < cells; ++c) counts[c] += local[c];
    }
  }

  EpidemicOutcome out;
  out.trials = run.trials;
  out.times = run.sample_times;
  const double denom = static_cast<double>(run.trials);
  for (std::size_t ti = 0; ti < out.times.size(); ++ti) {
    std::vector<double> p(n), se(n);
    for (std::size_t v = 0; v < n; ++v) {
      p[v] = static_cast<double>(counts[ti * n + v]) / denom;
      se[v] = std::sqrt(p[v] * (1.0 - p[v]) / denom);
    }
    out.probabilities.push_back(std::move(p));
    out.standard_errors.push_back(std::move(se));
  }
  return out;
}

ExactChain exact_state_chain(const Graph& g, double rate, std::span<const VertexId> seeds,
                             std::size_t limit) {
  const std::size_t n = g.vertex_count();
  if (n > limit)
    throw CapExceededError("exact chain: " + std::to_string(n) + " vertices exceeds limit " +
                           std::to_string(limit));
  if (n > 31) throw CapExceededError("exact chain: at most 31 vertices");
  if (!std::isfinite(rate) || rate < 0.0) throw std::invalid_argument("exact chain: bad rate");
  if (n > 0 && seeds.empty()) throw std::invalid_argument("exact chain: seed set is empty");
  std::uint32_t start = 0;
  for (VertexId s : seeds) {
    if (s >= n) throw std::out_of_range("exact chain: seed out of range");
    start |= std::uint32_t{1} << s;
  }

  // Reachable configurations. With rate 0 only the seed set is reachable.
  std::vector<std::uint32_t> states{start};
  std::unordered_map<std::uint32_t, std::uint32_t> seen{{start, 0}};
  for (std::size_t head = 0; head < states.size() && rate > 0.0; ++head) {
    const std::uint32_t s = states[head];
    for (VertexId v = 0; v < n; ++v) {
      if (s >> v & 1U) continue;
      bool touches = false;
      for (VertexId w : g.neighbors(v)) touches |= (s >> w & 1U) != 0;
      if (touches && seen.emplace(s | (1U << v), 0).second) states.push_back(s | (1U << v));
    }
  }
  std::sort(states.begin(), states.end());
  for (std::uint32_t i = 0; i < states.size(); ++i) seen[states[i]] = i;

  ExactChain chain;
  chain.vertex_count = n;
  chain.states = states;
  if (rate > 0.0) {
    for (std::uint32_t i = 0; i < states.size(); ++i) {
      const std::uint32_t s = states[i];
      for (VertexId v = 0; v < n; ++v) {
        if (s >> v & 1U) continue;
        std::size_t links = 0;
        for (VertexId w : g.neighbors(v)) links += (s >> w) & 1U;
        if (links > 0) chain.transitions.push_back({i, seen.at(s | (1U << v)), rate * links});
      }
    }
  }
  std::sort(chain.transitions.begin(), chain.transitions.end(),
            [](const auto& a, const auto& b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });
  chain.initial = StateVector::point_mass(states.size(), 0);
  return chain;
}

RateMatrix ExactChain::generator() const {
  Matrix a(states.size(), states.size());
  for (const auto& tr : transitions) {
    a(tr.from, tr.to) += tr.rate;
    a(tr.from, tr.from) -= tr.rate;
  }
  return RateMatrix(std::move(a), RateKind::kGenerator);
}

std::vector<double> ExactChain::vertex_marginals(const StateVector& pi) const {
  if (pi.probabilities.size() != states.size())
    throw std::invalid_argument("vertex_marginals: dimension mismatch");
  // Divided by the mass summed in the same order: seed vertices give exactly 1.
  std::vector<double> marginal(vertex_count, 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    total += pi.probabilities[i];
    for (std::size_t v = 0; v < vertex_count; ++v)
      if (states[i] >> v & 1U) marginal[v] += pi.probabilities[i];
  }
  if (total > 0.0)
    for (double& m : marginal) m = std::min(1.0, m / total);
  return marginal;
}

StateVector evolve_uniformized(const ExactChain& chain, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("evolve_uniformized: negative time");
  const std::size_t m = chain.states.size();
  std::vector<double> exit(m, 0.0);
  for (const auto& tr : chain.transitions) exit[tr.from] += tr.rate;
  const double q = m == 0 ? 0.0 : *std::max_element(exit.begin(), exit.end());
  if (q == 0.0 || t == 0.0) return chain.initial;

  // pi(t) = sum_k Poisson(k; q t) pi(0) P^k with P = I + A/q.
  const double qt = q * t;
  std::vector<double> term = chain.initial.probabilities;
  std::vector<double> result(m, 0.0);
  double mass = 0.0;
  const auto max_terms = static_cast<std::size_t>(qt + 20.0 * std::sqrt(qt) + 50.0);
  for (std::size_t k = 0; k <= max_terms; ++k) {
    const double weight = std::exp(static_cast<double>(k) * std::log(qt) - qt - std::lgamma(k + 1.0));
    for (std::size_t i = 0; i < m; ++i) result[i] += weight * term[i];
    mass += weight;
    if (mass >= 1.0 - 1e-15 && static_cast<double>(k) > qt) break;
    std::vector<double> next(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) next[i] = term[i] * (1.0 - exit[i] / q);
    for (const auto& tr : chain.transitions) next[tr.to] += term[tr.from] * tr.rate / q;
    term = std::move(next);
  }
  StateVector out{std::move(result), Semantics::kDistribution};
  clamp_distribution(out.probabilities);
  return out;
}

}  // namespace netfail::markov
