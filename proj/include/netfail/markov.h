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

#ifndef NETFAIL_MARKOV_H_
#define NETFAIL_MARKOV_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "netfail/graph.h"
#include "netfail/matrix.h"
#include "netfail/parallel.h"

namespace netfail::markov {

inline constexpr double kSumTolerance = 1e-9;
inline constexpr double kClampTolerance = 1e-9;

// What a state vector ranges over. A distribution lives on network states and
// sums to one; marginals are per-vertex damage probabilities (mean-field
// reading) and carry no sum constraint.
enum class Semantics { kDistribution, kMarginal };

struct StateVector {
  std::vector<double> probabilities;
  Semantics semantics = Semantics::kDistribution;

  static StateVector point_mass(std::size_t n, std::size_t state);
  // Throws std::invalid_argument when the invariants of `semantics` fail.
  void validate() const;
};

enum class RateKind { kGenerator, kGeneral };

// Transition-rate matrix a_ij. Generators have non-negative off-diagonal
// entries and zero row sums; general matrices are not checked.
class RateMatrix {
 public:
  RateMatrix(Matrix entries, RateKind kind);

  const Matrix& entries() const { return entries_; }
  RateKind kind() const { return kind_; }
  std::size_t size() const { return entries_.rows(); }

 private:
  Matrix entries_;
  RateKind kind_;
};

// Row-stochastic matrix p_ij.
class TransitionMatrix {
 public:
  explicit TransitionMatrix(Matrix p);

  const Matrix& entries() const { return p_; }
  std::size_t size() const { return p_.rows(); }

 private:
  Matrix p_;
};

// pi(t) = pi(0) e^{A t}. Generator evolution returns a distribution: entries
// in [-1e-9, 0) are clamped to zero and anything below is an error.
StateVector evolve_continuous(const StateVector& pi0, const RateMatrix& a, double t);

// pi(0) P^steps.
StateVector evolve_discrete(const StateVector& pi0, const TransitionMatrix& p,
                            std::size_t steps);

struct ErgodicPartition {
  std::vector<std::vector<std::size_t>> recurrent;  // closed classes
  std::vector<std::size_t> transient;
};

// Strongly connected components of the positive-entry digraph; classes with
// no exit are recurrent. Classes are sorted by their smallest state.
ErgodicPartition ergodic_classes(const TransitionMatrix& p);

// Dominant eigenvalue, the early-phase damage rate parameter.
double damage_rate(const Matrix& a);

// Per-edge transmission rates aligned with Graph::edges().
class TransmissionRates {
 public:
  static TransmissionRates uniform(double rate);
  static TransmissionRates per_edge(std::vector<double> rates);

  double rate(std::size_t edge_index) const {
    return per_edge_.empty() ? uniform_ : per_edge_[edge_index];
  }
  bool is_uniform() const { return per_edge_.empty(); }
  double uniform_rate() const { return uniform_; }
  void validate(const Graph& g) const;

 private:
  double uniform_ = 0.0;
  std::vector<double> per_edge_;
};

struct EpidemicOutcome {
  std::size_t trials = 0;
  std::vector<double> times;
  std::vector<std::vector<double>> probabilities;    // [time][vertex]
  std::vector<std::vector<double>> standard_errors;  // sqrt(p(1-p)/trials)
};

struct EpidemicParams {
  TransmissionRates rates = TransmissionRates::uniform(1.0);
  std::vector<VertexId> seeds;
  double horizon = 0.0;
  std::vector<double> sample_times;
  std::size_t trials = 1;
  std::uint64_t rng_seed = 0;
};

// Continuous-time SI process, simulated event by event: each susceptible
// vertex is hit at a rate equal to the sum of the rates of its edges to
// damaged neighbours. Trial i draws from substream (rng_seed, i).
EpidemicOutcome simulate_epidemic(const Graph& g, const EpidemicParams& params,
                                  Execution exec = Execution::kParallel);

inline constexpr std::size_t kExactChainLimit = 14;

// Exact SI chain on damage configurations. States are the bit masks
// reachable from the seed set, in ascending order; state 0 is the seed set.
struct ExactChain {
  std::size_t vertex_count = 0;
  std::vector<std::uint32_t> states;
  struct Transition {
    std::uint32_t from;
    std::uint32_t to;
    double rate;
  };
  std::vector<Transition> transitions;  // off-diagonal entries, sorted by (from, to)
  StateVector initial;

  RateMatrix generator() const;
  // Per-vertex damage probability under a distribution over `states`.
  std::vector<double> vertex_marginals(const StateVector& pi) const;
};

// Transition S -> S + {v} fires at rate * |edges between v and S|.
// Throws CapExceededError when n > limit.
ExactChain exact_state_chain(const Graph& g, double rate,
                             std::span<const VertexId> seeds,
                             std::size_t limit = kExactChainLimit);

// pi(t) for an exact chain by uniformization; suited to chains too large for
// a dense exponential.
StateVector evolve_uniformized(const ExactChain& chain, double t);

}  // namespace netfail::markov

#endif  // NETFAIL_MARKOV_H_
