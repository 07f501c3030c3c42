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

#include "netfail/frontal.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "netfail/rng.h"

namespace netfail::frontal {
namespace {

void check_domain(double p, std::size_t r, std::size_t k) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  if (r < 1 || k < 1) throw std::invalid_argument("input set sizes r and k must be >= 1");
}

// 1 - (1-p)^m without cancellation.
double at_least_one(double p, std::size_t m) {
  if (p >= 1.0) return 1.0;
  return -std::expm1(static_cast<double>(m) * std::log1p(-p));
}

// Fills every bit of `bits` independently with probability p by jumping over
// geometric gaps between successes.
void fill_bernoulli(BitMatrix& bits, double p, rng::Stream& stream) {
  if (p <= 0.0) return;
  const std::size_t cols = bits.cols();
  const std::size_t total = bits.rows() * cols;
  const double log1m_p = std::log1p(-p);
  double position = -1.0;
  while (true) {
    position += 1.0 + stream.geometric_gap(log1m_p);
    if (!(position < static_cast<double>(total))) break;
    const auto idx = static_cast<std::size_t>(position);
    bits.set(idx / cols, idx % cols);
  }
}

std::uint64_t child_seed(std::uint64_t seed, std::uint64_t stream) {
  return rng::substream_seed(seed, stream);
}

}  // namespace

double connection_probability(double p, std::size_t r, std::size_t k) {
  check_domain(p, r, k);
  return at_least_one(p, r) * at_least_one(p, k);
}

double connection_probability_approx(double p, std::size_t r, std::size_t k) {
  check_domain(p, r, k);
  return static_cast<double>(r) * static_cast<double>(k) * p * p;
}

double default_p(std::size_t n, std::size_t r) {
  if (n == 0 || r == 0) throw std::invalid_argument("default_p: N and r must be >= 1");
  return std::min(1.0, 1.0 / std::sqrt(static_cast<double>(n) * static_cast<double>(r)));
}

ActivationStats activation_stats(std::size_t n, double p, std::size_t r, std::size_t k) {
  ActivationStats s;
  s.p_c = connection_probability(p, r, k);
  s.expected_active = static_cast<double>(n) * s.p_c;
  s.variance = s.expected_active * (1.0 - s.p_c);
  return s;
}

FrontalSystem generate(std::size_t n, std::size_t r, std::size_t k, double p,
                       std::uint64_t rng_seed) {
  check_domain(p, r, k);
  if (n < 1) throw std::invalid_argument("frontal layer size N must be >= 1");
  FrontalSystem sys{r, k, n, p, BitMatrix(n, r), BitMatrix(n, k)};
  rng::Stream x_stream(child_seed(rng_seed, 0));
  rng::Stream y_stream(child_seed(rng_seed, 1));
  fill_bernoulli(sys.x_links, p, x_stream);
  fill_bernoulli(sys.y_links, p, y_stream);
  return sys;
}

std::vector<std::size_t> active_set(const FrontalSystem& sys) {
  std::vector<std::size_t> active;
  for (std::size_t v = 0; v < sys.n; ++v)
    if (sys.x_links.row_any(v) && sys.y_links.row_any(v)) active.push_back(v);
  return active;
}

std::size_t active_count(const FrontalSystem& sys) {
  std::size_t c = 0;
  for (std::size_t v = 0; v < sys.n; ++v) c += sys.x_links.row_any(v) && sys.y_links.row_any(v);
  return c;
}

MonteCarloStats summarize(std::span<const double> samples) {
  MonteCarloStats s;
  s.trials = samples.size();
  if (samples.empty()) return s;
  double sum = 0.0;
  for (double x : samples) sum += x;
  s.mean = sum / static_cast<double>(samples.size());
  if (samples.size() > 1) {
    double ss = 0.0;
    double drift = 0.0;
    for (double x : samples) {
      ss += (x - s.mean) * (x - s.mean);
      drift += x - s.mean;
    }
    const double m = static_cast<double>(samples.size());
    s.variance = (ss - drift * drift / m) / (m - 1.0);
    s.mean_stderr = std::sqrt(s.variance / m);
    s.variance_stderr = std::sqrt(2.0 / (m - 1.0)) * s.variance;
  }
  return s;
}

MonteCarloStats monte_carlo_stats(std::size_t n, std::size_t r, std::size_t k, double p,
                                  std::size_t trials, std::uint64_t rng_seed, Execution exec) {
  check_domain(p, r, k);
  if (trials < 2) throw std::invalid_argument("monte_carlo_stats: trials must be >= 2");
  std::vector<double> counts(trials);
  const auto total = static_cast<std::ptrdiff_t>(trials);
  auto one = [&](std::ptrdiff_t i) {
    counts[i] = static_cast<double>(
        active_count(generate(n, r, k, p, rng::substream_seed(rng_seed, i))));
  };
  if (exec == Execution::kSerial) {
    for (std::ptrdiff_t i = 0; i < total; ++i) one(i);
  } else {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t i = 0; i < total; ++i) one(i);
  }
  return summarize(counts);
}

FrontalSystem regenerate_after_damage(const FrontalSystem& sys,
                                      std::span<const std::size_t> damaged,
                                      std::uint64_t rng_seed) {
  FrontalSystem out = sys;
  std::vector<std::size_t> rows(damaged.begin(), damaged.end());
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  for (std::size_t v : rows) {
    if (v >= sys.n)
      throw std::out_of_range("frontal vertex " + std::to_string(v) + " out of range");
    rng::Stream stream(rng_seed, v);
    out.x_links.clear_row(v);
    out.y_links.clear_row(v);
    for (std::size_t j = 0; j < sys.r; ++j)
      if (stream.bernoulli(sys.p)) out.x_links.set(v, j);
    for (std::size_t j = 0; j < sys.k; ++j)
      if (stream.bernoulli(sys.p)) out.y_links.set(v, j);
  }
  return out;
}

double overlap_estimate(std::size_t n, double p, std::size_t r, std::size_t k) {
  const double pc = connection_probability(p, r, k);
  return static_cast<double>(n) * pc * pc;
}

RegenerationStats regeneration_cycle(std::size_t n, std::size_t r, std::size_t k, double p,
                                     double damage_fraction, std::size_t trials,
                                     std::uint64_t rng_seed, Execution exec) {
  check_domain(p, r, k);
  if (!(damage_fraction >= 0.0 && damage_fraction <= 1.0))
    throw std::invalid_argument("damage fraction must lie in [0, 1]");
  if (trials < 2) throw std::invalid_argument("regeneration_cycle: trials must be >= 2");
  std::vector<double> before(trials), hit(trials), after(trials);
  const auto total = static_cast<std::ptrdiff_t>(trials);
  auto one = [&](std::ptrdiff_t i) {
    const std::uint64_t trial_seed = rng::substream_seed(rng_seed, i);
    const auto sys = generate(n, r, k, p, child_seed(trial_seed, 0));
    auto active = active_set(sys);
    const auto count = static_cast<std::size_t>(
        std::ceil(damage_fraction * static_cast<double>(active.size()) - 1e-9));
    // Partial Fisher-Yates: the first `count` entries become a uniform subset.
    rng::Stream pick(child_seed(trial_seed, 1));
    for (std::size_t j = 0; j < count; ++j)
      std::swap(active[j], active[j + pick.below(active.size() - j)]);
    active.resize(count);
    const auto repaired = regenerate_after_damage(sys, active, child_seed(trial_seed, 2));
    before[i] = static_cast<double>(active_set(sys).size());
    hit[i] = static_cast<double>(count);
    after[i] = static_cast<double>(active_count(repaired));
  };
  if (exec == Execution::kSerial) {
    for (std::ptrdiff_t i = 0; i < total; ++i) one(i);
  } else {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t i = 0; i < total; ++i) one(i);
  }
  RegenerationStats out;
  out.damage_fraction = damage_fraction;
  out.before = summarize(before);
  out.damaged = summarize(hit);
  out.after = summarize(after);
  const double pc = connection_probability(p, r, k);
  // Untouched rows keep their state and each redrawn row is active with
  // probability p_c, so E[after] = N p_c - E[D] (1 - p_c), where
  // D = ceil(f |A|) and |A| ~ Binomial(N, p_c).
  double expected_damaged = 0.0;
  if (pc >= 1.0) {
    expected_damaged = std::ceil(damage_fraction * static_cast<double>(n) - 1e-9);
  } else if (pc > 0.0) {
    const double nn = static_cast<double>(n);
    for (std::size_t a = 0; a <= n; ++a) {
      const double x = static_cast<double>(a);
      const double log_pmf = std::lgamma(nn + 1.0) - std::lgamma(x + 1.0) -
                             std::lgamma(nn - x + 1.0) + x * std::log(pc) +
                             (nn - x) * std::log1p(-pc);
      const double pmf = std::exp(log_pmf);
      expected_damaged += pmf * std::ceil(damage_fraction * x - 1e-9);
      if (x > nn * pc + 50.0 * std::sqrt(nn * pc + 1.0)) break;
    }
  }
  out.expected_after = static_cast<double>(n) * pc - expected_damaged * (1.0 - pc);
  return out;
}

}  // namespace netfail::frontal
