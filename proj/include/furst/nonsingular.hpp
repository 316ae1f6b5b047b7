// Copyright (c) 2026 the furst authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "furst/measure.hpp"
#include "furst/rng.hpp"

namespace furst {

/// Behavioral contract of a nonsingular action on a probability space:
/// sample a state, apply a group element, and evaluate the log density
/// log d(g^-1)_* eta / d eta at a state: exactly the integrand of the
/// Furstenberg entropy. For this direction of the derivative the chain rule
/// telescopes as
///   log_rn_inv(gh, x) = log_rn_inv(g, h x) + log_rn_inv(h, x),
/// and instances must satisfy it.
template <typename S>
concept NonsingularSystem = requires(const S& sys, const typename S::Element& g,
                                     const typename S::State& x, std::uint64_t seed) {
  { sys.sample_state(seed) } -> std::same_as<typename S::State>;
  { sys.apply(g, x) } -> std::same_as<typename S::State>;
  { sys.log_rn_inv(g, x) } -> std::convertible_to<double>;
};

struct EntropyEstimate {
  double mean = 0.0;       // nats
  double std_error = 0.0;  // standard error of the mean
  std::size_t n_samples = 0;
  std::uint64_t seed = 0;
};

namespace detail {

// Samples are partitioned into fixed-size batches indexed independently of
// the thread count; per-batch partial sums are reduced in batch order. This
// makes results bit-identical for any scheduling and any --threads value.
inline constexpr std::size_t kBatchSize = 4096;

struct BatchStats {
  double sum = 0.0;
  double sumsq = 0.0;
};

template <typename F>
EntropyEstimate batched_mean(std::size_t n_samples, std::uint64_t seed,
                             unsigned threads, F&& value_of_sample) {
  if (n_samples < 1)
    throw std::invalid_argument("monte carlo: need at least one sample");
  const std::size_t n_batches = (n_samples + kBatchSize - 1) / kBatchSize;
  std::vector<BatchStats> stats(n_batches);

  auto run_batch = [&](std::size_t b) {
    const std::size_t lo = b * kBatchSize;
    const std::size_t hi = std::min(n_samples, lo + kBatchSize);
    BatchStats s;
    for (std::size_t i = lo; i < hi; ++i) {
      const double y = value_of_sample(static_cast<std::uint64_t>(i));
      s.sum += y;
      s.sumsq += y * y;
    }
    stats[b] = s;
  };

  unsigned n_threads = threads == 0 ? std::thread::hardware_concurrency() : threads;
  n_threads = std::max(1u, std::min<unsigned>(n_threads, static_cast<unsigned>(n_batches)));

  if (n_threads == 1) {
    for (std::size_t b = 0; b < n_batches; ++b) run_batch(b);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t)
      workers.emplace_back([&] {
        for (std::size_t b = next.fetch_add(1); b < n_batches; b = next.fetch_add(1))
          run_batch(b);
      });
    for (auto& w : workers) w.join();
  }

  double sum = 0.0, sumsq = 0.0;
  for (const auto& s : stats) {
    sum += s.sum;
    sumsq += s.sumsq;
  }
  const double n = static_cast<double>(n_samples);
  const double mean = sum / n;
  double se = 0.0;
  if (n_samples > 1) {
    const double var = std::max(0.0, (sumsq - n * mean * mean) / (n - 1.0));
    se = std::sqrt(var / n);
  }
  return {mean, se, n_samples, seed};
}

}  // namespace detail

/// Monte Carlo Furstenberg entropy: the sum over the atoms of mu is taken
/// exactly, the state integral is estimated with common random states shared
/// by all atoms. Unbiased; standard error from the sample variance.
template <NonsingularSystem S, typename G>
  requires std::same_as<typename S::Element, typename G::Element>
EntropyEstimate mc_entropy(const S& system, const FiniteSupportMeasure<G>& mu,
                           std::size_t n_samples, std::uint64_t seed,
                           unsigned threads = 0) {
  if (!(system.group() == mu.group()))
    throw std::invalid_argument("mc_entropy: system and measure group mismatch");
  return detail::batched_mean(n_samples, seed, threads, [&](std::uint64_t i) {
    const auto x = system.sample_state(prf(seed, i));
    double y = 0.0;
    for (const auto& [g, w] : mu.atoms()) y += w * -system.log_rn_inv(g, x);
    return y;
  });
}

/// A finite state space with a strictly positive probability vector and a
/// group acting by bijections. Strict positivity makes the measure
/// automatically quasi-invariant, and everything about it exactly computable.
template <typename G>
class FiniteNonsingularSystem {
 public:
  using Group = G;
  using Element = typename G::Element;
  using State = std::size_t;
  using Action = std::function<std::size_t(const Element&, std::size_t)>;

  FiniteNonsingularSystem(G group, std::vector<double> eta, Action action)
      : group_(std::move(group)), eta_(std::move(eta)), action_(std::move(action)) {
    if (eta_.empty())
      throw std::invalid_argument("FiniteNonsingularSystem: empty state space");
    double mass = 0.0;
    for (double w : eta_) {
      if (!(w > 0.0) || !std::isfinite(w))
        throw std::invalid_argument("FiniteNonsingularSystem: eta must be strictly positive");
      mass += w;
    }
    if (std::abs(mass - 1.0) > kMeasureMassTolerance)
      throw std::invalid_argument("FiniteNonsingularSystem: eta must sum to 1");
    cdf_.resize(eta_.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < eta_.size(); ++i) {
      acc += eta_[i];
      cdf_[i] = acc;
    }
    cdf_.back() = 1.0;
  }

  const G& group() const { return group_; }
  std::size_t n_states() const { return eta_.size(); }
  const std::vector<double>& eta() const { return eta_; }

  std::size_t apply(const Element& g, std::size_t x) const {
    const std::size_t y = action_(g, x);
    if (y >= eta_.size())
      throw std::out_of_range("FiniteNonsingularSystem: action left the state space");
    return y;
  }

  State sample_state(std::uint64_t seed) const {
    const double u = unit_double(prf(seed, 0));
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    return static_cast<std::size_t>(std::min<std::ptrdiff_t>(
        it - cdf_.begin(), static_cast<std::ptrdiff_t>(eta_.size()) - 1));
  }

  /// d(g^-1)_* eta / d eta (x) = eta(gx) / eta(x) for a bijective action.
  double log_rn_inv(const Element& g, std::size_t x) const {
    return std::log(eta_[apply(g, x)] / eta_[x]);
  }

  bool is_bijection(const Element& g) const {
    std::vector<bool> hit(eta_.size(), false);
    for (std::size_t x = 0; x < eta_.size(); ++x) {
      const std::size_t y = apply(g, x);
      if (hit[y]) return false;
      hit[y] = true;
    }
    return true;
  }

 private:
  G group_;
  std::vector<double> eta_;
  Action action_;
  std::vector<double> cdf_;
};

/// Exact Furstenberg entropy of a finite system:
///   sum over g of mu(g) sum over x of eta(x) * -log(eta(gx)/eta(x)).
/// Nonnegative, and zero iff eta is invariant under every atom of mu.
template <typename G>
double exact_entropy_finite(const FiniteNonsingularSystem<G>& system,
                            const FiniteSupportMeasure<G>& mu) {
  if (!(system.group() == mu.group()))
    throw std::invalid_argument("exact_entropy_finite: group mismatch");
  double h = 0.0;
  for (const auto& [g, w] : mu.atoms()) {
    double inner = 0.0;
    for (std::size_t x = 0; x < system.n_states(); ++x)
      inner += system.eta()[x] * -system.log_rn_inv(g, x);
    h += w * inner;
  }
  return h;
}

template <typename Estimate>
struct WithTail {
  Estimate estimate;
  unsigned trunc_n;
  double tail_mass;
};

/// Entropy with mu replaced by its truncated geometric average of
/// convolution powers. Note: the value generally differs from the plain
/// mu-entropy unless the measure is stationary for mu; this function reports
/// what the averaged measure actually gives, with the truncation tail.
template <NonsingularSystem S, typename G>
WithTail<EntropyEstimate> entropy_of_bar(const S& system,
                                         const FiniteSupportMeasure<G>& mu,
                                         unsigned trunc_n, std::size_t n_samples,
                                         std::uint64_t seed, unsigned threads = 0) {
  auto bar = geometric_bar(mu, trunc_n);
  return {mc_entropy(system, bar.measure, n_samples, seed, threads), bar.trunc_n,
          bar.tail_mass};
}

/// Exact counterpart on finite systems.
template <typename G>
WithTail<double> exact_entropy_of_bar(const FiniteNonsingularSystem<G>& system,
                                      const FiniteSupportMeasure<G>& mu,
                                      unsigned trunc_n) {
  auto bar = geometric_bar(mu, trunc_n);
  return {exact_entropy_finite(system, bar.measure), bar.trunc_n, bar.tail_mass};
}

/// Two states with masses (q, 1-q), swapped by the generator of the order-2
/// cyclic group. The smallest properly weighted example: its entropy under
/// the point mass at the swap is exactly phi(q).
inline FiniteNonsingularSystem<CyclicGroup> two_point_swap(double q) {
  if (!(q > 0.0 && q < 1.0))
    throw std::invalid_argument("two_point_swap: q must lie in (0,1)");
  return FiniteNonsingularSystem<CyclicGroup>(
      CyclicGroup(2), {q, 1.0 - q},
      [](std::uint32_t g, std::size_t x) { return (x + g) % 2; });
}

/// The integers acting on Z/n by rotation, with a given (default uniform)
/// state distribution.
inline FiniteNonsingularSystem<IntegerGroup> integer_rotation(
    std::uint32_t n, std::vector<double> eta = {}) {
  if (n < 1) throw std::invalid_argument("integer_rotation: n must be >= 1");
  if (eta.empty()) eta.assign(n, 1.0 / static_cast<double>(n));
  return FiniteNonsingularSystem<IntegerGroup>(
      IntegerGroup{}, std::move(eta), [n](std::int64_t g, std::size_t x) {
        const std::int64_t m = static_cast<std::int64_t>(n);
        std::int64_t y = (static_cast<std::int64_t>(x) + g) % m;
        if (y < 0) y += m;
        return static_cast<std::size_t>(y);
      });
}

}  // namespace furst
