// Copyright (c) 2026 the furst authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "furst/finset.hpp"
#include "furst/groups.hpp"
#include "furst/measure.hpp"
#include "furst/rng.hpp"

namespace furst {

/// Parameter of the product Bernoulli measure on infinite bit sequences.
/// The endpoints are rejected: at p = 0 or 1 the measure would not be
/// quasi-invariant under coordinate flips.
class BernoulliParam {
 public:
  explicit BernoulliParam(double p) : p_(p) {
    if (!(p > 0.0 && p < 1.0))
      throw std::domain_error("BernoulliParam: p must lie in the open interval (0,1)");
  }
  double value() const { return p_; }
  friend bool operator==(const BernoulliParam&, const BernoulliParam&) = default;

 private:
  double p_;
};

/// log p/(1-p) * (2p-1): the Kullback-Leibler divergence between the
/// Bernoulli(p) and Bernoulli(1-p) laws, in nats. Zero exactly at p = 1/2,
/// strictly positive elsewhere, symmetric under p -> 1-p.
inline double phi(BernoulliParam p) {
  const double v = p.value();
  return (2.0 * v - 1.0) * std::log(v / (1.0 - v));
}

/// Anything that behaves like a point of the infinite product space:
/// queryable bits indexed from 1, and flippable on a finite set.
template <typename P>
concept BitPoint = requires(const P& x, std::uint32_t n, const FinSet& t) {
  { x.coordinate(n) } -> std::same_as<bool>;
  { x.flipped(t) } -> std::same_as<P>;
};

/// A point of the product space realized lazily: coordinate n is a pure
/// function of (seed, n), thresholded at p, xor an explicit finite flip set.
/// No mutable state, so points are values and query order never matters.
class LazyPoint {
 public:
  LazyPoint(std::uint64_t seed, BernoulliParam p) : seed_(seed), p_(p) {}
  LazyPoint(std::uint64_t seed, BernoulliParam p, FinSet flips)
      : seed_(seed), p_(p), flips_(std::move(flips)) {}

  bool coordinate(std::uint32_t n) const {
    if (n == 0) throw std::invalid_argument("LazyPoint: coordinates start at 1");
    const bool base = unit_double(prf(seed_, n)) < p_.value();
    return base != flips_.contains(n);
  }

  LazyPoint flipped(const FinSet& t) const {
    return LazyPoint(seed_, p_, symdiff(flips_, t));
  }

  std::uint64_t seed() const { return seed_; }
  BernoulliParam param() const { return p_; }
  const FinSet& flips() const { return flips_; }

 private:
  std::uint64_t seed_;
  BernoulliParam p_;
  FinSet flips_;
};

/// A point with explicitly prescribed leading bits (1-based); probing past
/// the prefix throws. Used for exhaustive sums over bit patterns.
class PrefixPoint {
 public:
  explicit PrefixPoint(std::vector<bool> bits) : bits_(std::move(bits)) {}

  /// Bits of `pattern` little-endian: coordinate i is bit (i-1) of pattern.
  static PrefixPoint from_mask(std::uint64_t pattern, std::uint32_t width) {
    std::vector<bool> bits(width);
    for (std::uint32_t i = 0; i < width; ++i) bits[i] = (pattern >> i) & 1;
    return PrefixPoint(std::move(bits));
  }

  bool coordinate(std::uint32_t n) const {
    if (n == 0 || n > bits_.size())
      throw std::out_of_range("PrefixPoint: coordinate outside prefix");
    return bits_[n - 1];
  }

  PrefixPoint flipped(const FinSet& t) const {
    std::vector<bool> bits = bits_;
    for (std::uint32_t e : t) {
      if (e > bits.size())
        throw std::out_of_range("PrefixPoint: flip outside prefix");
      bits[e - 1] = !bits[e - 1];
    }
    return PrefixPoint(std::move(bits));
  }

  std::uint32_t width() const { return static_cast<std::uint32_t>(bits_.size()); }

 private:
  std::vector<bool> bits_;
};

/// The group of finite subsets acting by coordinate flips.
template <BitPoint P>
P act_finset(const FinSet& t, const P& x) {
  return x.flipped(t);
}

/// log of the Radon-Nikodym derivative d(T flip)_* omega_p / d omega_p at x.
/// Flipping T turns the law of each coordinate in T into Bernoulli(1-p), so
/// the density is a product over T only:
///   sum over n in T of (1 - 2 x_n) log(p/(1-p)).
/// Coordinates outside T are never touched. Flips are involutions, so this is
/// also the inverse-direction derivative appearing in the entropy integrand.
template <BitPoint P>
double log_rn(const FinSet& t, const P& x, BernoulliParam p) {
  const double l = std::log(p.value() / (1.0 - p.value()));
  double acc = 0.0;
  for (std::uint32_t n : t) acc += x.coordinate(n) ? -l : l;
  return acc;
}

/// Closed-form entropy of the flip action under the product measure:
/// phi(p) * sum over atoms T of mu(T) |T|. Nonnegative; vanishes iff
/// p = 1/2 or mu is the point mass at the empty set.
inline double exact_entropy_finset_action(const FiniteSupportMeasure<FinSetGroup>& mu,
                                          BernoulliParam p) {
  double expected_size = 0.0;
  for (const auto& [t, w] : mu.atoms())
    expected_size += w * static_cast<double>(t.size());
  return phi(p) * expected_size;
}

/// The full nonsingular system: flip action on the product space with the
/// Bernoulli(p) measure.
class BernoulliFinsetSystem {
 public:
  using Element = FinSet;
  using State = LazyPoint;

  explicit BernoulliFinsetSystem(BernoulliParam p) : p_(p) {}

  FinSetGroup group() const { return {}; }
  BernoulliParam param() const { return p_; }

  State sample_state(std::uint64_t seed) const { return LazyPoint(seed, p_); }
  State apply(const Element& t, const State& x) const { return act_finset(t, x); }
  double log_rn_inv(const Element& t, const State& x) const {
    return log_rn(t, x, p_);
  }
  bool preserves_measure() const { return p_.value() == 0.5; }

 private:
  BernoulliParam p_;
};

enum class SeparationVerdict { EvidenceOfSingularity, Inconclusive };

inline std::string to_string(SeparationVerdict v) {
  return v == SeparationVerdict::EvidenceOfSingularity ? "evidence-of-singularity"
                                                       : "inconclusive";
}

struct SeparationReport {
  double empirical_mean;   // mean over samples of the index-averaged bit
  double upper_bound;      // one-sided (1-alpha) upper confidence bound
  double reference_p;
  double alpha;
  std::size_t n_samples;
  SeparationVerdict verdict;
};

/// Frequency test separating an unknown sampled law from the Bernoulli(p)
/// product measure, p > 1/2. Averages the chosen coordinates per sample; if
/// even the upper confidence bound of that mean sits below p, the sampled law
/// puts mass where omega_p does not concentrate, statistical evidence of
/// singularity (absolutely continuous laws would force the mean to p). The
/// inconclusive verdict never claims absolute continuity.
template <typename Sampler>
SeparationReport separation_test(Sampler&& sample, const std::vector<std::uint32_t>& indices,
                                 BernoulliParam p, std::size_t n_samples, double alpha) {
  if (!(p.value() > 0.5))
    throw std::invalid_argument("separation_test: requires p > 1/2");
  if (indices.empty())
    throw std::invalid_argument("separation_test: indices must be nonempty");
  if (n_samples < 30)
    throw std::invalid_argument("separation_test: need at least 30 samples");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("separation_test: alpha must lie in (0,1)");

  double sum = 0.0, sumsq = 0.0;
  for (std::size_t i = 0; i < n_samples; ++i) {
    const auto x = sample(static_cast<std::uint64_t>(i));
    double hits = 0.0;
    for (std::uint32_t n : indices) hits += x.coordinate(n) ? 1.0 : 0.0;
    const double s = hits / static_cast<double>(indices.size());
    sum += s;
    sumsq += s * s;
  }
  const double n = static_cast<double>(n_samples);
  const double mean = sum / n;
  const double var = std::max(0.0, (sumsq - n * mean * mean) / (n - 1.0));
  const double z = normal_quantile(1.0 - alpha);
  const double upper = mean + z * std::sqrt(var / n);
  const auto verdict = upper < p.value() ? SeparationVerdict::EvidenceOfSingularity
                                         : SeparationVerdict::Inconclusive;
  return {mean, upper, p.value(), alpha, n_samples, verdict};
}

/// Seeded source of independent points under the Bernoulli(q) product law.
class BernoulliSampler {
 public:
  BernoulliSampler(std::uint64_t seed, BernoulliParam q) : seed_(seed), q_(q) {}
  LazyPoint operator()(std::uint64_t i) const {
    return LazyPoint(derive_seed(seed_, i), q_);
  }

 private:
  std::uint64_t seed_;
  BernoulliParam q_;
};

}  // namespace furst
