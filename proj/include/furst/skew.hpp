// Copyright (c) 2026 the furst authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>

#include "furst/bernoulli.hpp"
#include "furst/measure.hpp"
#include "furst/nonsingular.hpp"
#include "furst/odometer.hpp"
#include "furst/rng.hpp"

namespace furst {

/// Skew product over a measure-preserving base: g(x, w) = (gx, c(g,x) w),
/// fiber the Bernoulli(p) product space acted on by coordinate flips.
///
/// With the base invariant, the product-measure density reduces to the fiber:
///   log d(g^-1)_*(eta x omega_p) / d(eta x omega_p) (x, w)
///     = log d(c(g,x)^-1)_* omega_p / d omega_p (w),
/// and flip sets are involutions, so the integrand is log_rn(c(g,x), w, p).
template <typename Base, typename C>
  requires NonsingularSystem<Base> &&
           Cocycle<C, typename Base::Element, typename Base::State>
class SkewSystem {
 public:
  using Element = typename Base::Element;
  struct State {
    typename Base::State base;
    LazyPoint fiber;
  };

  SkewSystem(Base base, C cocycle, BernoulliParam p)
      : base_(std::move(base)), cocycle_(std::move(cocycle)), p_(p) {
    if (!base_.preserves_measure())
      throw std::invalid_argument("SkewSystem: base action must preserve its measure");
  }

  auto group() const { return base_.group(); }
  BernoulliParam fiber_param() const { return p_; }
  const Base& base() const { return base_; }
  const C& cocycle() const { return cocycle_; }

  State sample_state(std::uint64_t seed) const {
    return {base_.sample_state(derive_seed(seed, 1)),
            LazyPoint(derive_seed(seed, 2), p_)};
  }

  State apply(const Element& g, const State& s) const {
    FinSet t = cocycle_(g, s.base);
    return {base_.apply(g, s.base), s.fiber.flipped(t)};
  }

  double log_rn_inv(const Element& g, const State& s) const {
    return log_rn(cocycle_(g, s.base), s.fiber, p_);
  }

  bool preserves_measure() const { return p_.value() == 0.5; }

 private:
  Base base_;
  C cocycle_;
  BernoulliParam p_;
};

template <typename Base, typename C>
SkewSystem<Base, C> build_skew(Base base, C cocycle, BernoulliParam p) {
  return SkewSystem<Base, C>(std::move(base), std::move(cocycle), p);
}

/// Monte Carlo mean over base states of sum_g mu(g) |c(g, x)|: the expected
/// flip-set size that feeds the skew entropy formula. Independent of the
/// fiber parameter.
template <typename Base, typename C, typename G>
  requires NonsingularSystem<Base> &&
           Cocycle<C, typename Base::Element, typename Base::State> &&
           std::same_as<typename Base::Element, typename G::Element>
EntropyEstimate expected_cocycle_size(const FiniteSupportMeasure<G>& mu,
                                      const C& cocycle, const Base& base,
                                      std::size_t n_base_samples, std::uint64_t seed,
                                      unsigned threads = 0) {
  if (!(base.group() == mu.group()))
    throw std::invalid_argument("expected_cocycle_size: group mismatch");
  return detail::batched_mean(n_base_samples, seed, threads, [&](std::uint64_t i) {
    const auto x = base.sample_state(prf(seed, i));
    double a = 0.0;
    for (const auto& [g, w] : mu.atoms())
      a += w * static_cast<double>(cocycle(g, x).size());
    return a;
  });
}

/// Entropy of the skew product via the fiberwise formula: conditioned on the
/// base point x, the fiber contributes phi(p) * |c(g,x)| per atom, so
///   h = phi(p) * sum over g of mu(g) * E_x |c(g,x)|.
/// The inner expectation is Monte Carlo over base states (the atom sum is
/// exact); the standard error scales by phi(p).
template <typename Base, typename C, typename G>
  requires NonsingularSystem<Base> &&
           Cocycle<C, typename Base::Element, typename Base::State> &&
           std::same_as<typename Base::Element, typename G::Element>
EntropyEstimate skew_entropy_exact(const FiniteSupportMeasure<G>& mu, const C& cocycle,
                                   const Base& base, BernoulliParam p,
                                   std::size_t n_base_samples, std::uint64_t seed,
                                   unsigned threads = 0) {
  if (!base.preserves_measure())
    throw std::invalid_argument("skew_entropy_exact: base action must preserve its measure");
  EntropyEstimate carry =
      expected_cocycle_size(mu, cocycle, base, n_base_samples, seed, threads);
  const double scale = phi(p);
  return {scale * carry.mean, scale * carry.std_error, carry.n_samples, carry.seed};
}

}  // namespace furst
