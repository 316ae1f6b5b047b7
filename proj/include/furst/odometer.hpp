// Copyright (c) 2026 the furst authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "furst/bernoulli.hpp"
#include "furst/finset.hpp"
#include "furst/groups.hpp"
#include "furst/rng.hpp"

namespace furst {

/// A measurable map c(g, x) into the group of finite subsets satisfying the
/// cocycle identity c(gh, x) = c(g, hx) symdiff c(h, x).
template <typename C, typename Element, typename State>
concept Cocycle = requires(const C& c, const Element& g, const State& x) {
  { c(g, x) } -> std::same_as<FinSet>;
};

namespace detail {

// Carry chains longer than this have probability 2^-1024 under any fair
// source; hitting the cap means the bit source is broken, not unlucky.
inline constexpr std::uint32_t kCarryCap = 1024;

[[noreturn]] inline void carry_cap_diagnostic(std::int64_t k) {
  throw std::runtime_error(
      "odometer: carry/borrow chain exceeded 2^10 coordinates while adding " +
      std::to_string(k) + "; the coordinate source looks defective");
}

}  // namespace detail

/// The set of coordinates flipped by adding k to x in binary (little-endian,
/// bit 1 least significant; borrow subtraction for k < 0). This is the
/// transfer cocycle of the adding machine: x and x+k differ exactly on the
/// returned set, so the cocycle identity holds by construction.
template <BitPoint P>
FinSet odometer_cocycle(std::int64_t k, const P& x) {
  if (k == 0) return {};
  const bool add = k > 0;
  std::uint64_t m = add ? static_cast<std::uint64_t>(k)
                        : ~static_cast<std::uint64_t>(k) + 1;  // |k|, INT64_MIN-safe
  std::vector<std::uint32_t> flips;
  std::uint32_t i = 1;
  std::uint32_t carry = 0;
  while (m != 0 || carry != 0) {
    if (i > detail::kCarryCap) detail::carry_cap_diagnostic(k);
    const std::uint32_t b = x.coordinate(i) ? 1 : 0;
    const std::uint32_t d = static_cast<std::uint32_t>(m & 1);
    std::uint32_t out;
    if (add) {
      const std::uint32_t s = b + d + carry;
      out = s & 1;
      carry = s >> 1;
    } else {
      const std::int32_t t = static_cast<std::int32_t>(b) -
                             static_cast<std::int32_t>(d) -
                             static_cast<std::int32_t>(carry);
      out = static_cast<std::uint32_t>(t & 1);
      carry = t < 0 ? 1 : 0;
    }
    if (out != b) flips.push_back(i);
    m >>= 1;
    ++i;
  }
  return FinSet(std::move(flips));
}

/// Binary addition of k with carry propagation; realizes only the
/// coordinates up to the end of the carry chain.
template <BitPoint P>
P odometer_add(std::int64_t k, const P& x) {
  return x.flipped(odometer_cocycle(k, x));
}

/// The adding machine: the integers acting on fair-coin sequences by binary
/// addition. Measure preserving, so the entropy integrand vanishes
/// identically; its role is to carry the transfer cocycle into skew products.
class OdometerSystem {
 public:
  using Element = std::int64_t;
  using State = LazyPoint;

  OdometerSystem() : p_(0.5) {}

  IntegerGroup group() const { return {}; }
  BernoulliParam param() const { return p_; }

  State sample_state(std::uint64_t seed) const { return LazyPoint(seed, p_); }
  State apply(Element k, const State& x) const { return odometer_add(k, x); }
  double log_rn_inv(Element, const State&) const { return 0.0; }
  bool preserves_measure() const { return true; }

  FinSet cocycle(Element k, const State& x) const { return odometer_cocycle(k, x); }

 private:
  BernoulliParam p_;
};

/// Callable form of the odometer's transfer cocycle.
struct OdometerCocycle {
  FinSet operator()(std::int64_t k, const LazyPoint& x) const {
    return odometer_cocycle(k, x);
  }
};

struct CocycleWitness {
  std::int64_t g;
  std::int64_t h;
  std::uint64_t state_seed;
  std::string detail;
};

struct CocycleCheckReport {
  std::size_t trials;
  bool passed;
  std::optional<CocycleWitness> witness;
};

/// Samples (g, h, x) and asserts the exact set identity
/// c(g+h, x) = c(g, h x) symdiff c(h, x); reports the first counterexample.
template <typename Base, typename C>
  requires Cocycle<C, typename Base::Element, typename Base::State> &&
           std::same_as<typename Base::Element, std::int64_t>
CocycleCheckReport cocycle_identity_check(const C& c, const Base& base,
                                          std::size_t trials, std::uint64_t seed,
                                          std::int64_t element_range = 8) {
  if (trials < 1)
    throw std::invalid_argument("cocycle_identity_check: trials must be >= 1");
  SeedStream elems(derive_seed(seed, 1));
  for (std::size_t t = 0; t < trials; ++t) {
    const std::int64_t g = elems.next_in_range(-element_range, element_range);
    const std::int64_t h = elems.next_in_range(-element_range, element_range);
    const std::uint64_t state_seed = prf(seed, t);
    const auto x = base.sample_state(state_seed);
    const FinSet lhs = c(g + h, x);
    const FinSet rhs = symdiff(c(g, base.apply(h, x)), c(h, x));
    if (!(lhs == rhs)) {
      std::ostringstream msg;
      msg << "c(g+h,x) = " << lhs << " but c(g,hx) symdiff c(h,x) = " << rhs;
      return {t + 1, false, CocycleWitness{g, h, state_seed, msg.str()}};
    }
  }
  return {trials, true, std::nullopt};
}

}  // namespace furst
