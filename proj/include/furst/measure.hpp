// Copyright (c) 2026 the furst authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "furst/finset.hpp"
#include "furst/groups.hpp"

namespace furst {

inline constexpr double kMeasureMassTolerance = 1e-12;

template <typename G>
struct BarMeasure;

/// A probability measure with finite support on a countable group. Atoms are
/// kept sorted by element with weights merged on equal elements, so two
/// measures are equal iff their atom lists are.
template <typename G>
class FiniteSupportMeasure {
 public:
  using Group = G;
  using Element = typename G::Element;
  using Atom = std::pair<Element, double>;

  FiniteSupportMeasure(G group, std::vector<Atom> atoms)
      : group_(std::move(group)) {
    std::map<Element, double> merged;
    double mass = 0.0;
    for (auto& [g, w] : atoms) {
      if (!(w >= 0.0) || !std::isfinite(w))
        throw std::invalid_argument("measure: weights must be finite and >= 0");
      if (!merged.emplace(std::move(g), w).second)
        throw std::invalid_argument("measure: duplicate support element");
      mass += w;
    }
    if (std::abs(mass - 1.0) > kMeasureMassTolerance)
      throw std::invalid_argument("measure: weights must sum to 1");
    atoms_.assign(merged.begin(), merged.end());
  }

  static FiniteSupportMeasure point_mass(G group, Element g) {
    return FiniteSupportMeasure(std::move(group), {{std::move(g), 1.0}});
  }

  static FiniteSupportMeasure uniform(G group, std::vector<Element> support) {
    if (support.empty())
      throw std::invalid_argument("measure: uniform needs nonempty support");
    std::vector<Atom> atoms;
    atoms.reserve(support.size());
    const double w = 1.0 / static_cast<double>(support.size());
    for (auto& g : support) atoms.emplace_back(std::move(g), w);
    return FiniteSupportMeasure(std::move(group), std::move(atoms));
  }

  const G& group() const { return group_; }
  std::span<const Atom> atoms() const { return atoms_; }
  std::size_t support_size() const { return atoms_.size(); }

  double total_mass() const {
    double m = 0.0;
    for (const auto& [g, w] : atoms_) m += w;
    return m;
  }

  friend bool operator==(const FiniteSupportMeasure&, const FiniteSupportMeasure&) = default;

 private:
  // Trusted path for internal construction: atoms already merged and sorted.
  FiniteSupportMeasure(G group, std::vector<Atom> atoms, int)
      : group_(std::move(group)), atoms_(std::move(atoms)) {}

  template <typename H>
  friend FiniteSupportMeasure<H> convolve(const FiniteSupportMeasure<H>&,
                                          const FiniteSupportMeasure<H>&);
  template <typename H>
  friend BarMeasure<H> geometric_bar(const FiniteSupportMeasure<H>&, unsigned);

  G group_;
  std::vector<Atom> atoms_;  // sorted by element, weights merged
};

/// Pushforward of the product measure under group multiplication.
template <typename G>
FiniteSupportMeasure<G> convolve(const FiniteSupportMeasure<G>& mu,
                                 const FiniteSupportMeasure<G>& nu) {
  if (!(mu.group() == nu.group()))
    throw std::invalid_argument("convolve: group mismatch");
  std::map<typename G::Element, double> merged;
  for (const auto& [g, wg] : mu.atoms())
    for (const auto& [h, wh] : nu.atoms())
      merged[mu.group().op(g, h)] += wg * wh;
  std::vector<typename FiniteSupportMeasure<G>::Atom> atoms(merged.begin(),
                                                            merged.end());
  return FiniteSupportMeasure<G>(mu.group(), std::move(atoms), 0);
}

template <typename G>
FiniteSupportMeasure<G> scaled_mixture(
    const G& group,
    const std::vector<std::pair<double, const FiniteSupportMeasure<G>*>>& parts) {
  std::map<typename G::Element, double> merged;
  for (const auto& [scale, m] : parts)
    for (const auto& [g, w] : m->atoms()) merged[g] += scale * w;
  std::vector<typename FiniteSupportMeasure<G>::Atom> atoms(merged.begin(),
                                                            merged.end());
  return FiniteSupportMeasure<G>(group, std::move(atoms), 0);
}

/// Truncated geometric average of convolution powers: sum over n = 0..N of
/// 2^-(n+1) mu^n, renormalized to unit mass. The dropped tail 2^-(N+1) is
/// carried in the result so downstream inequality checks can budget for it.
template <typename G>
struct BarMeasure {
  FiniteSupportMeasure<G> measure;
  unsigned trunc_n;
  double tail_mass;
};

template <typename G>
BarMeasure<G> geometric_bar(const FiniteSupportMeasure<G>& mu, unsigned trunc_n) {
  const double tail = std::ldexp(1.0, -static_cast<int>(trunc_n) - 1);
  const double norm = 1.0 / (1.0 - tail);

  FiniteSupportMeasure<G> power =
      FiniteSupportMeasure<G>::point_mass(mu.group(), mu.group().identity());
  std::map<typename G::Element, double> merged;
  for (unsigned n = 0; n <= trunc_n; ++n) {
    const double w = std::ldexp(1.0, -static_cast<int>(n) - 1) * norm;
    for (const auto& [g, wg] : power.atoms()) merged[g] += w * wg;
    if (n < trunc_n) power = convolve(power, mu);
  }
  std::vector<typename FiniteSupportMeasure<G>::Atom> atoms(merged.begin(),
                                                            merged.end());
  return {FiniteSupportMeasure<G>(mu.group(), std::move(atoms), 0), trunc_n, tail};
}

/// (sum of mu(T)|T|, sum of mu(T)max(T)). The first never exceeds the second.
inline std::pair<double, double> expected_size_and_max(
    const FiniteSupportMeasure<FinSetGroup>& mu) {
  double esize = 0.0, emax = 0.0;
  for (const auto& [t, w] : mu.atoms()) {
    esize += w * static_cast<double>(t.size());
    emax += w * static_cast<double>(t.max());
  }
  return {esize, emax};
}

/// Bounded search for the semigroup generating property: multiply support
/// elements in words of length <= radius and test whether the reached set
/// covers `target`. A false result means "not detected within radius", never
/// a disproof.
template <typename G>
bool check_generating(const FiniteSupportMeasure<G>& mu, unsigned radius,
                      const std::vector<typename G::Element>& target) {
  if (radius < 1) throw std::invalid_argument("check_generating: radius >= 1");
  std::set<typename G::Element> reached;
  std::set<typename G::Element> frontier;
  for (const auto& [g, w] : mu.atoms()) frontier.insert(g);
  for (unsigned len = 1; len <= radius; ++len) {
    reached.insert(frontier.begin(), frontier.end());
    if (len == radius) break;
    std::set<typename G::Element> next;
    for (const auto& x : frontier)
      for (const auto& [g, w] : mu.atoms()) next.insert(mu.group().op(x, g));
    frontier = std::move(next);
  }
  for (const auto& t : target)
    if (!reached.contains(t)) return false;
  return true;
}

/// Integer overload: detected iff words of length <= radius reach both a
/// positive and a negative integer.
inline bool check_generating(const FiniteSupportMeasure<IntegerGroup>& mu,
                             unsigned radius) {
  if (radius < 1) throw std::invalid_argument("check_generating: radius >= 1");
  std::set<std::int64_t> frontier;
  for (const auto& [g, w] : mu.atoms()) frontier.insert(g);
  bool pos = false, neg = false;
  for (unsigned len = 1; len <= radius; ++len) {
    for (std::int64_t x : frontier) {
      pos = pos || x > 0;
      neg = neg || x < 0;
    }
    if (pos && neg) return true;
    if (len == radius) break;
    std::set<std::int64_t> next;
    for (std::int64_t x : frontier)
      for (const auto& [g, w] : mu.atoms()) next.insert(x + g);
    frontier = std::move(next);
  }
  return false;
}

/// Cyclic overload: target is the whole group.
inline bool check_generating(const FiniteSupportMeasure<CyclicGroup>& mu,
                             unsigned radius) {
  std::vector<std::uint32_t> all(mu.group().modulus());
  for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;
  return check_generating(mu, radius, all);
}

}  // namespace furst
