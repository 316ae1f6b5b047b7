// Copyright (c) 2026 the furst authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "furst/groups.hpp"
#include "furst/measure.hpp"
#include "furst/nonsingular.hpp"
#include "furst/rng.hpp"

namespace furst {

struct RandomFiniteSystem {
  FiniteNonsingularSystem<PermutationGroup> system;
  FiniteSupportMeasure<PermutationGroup> mu;
};

namespace detail {

inline Permutation random_permutation(SeedStream& rng, std::size_t degree) {
  std::vector<std::uint32_t> map(degree);
  for (std::uint32_t i = 0; i < degree; ++i) map[i] = i;
  for (std::size_t i = degree; i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.next_below(i));
    std::swap(map[i - 1], map[j]);
  }
  return Permutation(std::move(map));
}

inline std::vector<double> random_probability_vector(SeedStream& rng, std::size_t k) {
  std::vector<double> w(k);
  double mass = 0.0;
  for (double& x : w) {
    x = -std::log(rng.next_open_unit());  // exponential, strictly positive
    mass += x;
  }
  for (double& x : w) x /= mass;
  return w;
}

}  // namespace detail

/// A seeded random finite system for property sweeps: 2..max_states states,
/// strictly positive random state distribution, and a random measure carried
/// by up to max_support distinct permutations acting directly on the states.
inline RandomFiniteSystem random_finite_system(std::uint64_t seed,
                                               std::size_t max_states = 8,
                                               std::size_t max_support = 4) {
  SeedStream rng(seed);
  const std::size_t k = 2 + static_cast<std::size_t>(rng.next_below(max_states - 1));
  auto eta = detail::random_probability_vector(rng, k);

  // Cannot ask for more distinct permutations than the state count admits.
  std::size_t available = 1;
  for (std::size_t i = 2; i <= k && available < max_support; ++i) available *= i;
  const std::size_t m =
      1 + static_cast<std::size_t>(rng.next_below(std::min(max_support, available)));
  std::set<Permutation> support;
  while (support.size() < m) support.insert(detail::random_permutation(rng, k));

  auto weights = detail::random_probability_vector(rng, m);
  std::vector<std::pair<Permutation, double>> atoms;
  std::size_t i = 0;
  for (const auto& p : support) atoms.emplace_back(p, weights[i++]);

  PermutationGroup group(k);
  FiniteNonsingularSystem<PermutationGroup> system(
      group, std::move(eta),
      [](const Permutation& g, std::size_t x) {
        return static_cast<std::size_t>(g(static_cast<std::uint32_t>(x)));
      });
  return {std::move(system),
          FiniteSupportMeasure<PermutationGroup>(group, std::move(atoms))};
}

}  // namespace furst
