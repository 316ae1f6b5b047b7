// Copyright (c) 2026 the furst authors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <limits>

#include <catch2/catch_amalgamated.hpp>

#include "furst/skew.hpp"

using furst::BernoulliParam;
using furst::build_skew;
using furst::FiniteSupportMeasure;
using furst::FinSet;
using furst::IntegerGroup;
using furst::LazyPoint;
using furst::OdometerCocycle;
using furst::OdometerSystem;

namespace {

using IntMeasure = FiniteSupportMeasure<IntegerGroup>;

struct TrivialCocycle {
  FinSet operator()(std::int64_t, const LazyPoint&) const { return {}; }
};

}  // namespace

TEST_CASE("skew construction requires a measure preserving base") {
  const BernoulliParam p(0.75);
  CHECK_NOTHROW(build_skew(OdometerSystem{}, OdometerCocycle{}, p));

  // A flip-action base off the symmetric parameter is nonsingular but not
  // measure preserving, so it is rejected.
  struct NonPmpBase {
    using Element = std::int64_t;
    using State = LazyPoint;
    furst::IntegerGroup group() const { return {}; }
    State sample_state(std::uint64_t seed) const {
      return LazyPoint(seed, BernoulliParam(0.7));
    }
    State apply(Element, const State& x) const { return x; }
    double log_rn_inv(Element, const State&) const { return 0.1; }
    bool preserves_measure() const { return false; }
  };
  CHECK_THROWS_AS(build_skew(NonPmpBase{}, TrivialCocycle{}, p), std::invalid_argument);
}

TEST_CASE("trivial cocycle gives a product system with zero entropy") {
  const auto sys = build_skew(OdometerSystem{}, TrivialCocycle{}, BernoulliParam(0.8));
  const auto mu = IntMeasure::uniform({}, {1, -1});
  const auto est = furst::mc_entropy(sys, mu, 3000, 11);
  CHECK(est.mean == 0.0);
  CHECK(est.std_error == 0.0);
}

TEST_CASE("identity element has zero log density") {
  const auto sys = build_skew(OdometerSystem{}, OdometerCocycle{}, BernoulliParam(0.75));
  const auto s = sys.sample_state(77);
  CHECK(sys.log_rn_inv(0, s) == 0.0);
}

TEST_CASE("skew system satisfies the chain rule") {
  const auto sys = build_skew(OdometerSystem{}, OdometerCocycle{}, BernoulliParam(0.7));
  furst::SeedStream rng(404);
  for (int t = 0; t < 1000; ++t) {
    const auto g = rng.next_in_range(-8, 8);
    const auto h = rng.next_in_range(-8, 8);
    const auto x = sys.sample_state(rng.next_u64());
    const double lhs = sys.log_rn_inv(g + h, x);
    const double rhs = sys.log_rn_inv(g, sys.apply(h, x)) + sys.log_rn_inv(h, x);
    CHECK(lhs == Catch::Approx(rhs).margin(1e-9));
  }
}

TEST_CASE("fiberwise entropy formula") {
  const OdometerSystem base;
  const BernoulliParam p(0.75);

  SECTION("identity measure gives zero") {
    const auto est = furst::skew_entropy_exact(IntMeasure::point_mass({}, 0),
                                               OdometerCocycle{}, base, p, 2000, 1);
    CHECK(est.mean == 0.0);
    CHECK(est.std_error == 0.0);
  }

  SECTION("generator: expected flip count is two") {
    const auto est = furst::skew_entropy_exact(IntMeasure::point_mass({}, 1),
                                               OdometerCocycle{}, base, p, 100000, 2);
    CHECK(std::abs(est.mean - 2.0 * furst::phi(p)) <= 3.0 * est.std_error);
    CHECK(est.std_error > 0.0);
  }

  SECTION("borrows mirror carries") {
    const auto est = furst::skew_entropy_exact(IntMeasure::uniform({}, {1, -1}),
                                               OdometerCocycle{}, base, p, 100000, 3);
    CHECK(std::abs(est.mean - 2.0 * furst::phi(p)) <= 3.0 * est.std_error);
  }
}

TEST_CASE("direct monte carlo on the assembled skew agrees with the formula") {
  const OdometerSystem base;
  const BernoulliParam p(0.75);
  const auto mu = IntMeasure::point_mass({}, 1);
  const auto direct = furst::mc_entropy(build_skew(base, OdometerCocycle{}, p), mu,
                                        100000, 21);
  const auto formula =
      furst::skew_entropy_exact(mu, OdometerCocycle{}, base, p, 100000, 22);
  const double combined = std::sqrt(direct.std_error * direct.std_error +
                                    formula.std_error * formula.std_error);
  CHECK(std::abs(direct.mean - formula.mean) <= 4.0 * combined);
}

TEST_CASE("expected maximum of the carry set stays near two") {
  const OdometerSystem base;
  double total_max = 0.0;
  const std::size_t n = 100000;
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = base.sample_state(furst::derive_seed(9090, i));
    total_max += static_cast<double>(furst::odometer_cocycle(1, x).max());
  }
  const double mean = total_max / static_cast<double>(n);
  CHECK(mean >= 1.8);
  CHECK(mean <= 2.2);
}

TEST_CASE("skew entropy vanishes along the parameter sweep") {
  const OdometerSystem base;
  const auto mu = IntMeasure::point_mass({}, 1);
  const auto carry =
      furst::expected_cocycle_size(mu, OdometerCocycle{}, base, 50000, 1234);
  double prev = std::numeric_limits<double>::infinity();
  for (int k = 2; k <= 12; ++k) {
    const double pv = 0.5 + std::ldexp(1.0, -k);
    const double h = furst::phi(BernoulliParam(pv)) * carry.mean;
    CHECK(h < prev);
    prev = h;
  }
  CHECK(prev < 1e-4);
}
