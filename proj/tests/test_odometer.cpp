// Copyright (c) 2026 the furst authors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "furst/odometer.hpp"

using furst::BernoulliParam;
using furst::FinSet;
using furst::LazyPoint;
using furst::odometer_add;
using furst::odometer_cocycle;
using furst::OdometerCocycle;
using furst::OdometerSystem;
using furst::PrefixPoint;

TEST_CASE("adding zero changes nothing") {
  const LazyPoint x(99, BernoulliParam(0.5));
  CHECK(odometer_cocycle(0, x) == FinSet{});
  const auto y = odometer_add(0, x);
  for (std::uint32_t n = 1; n <= 50; ++n) CHECK(y.coordinate(n) == x.coordinate(n));
}

TEST_CASE("increment flips the carry chain") {
  SECTION("no carry") {
    const PrefixPoint x({false, true, true});
    CHECK(odometer_cocycle(1, x) == FinSet{1});
    const auto y = odometer_add(1, x);
    CHECK(y.coordinate(1) == true);
    CHECK(y.coordinate(2) == true);
    CHECK(y.coordinate(3) == true);
  }

  SECTION("carry through two ones: 011 + 1 = 100 little-endian") {
    const PrefixPoint x({true, true, false});
    CHECK(odometer_cocycle(1, x) == FinSet{1, 2, 3});
    const auto y = odometer_add(1, x);
    CHECK(y.coordinate(1) == false);
    CHECK(y.coordinate(2) == false);
    CHECK(y.coordinate(3) == true);
  }
}

TEST_CASE("decrement borrows") {
  const PrefixPoint x({false, false, true});
  CHECK(odometer_cocycle(-1, x) == FinSet{1, 2, 3});
  const auto y = odometer_add(-1, x);
  CHECK(y.coordinate(1) == true);
  CHECK(y.coordinate(2) == true);
  CHECK(y.coordinate(3) == false);

  const PrefixPoint z({true, false});
  CHECK(odometer_cocycle(-1, z) == FinSet{1});
}

TEST_CASE("multi-bit constants add correctly") {
  // x = (0,1,1,0) little-endian is 6; 6 + 5 = 11 = (1,1,0,1).
  const PrefixPoint x({false, true, true, false});
  const auto y = odometer_add(5, x);
  CHECK(y.coordinate(1) == true);
  CHECK(y.coordinate(2) == true);
  CHECK(y.coordinate(3) == false);
  CHECK(y.coordinate(4) == true);
}

TEST_CASE("adding then subtracting restores the point") {
  furst::SeedStream rng(606);
  const OdometerSystem odo;
  for (int t = 0; t < 200; ++t) {
    const auto x = odo.sample_state(rng.next_u64());
    const auto k = rng.next_in_range(-20, 20);
    const auto y = odo.apply(-k, odo.apply(k, x));
    CHECK(y.flips() == FinSet{});
    for (std::uint32_t n = 1; n <= 80; ++n) CHECK(y.coordinate(n) == x.coordinate(n));
  }
}

TEST_CASE("addition composes") {
  furst::SeedStream rng(607);
  const OdometerSystem odo;
  for (int t = 0; t < 200; ++t) {
    const auto x = odo.sample_state(rng.next_u64());
    const auto a = rng.next_in_range(-12, 12);
    const auto b = rng.next_in_range(-12, 12);
    const auto one_step = odo.apply(a + b, x);
    const auto two_step = odo.apply(a, odo.apply(b, x));
    for (std::uint32_t n = 1; n <= 64; ++n)
      CHECK(one_step.coordinate(n) == two_step.coordinate(n));
  }
}

TEST_CASE("carry length distribution") {
  const OdometerSystem odo;
  const std::size_t n = 100000;
  double total = 0.0;
  std::size_t singles = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = odo.sample_state(furst::derive_seed(41, i));
    const auto c = odometer_cocycle(1, x);
    total += static_cast<double>(c.size());
    singles += c.size() == 1 ? 1 : 0;
    // The +1 carry chain is always an initial segment {1..k}.
    CHECK(c.max() == c.size());
  }
  CHECK(total / static_cast<double>(n) == Catch::Approx(2.0).margin(0.1));
  CHECK(static_cast<double>(singles) / static_cast<double>(n) ==
        Catch::Approx(0.5).margin(0.02));
}

TEST_CASE("carry cap raises a diagnostic on a defective bit source") {
  std::vector<bool> all_ones(1100, true);
  const PrefixPoint x(all_ones);
  CHECK_THROWS_AS(odometer_cocycle(1, x), std::runtime_error);
}

TEST_CASE("odometer is measure preserving") {
  const OdometerSystem odo;
  CHECK(odo.preserves_measure());
  CHECK(odo.param().value() == 0.5);
  const auto x = odo.sample_state(1);
  CHECK(odo.log_rn_inv(12345, x) == 0.0);
}

TEST_CASE("cocycle identity check") {
  const OdometerSystem odo;

  SECTION("the carry cocycle passes ten thousand trials") {
    const auto rep = furst::cocycle_identity_check(OdometerCocycle{}, odo, 10000, 2026);
    CHECK(rep.passed);
    CHECK(rep.trials == 10000);
    CHECK_FALSE(rep.witness.has_value());
  }

  SECTION("the trivial cocycle passes") {
    const auto trivial = [](std::int64_t, const LazyPoint&) { return FinSet{}; };
    CHECK(furst::cocycle_identity_check(trivial, odo, 1000, 3).passed);
  }

  SECTION("a broken cocycle fails with a witness") {
    const auto broken = [](std::int64_t g, const LazyPoint&) {
      return FinSet{static_cast<std::uint32_t>(((g % 5) + 5) % 5 + 1)};
    };
    const auto rep = furst::cocycle_identity_check(broken, odo, 10000, 4);
    CHECK_FALSE(rep.passed);
    REQUIRE(rep.witness.has_value());
    CHECK(!rep.witness->detail.empty());
  }
}
