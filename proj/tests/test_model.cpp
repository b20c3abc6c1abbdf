#include <cmath>

#include "doctest.h"
#include "xychain/model.hpp"

// Reference values are either independent closed forms evaluated inline or
// constants frozen from a 25-digit arbitrary-precision computation.

using namespace xychain;

TEST_CASE("single_spin_phase endpoints and domain") {
  CHECK(single_spin_phase(0.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(single_spin_phase(pi) == doctest::Approx(2.0 * pi).epsilon(1e-15));
  CHECK(single_spin_phase(pi / 2) == doctest::Approx(pi).epsilon(1e-15));
  CHECK_THROWS_AS(single_spin_phase(-0.1), std::domain_error);
  CHECK_THROWS_AS(single_spin_phase(pi + 0.1), std::domain_error);
}

TEST_CASE("energy gap and Bogoliubov angle at k = pi/3, B = 1, alpha = 0.2") {
  // Lambda = sqrt((1/2 - 1)^2 + (0.2 sin(pi/3))^2) = sqrt(0.28)
  double lam = std::sqrt(0.28);
  CHECK(energy_gap(pi / 3, 1.0, 0.2) == doctest::Approx(lam).epsilon(1e-14));
  CHECK(bogoliubov_angle_cos(pi / 3, 1.0, 0.2) ==
        doctest::Approx(-0.5 / lam).epsilon(1e-14));
}

TEST_CASE("gapless points are rejected") {
  // alpha = 0, B = cos k: the gap closes exactly
  CHECK_THROWS_AS(bogoliubov_angle_cos(pi / 3, 0.5, 0.0), GaplessPointError);
  CHECK_THROWS_AS(mode_phase(pi / 3, 0.5, 0.0), GaplessPointError);
  try {
    bogoliubov_angle_cos(pi / 3, 0.5, 0.0);
  } catch (const GaplessPointError& e) {
    CHECK(e.k == doctest::Approx(pi / 3));
    CHECK(e.field == doctest::Approx(0.5));
    CHECK(e.alpha == 0.0);
  }
}

TEST_CASE("mode phase fixtures at k = pi/3, alpha = 0.2") {
  CHECK(mode_phase(pi / 3, 1.0, 0.2) ==
        doctest::Approx(6.1101186828991081).epsilon(1e-12));
  CHECK(mode_phase(pi / 3, 0.0, 0.2) ==
        doctest::Approx(0.1730666242804784).epsilon(1e-12));
  CHECK(mode_phase(pi / 3, 3.0, 0.2) ==
        doctest::Approx(6.2756725200521030).epsilon(1e-12));
  CHECK(mode_phase(pi / 3, 3.0, 0.2, Convention::Mod2Pi) ==
        doctest::Approx(6.2756725200521030).epsilon(1e-12));
}

TEST_CASE("total phase fixtures") {
  // N = 3, alpha = 1, B = 2: one positive mode, Gamma = pi (1 + sqrt(3)/2)
  PhaseReport r3 = total_phase(ChainSpec(3, 1.0), 2.0);
  double expected3 = 2.0 * pi * (1.0 + std::sqrt(3.0) / 2.0);
  CHECK(r3.per_mode.size() == 1);
  CHECK(r3.total_raw == doctest::Approx(expected3).epsilon(1e-14));
  CHECK(r3.total_mod ==
        doctest::Approx(expected3 - 2.0 * pi).epsilon(1e-12));

  PhaseReport r5 = total_phase(ChainSpec(5, 1.0), 2.0);
  CHECK(r5.per_mode.size() == 2);
  CHECK(r5.total_raw ==
        doctest::Approx(24.010401067306744).epsilon(1e-12));
}

TEST_CASE("total phase equals naive summation on a large grid") {
  ChainSpec spec(1001, 0.7);
  ModeGrid grid = ModeGrid::half_integer(spec);
  double naive = 0.0;
  for (double k : grid.momenta()) naive += mode_phase(k, 1.3, spec.alpha);
  naive *= 2.0;
  PhaseReport r = total_phase(spec, 1.3);
  CHECK(r.total_raw == doctest::Approx(naive).epsilon(1e-12));
  CHECK(r.total_mod == doctest::Approx(mod_2pi(r.total_raw)).epsilon(1e-12));
}

TEST_CASE("mode grid is the ascending half-integer grid") {
  ChainSpec spec(7, 1.0);
  ModeGrid grid = ModeGrid::half_integer(spec);
  REQUIRE(grid.size() == 3);
  for (std::size_t j = 0; j < grid.size(); ++j)
    CHECK(grid[j] ==
          doctest::Approx((2.0 * (j + 1) - 1.0) * pi / 7.0).epsilon(1e-15));
  CHECK(grid[0] < grid[1]);
  CHECK(grid[1] < grid[2]);
  CHECK_THROWS_AS(ModeGrid::custom({-0.5}), std::domain_error);
  CHECK_THROWS_AS(ModeGrid::custom({pi}), std::domain_error);
}

TEST_CASE("domain validation of the basic types") {
  CHECK_THROWS_AS(ChainSpec(4, 1.0), std::domain_error);
  CHECK_THROWS_AS(ChainSpec(1, 1.0), std::domain_error);
  CHECK_THROWS_AS(ChainSpec(5, 1.5), std::domain_error);
  CHECK_THROWS_AS(ChainSpec(5, -0.1), std::domain_error);
  CHECK_THROWS_AS(QuenchSchedule(0.0), std::domain_error);
  CHECK_THROWS_AS(QuenchSchedule(-1.0), std::domain_error);
}

TEST_CASE("quench schedule and phase along the ramp") {
  QuenchSchedule schedule(2.0);
  CHECK(schedule.field_at(-4.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(schedule.field_at(0.0) == 0.0);
  CHECK(schedule.field_at(1.0) == 0.0);
  // Gamma_k(t) is the static mode phase at B(t)
  CHECK(mode_phase_at_time(pi / 3, -2.0, schedule, 0.2) ==
        doctest::Approx(mode_phase(pi / 3, 1.0, 0.2)).epsilon(1e-15));
  CHECK(mode_phase_at_time(pi / 3, 0.0, schedule, 0.2) ==
        doctest::Approx(mode_phase(pi / 3, 0.0, 0.2)).epsilon(1e-15));
}

TEST_CASE("critical mode phase closed form") {
  // k = pi/3, alpha = 1: pi (1 - sqrt(3)/2)
  CHECK(critical_mode_phase(pi / 3, 1.0) ==
        doctest::Approx(pi * (1.0 - std::sqrt(3.0) / 2.0)).epsilon(1e-14));
}

TEST_CASE("adiabatic threshold N^2 / (2 pi^3)") {
  CHECK(adiabatic_threshold(101) ==
        doctest::Approx(101.0 * 101.0 / (2.0 * pi * pi * pi)).epsilon(1e-14));
  CHECK(adiabatic_threshold(3) ==
        doctest::Approx(9.0 / (2.0 * pi * pi * pi)).epsilon(1e-14));
  CHECK_THROWS_AS(adiabatic_threshold(1), std::domain_error);
}

TEST_CASE("mod_2pi reduction") {
  CHECK(mod_2pi(0.0) == 0.0);
  CHECK(mod_2pi(2.0 * pi) == 0.0);
  CHECK(mod_2pi(-0.5) == doctest::Approx(2.0 * pi - 0.5).epsilon(1e-15));
  CHECK(mod_2pi(7.0 * pi) == doctest::Approx(pi).epsilon(1e-12));
}
