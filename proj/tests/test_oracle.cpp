#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "nlosc/models.hpp"
#include "nlosc/oracle.hpp"

using namespace nlosc;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("energy integrand is finite and pinned at the turning point") {
  const ForceModel models[4] = {ForceModel::harmonic(), ForceModel::duffing(1.3),
                                ForceModel::signum(2.0), ForceModel::quadratic_abs(1.1, 0.8)};
  for (const ForceModel& model : models) {
    for (double amplitude : {0.5, 1.0, 2.0}) {
      for (int i = 0; i <= 64; ++i) {
        const double theta = 0.5 * kPi * i / 64.0;
        const double g = energy_integrand(model, amplitude, theta);
        CHECK(std::isfinite(g));
        CHECK(g > 0.0);
      }
      const double endpoint = energy_integrand(model, amplitude, 0.5 * kPi);
      const double expected = std::sqrt(amplitude / force_eval(model, amplitude));
      CHECK(endpoint == doctest::Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("energy oracle reproduces exactly solvable periods") {
  for (double amplitude : {0.5, 1.0, 2.0}) {
    CHECK(exact_period_energy(ForceModel::harmonic(), amplitude) ==
          doctest::Approx(2.0 * kPi).epsilon(1e-12));
  }
  const double cases[4][2] = {{1.0, 1.0}, {2.0, 1.0}, {1.0, 4.0}, {8.0, 1.0}};
  for (const auto& c : cases) {
    CHECK(exact_period_energy(ForceModel::signum(c[0]), c[1]) ==
          doctest::Approx(4.0 * std::sqrt(2.0 * c[1] / c[0])).epsilon(1e-12));
  }
}

TEST_CASE("energy oracle duffing periods") {
  CHECK(exact_period_energy(ForceModel::duffing(1.0), std::sqrt(0.1)) ==
        doctest::Approx(6.060656736957467).epsilon(1e-11));
  CHECK(exact_period_energy(ForceModel::duffing(1.0), 1.0) ==
        doctest::Approx(4.768022029102461).epsilon(1e-11));
  CHECK(exact_period_energy(ForceModel::duffing(1.0), std::sqrt(10.0)) ==
        doctest::Approx(2.191829112725945).epsilon(1e-11));
  CHECK(exact_period_energy(ForceModel::duffing(1.0), 10.0) ==
        doctest::Approx(0.736288960821622).epsilon(1e-11));
  CHECK(exact_period_energy(ForceModel::duffing(1.0), 0.5) ==
        doctest::Approx(5.768845544751767).epsilon(1e-11));
  CHECK(exact_period_energy(ForceModel::duffing(1.0), 2.0) ==
        doctest::Approx(3.179723316781715).epsilon(1e-11));
  CHECK(exact_period_energy(ForceModel::duffing(0.5), 1.0) ==
        doctest::Approx(5.366659355191767).epsilon(1e-11));
  // rho invariance: (0.25, 2) carries the same rho as (1, 1).
  CHECK(exact_period_energy(ForceModel::duffing(0.25), 2.0) ==
        doctest::Approx(4.768022029102461).epsilon(1e-11));
}

TEST_CASE("energy oracle quadratic periods") {
  CHECK(exact_period_energy(ForceModel::quadratic_abs(1.0, 1.0), 1.0) ==
        doctest::Approx(4.627820497282723).epsilon(1e-11));
  CHECK(exact_period_energy(ForceModel::quadratic_abs(1.0, 1.0), 10.0) ==
        doctest::Approx(2.051559484156761).epsilon(1e-11));
  CHECK(exact_period_energy(ForceModel::quadratic_abs(1.0, 1.0), 2.0) ==
        doctest::Approx(3.836247443597540).epsilon(1e-11));
  CHECK(exact_period_energy(ForceModel::quadratic_abs(1.0, 4.0), 1.0) ==
        doctest::Approx(3.009786695346386).epsilon(1e-11));
  // All three of these share rho = 0.5.
  const double t_ref = 5.267831587699267;
  CHECK(exact_period_energy(ForceModel::quadratic_abs(1.0, 0.25), 2.0) ==
        doctest::Approx(t_ref).epsilon(1e-11));
  CHECK(exact_period_energy(ForceModel::quadratic_abs(1.0, 1.0), 0.5) ==
        doctest::Approx(t_ref).epsilon(1e-11));
  CHECK(exact_period_energy(ForceModel::quadratic_abs(1.0, 0.5), 1.0) ==
        doctest::Approx(t_ref).epsilon(1e-11));
}

TEST_CASE("pure strong-coupling periods") {
  CHECK(exact_duffing_limit() == doctest::Approx(7.416298709205490).epsilon(1e-12));
  CHECK(exact_quadratic_limit() == doctest::Approx(6.869261369017640).epsilon(1e-12));
}

TEST_CASE("ode integration on the harmonic oscillator") {
  const Trajectory traj = integrate_ode(ForceModel::harmonic(), 1.0, 2.0 * kPi, 1e-12);
  REQUIRE(traj.samples.size() >= 3);
  CHECK(traj.samples.front().t == 0.0);
  CHECK(traj.samples.front().u == 1.0);
  CHECK(traj.samples.front().v == 0.0);
  for (std::size_t i = 1; i < traj.samples.size(); ++i) {
    CHECK(traj.samples[i].t > traj.samples[i - 1].t);
  }
  CHECK(traj.samples.back().t == 2.0 * kPi);
  CHECK(traj.samples.back().u == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::abs(traj.samples.back().v) <= 1e-8);
}

TEST_CASE("ode integration is exact on signum parabolas") {
  // f = 2 sgn(u), A = 1: u(t) = 1 - t^2 until the crossing at t = 1.
  const Trajectory traj = integrate_ode(ForceModel::signum(2.0), 1.0, 1.0, 1e-10);
  for (const TrajectorySample& s : traj.samples) {
    CHECK(std::abs(s.u - (1.0 - s.t * s.t)) <= 1e-9);
    CHECK(std::abs(s.v + 2.0 * s.t) <= 1e-9);
  }
}

TEST_CASE("ode round trip over one period") {
  const ForceModel models[4] = {ForceModel::harmonic(), ForceModel::duffing(1.0),
                                ForceModel::signum(1.0), ForceModel::quadratic_abs(1.0, 1.0)};
  for (const ForceModel& model : models) {
    const double period = exact_period_energy(model, 1.0);
    const auto states = ode_states_at(model, 1.0, {0.5 * period, period}, 1e-11);
    REQUIRE(states.size() == 2);
    CHECK(states[0].u == doctest::Approx(-1.0).epsilon(1e-7));  // half period: mirror point
    CHECK(states[1].u == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(std::abs(states[1].v) <= 1e-6);
  }
}

TEST_CASE("energy drift is small at tight tolerance and grows when loosened") {
  const ForceModel model = ForceModel::duffing(1.0);
  const double period = exact_period_energy(model, 1.0);
  const double tight = energy_drift(integrate_ode(model, 1.0, period, 1e-10));
  const double loose = energy_drift(integrate_ode(model, 1.0, period, 1e-4));
  CHECK(tight <= 1e-8);
  CHECK(loose > tight);
}

TEST_CASE("energy drift on a hand-built exact trajectory is zero-ish") {
  Trajectory traj{ForceModel::harmonic(), 1.0, {}};
  for (int i = 0; i <= 16; ++i) {
    const double t = 2.0 * kPi * i / 16.0;
    traj.samples.push_back({t, std::cos(t), -std::sin(t)});
  }
  CHECK(energy_drift(traj) <= 1e-15);
  CHECK(traj.energy_at(0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(energy_drift(Trajectory{ForceModel::harmonic(), 1.0, {}}),
                  std::invalid_argument);
}

TEST_CASE("ode period agrees with the energy oracle") {
  CHECK(period_from_ode(ForceModel::harmonic(), 1.0, 1e-11) ==
        doctest::Approx(2.0 * kPi).epsilon(1e-9));
  CHECK(period_from_ode(ForceModel::duffing(1.0), 1.0, 1e-11) ==
        doctest::Approx(4.768022029102461).epsilon(1e-9));
  CHECK(period_from_ode(ForceModel::quadratic_abs(1.0, 1.0), 1.0, 1e-11) ==
        doctest::Approx(4.627820497282723).epsilon(1e-9));
  CHECK(period_from_ode(ForceModel::signum(2.0), 1.0, 1e-11) ==
        doctest::Approx(4.0).epsilon(1e-10));
}

TEST_CASE("ode_states_at input validation and degenerate queries") {
  const ForceModel model = ForceModel::harmonic();
  CHECK_THROWS_AS(ode_states_at(model, 1.0, {1.0, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(ode_states_at(model, 1.0, {-0.5}), std::invalid_argument);
  const auto states = ode_states_at(model, 1.0, {0.0, 0.0, 1.0, 1.0});
  REQUIRE(states.size() == 4);
  CHECK(states[0].u == 1.0);
  CHECK(states[0].v == 0.0);
  CHECK(states[1].u == states[0].u);
  CHECK(states[3].u == states[2].u);
}

TEST_CASE("scaled limits") {
  const double duffing_closed =
      scaled_limit(Family::Duffing, [](double rho) { return 2.0 * kPi / std::sqrt(1.0 + 7.0 * rho / 9.0); });
  CHECK(duffing_closed == doctest::Approx(6.0 * kPi / std::sqrt(7.0)).epsilon(1e-7));

  const double duffing_exact = scaled_limit(Family::Duffing, [](double rho) {
    return exact_period_energy(ForceModel::duffing(1.0), std::sqrt(rho));
  });
  CHECK(duffing_exact == doctest::Approx(7.416298709205490).epsilon(1e-8));

  const double quadratic_exact = scaled_limit(Family::QuadraticAbs, [](double rho) {
    return exact_period_energy(ForceModel::quadratic_abs(1.0, 1.0), rho);
  });
  CHECK(quadratic_exact == doctest::Approx(6.869261369017640).epsilon(1e-6));
}

TEST_CASE("scaled limit validation and failure modes") {
  auto linear_decay = [](double rho) { return 1.0 / std::sqrt(rho); };
  CHECK_THROWS_AS(scaled_limit(Family::Harmonic, linear_decay), std::invalid_argument);
  CHECK_THROWS_AS(scaled_limit(Family::Signum, linear_decay), std::invalid_argument);
  CHECK_THROWS_AS(scaled_limit(Family::Duffing, linear_decay, {1e4, 1e6}),
                  std::invalid_argument);
  CHECK_THROWS_AS(scaled_limit(Family::Duffing, linear_decay, {1e6, 1e4, 1e8}),
                  std::invalid_argument);
  CHECK_THROWS_WITH_AS(scaled_limit(Family::Duffing, [](double) { return 1.0; }),
                       "scaled_limit: not converged", std::runtime_error);
}

TEST_CASE("ode input validation") {
  CHECK_THROWS_AS(integrate_ode(ForceModel::harmonic(), 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(integrate_ode(ForceModel::harmonic(), 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(integrate_ode(ForceModel::harmonic(), 1.0, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(period_from_ode(ForceModel::harmonic(), -1.0), std::invalid_argument);
  CHECK_THROWS_AS(exact_period_energy(ForceModel::harmonic(), 0.0), std::invalid_argument);
}
