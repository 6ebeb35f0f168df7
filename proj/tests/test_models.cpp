#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "nlosc/models.hpp"

using namespace nlosc;

TEST_CASE("force evaluation per family") {
  CHECK(force_eval(ForceModel::harmonic(), 0.7) == 0.7);
  CHECK(force_eval(ForceModel::harmonic(), -2.5) == -2.5);

  CHECK(force_eval(ForceModel::duffing(1.0), 2.0) == doctest::Approx(10.0).epsilon(1e-15));
  CHECK(force_eval(ForceModel::duffing(0.5), 2.0) == doctest::Approx(6.0).epsilon(1e-15));
  CHECK(force_eval(ForceModel::duffing(0.0), 1.3) == doctest::Approx(1.3).epsilon(1e-15));

  CHECK(force_eval(ForceModel::signum(3.0), -0.5) == -3.0);
  CHECK(force_eval(ForceModel::signum(3.0), 0.0) == 0.0);
  CHECK(force_eval(ForceModel::signum(3.0), 2.0) == 3.0);

  CHECK(force_eval(ForceModel::quadratic_abs(1.0, 2.0), -3.0) ==
        doctest::Approx(-21.0).epsilon(1e-15));
  CHECK(force_eval(ForceModel::quadratic_abs(2.0, 1.0), 3.0) ==
        doctest::Approx(21.0).epsilon(1e-15));
}

TEST_CASE("potential values") {
  CHECK(potential_eval(ForceModel::harmonic(), 1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(potential_eval(ForceModel::duffing(1.0), 1.0) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(potential_eval(ForceModel::signum(2.0), -1.5) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(potential_eval(ForceModel::quadratic_abs(1.0, 1.0), 1.0) ==
        doctest::Approx(0.5 + 1.0 / 3.0).epsilon(1e-15));
  CHECK(potential_eval(ForceModel::quadratic_abs(1.0, 1.0), -1.0) ==
        doctest::Approx(0.5 + 1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("potential derivative matches force (central differences)") {
  const ForceModel models[4] = {ForceModel::harmonic(), ForceModel::duffing(1.7),
                                ForceModel::signum(2.3), ForceModel::quadratic_abs(1.4, 0.6)};
  const double h = 1e-5;
  for (const ForceModel& model : models) {
    for (double u : {-1.7, -1.0, -0.25, 0.25, 0.5, 1.0, 1.7}) {
      const double diff =
          (potential_eval(model, u + h) - potential_eval(model, u - h)) / (2.0 * h);
      const double f = force_eval(model, u);
      CHECK(std::abs(diff - f) <= 1e-6 * std::max(1.0, std::abs(f)));
    }
  }
}

TEST_CASE("potential increases away from the origin") {
  const ForceModel models[4] = {ForceModel::harmonic(), ForceModel::duffing(0.3),
                                ForceModel::signum(1.0), ForceModel::quadratic_abs(2.0, 1.5)};
  for (const ForceModel& model : models) {
    double prev = 0.0;
    for (int i = 1; i <= 8; ++i) {
      const double v = potential_eval(model, 0.25 * i);
      CHECK(v > prev);
      prev = v;
    }
  }
}

TEST_CASE("forces are odd to the last bit") {
  const ForceModel models[4] = {ForceModel::harmonic(), ForceModel::duffing(2.1),
                                ForceModel::signum(0.7), ForceModel::quadratic_abs(1.2, 3.4)};
  for (const ForceModel& model : models) {
    for (double u : {1e-3, 0.3, 1.0, 2.7, 15.0}) {
      CHECK(force_eval(model, -u) == -force_eval(model, u));
    }
  }
}

TEST_CASE("reduced parameter") {
  CHECK(reduced_parameter(ForceModel::duffing(0.25), 2.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(reduced_parameter(ForceModel::duffing(2.0), 3.0) == doctest::Approx(18.0).epsilon(1e-15));
  CHECK(reduced_parameter(ForceModel::quadratic_abs(1.0, 0.5), 2.0) ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(reduced_parameter(ForceModel::harmonic(), 5.0) == 0.0);
  CHECK_THROWS_WITH_AS(reduced_parameter(ForceModel::signum(1.0), 1.0),
                       "reduced_parameter: no reduced parameter for signum family",
                       std::invalid_argument);
  CHECK_THROWS_AS(reduced_parameter(ForceModel::duffing(1.0), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(reduced_parameter(ForceModel::duffing(1.0), -1.0), std::invalid_argument);
}

TEST_CASE("parity check accepts the built-in families and rejects even forces") {
  for (double a : {0.5, 1.0, 4.0}) {
    CHECK(parity_check(ForceModel::harmonic(), a));
    CHECK(parity_check(ForceModel::duffing(1.0), a));
    CHECK(parity_check(ForceModel::signum(2.0), a));
    CHECK(parity_check(ForceModel::quadratic_abs(1.0, 1.0), a));
  }
  CHECK_FALSE(detail::odd_on([](double u) { return u * u; }, 1.0, 16));
  CHECK_FALSE(detail::odd_on([](double u) { return u + 0.1; }, 1.0, 16));
  CHECK(detail::odd_on([](double u) { return std::sin(u); }, 2.0, 16));
  CHECK_THROWS_AS(detail::odd_on([](double u) { return u; }, 0.0, 16), std::invalid_argument);
  CHECK_THROWS_AS(detail::odd_on([](double u) { return u; }, 1.0, 0), std::invalid_argument);
}

TEST_CASE("constructors validate their parameters") {
  CHECK_THROWS_AS(ForceModel::duffing(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(ForceModel::signum(0.0), std::invalid_argument);
  CHECK_THROWS_AS(ForceModel::signum(-2.0), std::invalid_argument);
  CHECK_THROWS_AS(ForceModel::quadratic_abs(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(ForceModel::quadratic_abs(-1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(ForceModel::quadratic_abs(1.0, -0.5), std::invalid_argument);
}

TEST_CASE("family names") {
  CHECK(std::string(family_name(Family::Harmonic)) == "harmonic");
  CHECK(std::string(family_name(Family::Duffing)) == "duffing");
  CHECK(std::string(family_name(Family::Signum)) == "signum");
  CHECK(std::string(family_name(Family::QuadraticAbs)) == "quadratic-abs");
}
