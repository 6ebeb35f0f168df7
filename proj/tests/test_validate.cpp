#include <doctest.h>

#include <string>
#include <vector>

#include "nlosc/approx.hpp"
#include "nlosc/validate.hpp"

using namespace nlosc;

TEST_CASE("acceptance criteria: ten green, one documented red") {
  const std::vector<CriterionResult> results = run_acceptance();
  REQUIRE(results.size() == 11);
  for (std::size_t i = 0; i < results.size(); ++i) {
    CHECK(results[i].id == "A" + std::to_string(i + 1));
    CHECK(!results[i].detail.empty());
  }
  for (const CriterionResult& r : results) {
    INFO(r.id, ": ", r.detail);
    if (r.id == "A4") {
      // The bundled reference constant for the quadratic strong-coupling
      // limit disagrees with the measured limit by ~6e-4 (see README); the
      // criterion reports that honestly instead of hiding it.
      CHECK_FALSE(r.pass);
      CHECK(r.detail.find("measured-exact") != std::string::npos);
    } else {
      CHECK(r.pass);
    }
  }
}

TEST_CASE("negative control: a perturbed limit polynomial must fail the limit criterion") {
  CHECK(check_duffing_second_limit(duffing_T2_limit_polynomial()).pass);

  // Replace the polynomial outright: smallest period root lands at 6.
  EvenPolynomial crafted{{3600.0, -136.0, 1.0}};  // (s - 36)(s - 100)
  CHECK_FALSE(check_duffing_second_limit(crafted).pass);

  // Perturb one coefficient of the real polynomial by 5%.
  EvenPolynomial perturbed = duffing_T2_limit_polynomial();
  perturbed.coeffs[1] *= 1.05;
  CHECK_FALSE(check_duffing_second_limit(perturbed).pass);
}
