#include <doctest.h>

#include <cmath>

#include "laas/errors.hpp"
#include "laas/student_t.hpp"
#include "oracles.hpp"

using namespace laas;

TEST_CASE("regularized incomplete beta endpoints and symmetry") {
  CHECK(regularized_incomplete_beta(0.0, 2.0, 3.0) == 0.0);
  CHECK(regularized_incomplete_beta(1.0, 2.0, 3.0) == 1.0);
  CHECK(regularized_incomplete_beta(0.5, 2.0, 2.0) == doctest::Approx(0.5).epsilon(1e-12));
  // I_x(1, 1) is the identity
  CHECK(regularized_incomplete_beta(0.3, 1.0, 1.0) == doctest::Approx(0.3).epsilon(1e-12));
  // complement identity I_x(a,b) = 1 - I_{1-x}(b,a)
  const double lhs = regularized_incomplete_beta(0.37, 2.5, 4.0);
  const double rhs = 1.0 - regularized_incomplete_beta(0.63, 4.0, 2.5);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  CHECK_THROWS_AS(regularized_incomplete_beta(-0.1, 1.0, 1.0), InvalidParameter);
  CHECK_THROWS_AS(regularized_incomplete_beta(0.5, 0.0, 1.0), InvalidParameter);
}

TEST_CASE("student t cdf basics") {
  CHECK(student_t_cdf(0.0, 5.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(student_t_cdf(100.0, 5.0) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(student_t_cdf(-100.0, 5.0) == doctest::Approx(0.0).epsilon(1e-6));
  // df=1 is the Cauchy distribution: F(1) = 3/4
  CHECK(student_t_cdf(1.0, 1.0) == doctest::Approx(0.75).epsilon(1e-12));
  CHECK_THROWS_AS(student_t_cdf(1.0, 0.0), InvalidParameter);
}

TEST_CASE("two-sided p-value properties") {
  CHECK(student_t_two_sided_p(0.0, 7.0) == 1.0);
  for (double t : {0.3, 1.0, 2.5, 6.0}) {
    for (double df : {1.0, 4.0, 30.0}) {
      const double p = student_t_two_sided_p(t, df);
      CHECK(p == student_t_two_sided_p(-t, df));
      CHECK(p > 0.0);
      CHECK(p <= 1.0);
      // consistency with the CDF
      CHECK(p == doctest::Approx(2.0 * (1.0 - student_t_cdf(t, df))).epsilon(1e-12));
    }
  }
}

TEST_CASE("two-sided p matches density quadrature across the df grid") {
  for (double df : {1.0, 2.0, 3.0, 5.0, 10.0, 25.0, 50.0, 100.0}) {
    for (double t = 0.0; t <= 10.0; t += 0.5) {
      const double p = student_t_two_sided_p(t, df);
      const double q = oracles::t_two_sided_p_quadrature(t, df);
      CHECK(std::abs(p - q) <= 1e-6);
    }
  }
}
