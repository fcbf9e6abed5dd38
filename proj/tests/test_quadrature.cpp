#include <doctest.h>

#include <cmath>

#include "stiehyp/quadrature.hpp"

using namespace stiehyp;

TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
  const GaussRule& rule = gauss_legendre(20);
  REQUIRE(rule.x.size() == 20);
  // degree 2n-1 = 39 is integrated exactly; use x^38 on [-1,1]
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.x.size(); ++i)
    acc += rule.w[i] * std::pow(rule.x[i], 38);
  CHECK(acc == doctest::Approx(2.0 / 39.0).epsilon(1e-14));
  double total = 0.0;
  for (double w : rule.w) total += w;
  CHECK(total == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("tanh-sinh handles endpoint singularities") {
  const UnitGrid g = tanh_sinh_unit(60);
  CHECK(integrate_unit(g, [](double, double) { return 1.0; }) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(integrate_unit(g, [](double s, double) {
          return 1.0 / std::sqrt(s);
        }) == doctest::Approx(2.0).epsilon(1e-12));
  // Beta(1/2, 1/2) = pi, singular at both ends; 1-s taken from the grid
  CHECK(integrate_unit(g, [](double s, double oms) {
          return 1.0 / std::sqrt(s * oms);
        }) == doctest::Approx(std::acos(-1.0)).epsilon(1e-12));
}

TEST_CASE("grid stores exact complements") {
  // At extreme nodes the value nearer its endpoint stays positive while
  // the opposite one may round to exactly 1.0; both stay in (0, 1].
  const UnitGrid g = tanh_sinh_unit(40);
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(g.s[i] > 0.0);
    CHECK(g.s[i] <= 1.0);
    CHECK(g.one_minus_s[i] > 0.0);
    CHECK(g.one_minus_s[i] <= 1.0);
  }
}
