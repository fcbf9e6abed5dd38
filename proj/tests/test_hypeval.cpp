#include <doctest.h>

#include <cmath>

#include "stiehyp/hypeval.hpp"

using namespace stiehyp;

TEST_CASE("series closed forms") {
  // 2F1(1,1;2;-x) = ln(1+x)/x
  const ParameterSet log_case(1.0, {1.0}, {2.0});
  CHECK(eval_series(log_case, cdouble(-0.5, 0.0)).value.real() ==
        doctest::Approx(std::log(1.5) / 0.5).epsilon(1e-13));
  // binomial cancellation a == b: F = (1+z)^{-sigma}
  const ParameterSet binom(0.7, {1.3}, {1.3});
  CHECK(eval_series(binom, cdouble(-0.5, 0.0)).value.real() ==
        doctest::Approx(std::pow(1.5, -0.7)).epsilon(1e-13));
  CHECK(eval_series(binom, cdouble(-0.5, 0.0)).value.real() ==
        doctest::Approx(0.7529).epsilon(1e-4));
  // z = 0
  CHECK(eval_series(log_case, cdouble(0.0, 0.0)).value ==
        cdouble(1.0, 0.0));
}

TEST_CASE("series domain guards") {
  const ParameterSet p(1.0, {1.0}, {2.0});
  CHECK_THROWS_AS((void)eval_series(p, cdouble(1.0, 0.0)), std::domain_error);
  CHECK_THROWS_AS((void)eval_series(p, cdouble(0.8, 0.8)), std::domain_error);
}

TEST_CASE("contiguous relation closes") {
  const ParameterSet p(0.6, {0.9, 1.7}, {1.4, 2.3});
  for (int m : {1, 2, 5}) {
    const auto [lhs, rhs] = contiguous_shift(p, m, cdouble(0.45, 0.2));
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::abs(lhs));
  }
}

TEST_CASE("binomial case and its cut") {
  const cdouble v = binomial_case(cdouble(0.5, 0.0), cdouble(3.0, 0.0));
  CHECK(v.real() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK_THROWS_AS((void)binomial_case(cdouble(1.0, 0.0), cdouble(-2.0, 0.0)),
                  std::domain_error);
}

TEST_CASE("Gauss function: series and near-one connection") {
  // 2F1(1,1;2;x) = -ln(1-x)/x in the direct-series range
  for (double x : {0.3, 0.6, 0.74}) {
    CHECK(gauss_2f1(1.0, 1.0, 2.0, x) ==
          doctest::Approx(-std::log1p(-x) / x).epsilon(1e-10));
  }
  // integer c-a-b is rejected in the connection-formula range
  CHECK_THROWS_AS((void)gauss_2f1(1.0, 1.0, 2.0, 0.9), std::domain_error);
  // non-integer c-a-b: connection formula vs a slow direct sum
  {
    const double a = 0.5, b = 0.7, c = 2.1, x = 0.9;
    double term = 1.0, sum = 0.0;
    for (int n = 0; n < 4000; ++n) {
      sum += term;
      term *= x * (a + n) * (b + n) / ((c + n) * (n + 1.0));
    }
    CHECK(gauss_2f1(a, b, c, x) == doctest::Approx(sum).epsilon(1e-10));
  }
  // degenerate c == b: (1-x)^{c-a-b} = (1-x)^{-a}
  CHECK(gauss_2f1(2.0, 1.5, 1.5, 0.9) ==
        doctest::Approx(std::pow(0.1, -2.0)).epsilon(1e-12));
  // tiny complement without forming 1-x
  const double u = 1e-12;
  CHECK(gauss_2f1_near_one(0.3, 0.4, 1.5, u) ==
        doctest::Approx(std::exp(std::lgamma(1.5) + std::lgamma(0.8) -
                                 std::lgamma(1.2) - std::lgamma(1.1)))
            .epsilon(1e-9));
}
