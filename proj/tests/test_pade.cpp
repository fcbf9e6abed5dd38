#include <doctest.h>

#include <cmath>

#include "stiehyp/pade.hpp"
#include "stiehyp/stieltjes.hpp"

using namespace stiehyp;

namespace {
const ParameterSet kLog(1.0, {1.0}, {2.0}); // F(-z) = ln(1+z)/z
}

TEST_CASE("moment sequence of the log family is 1/(k+1)") {
  const MomentSequence ms = moments(kLog, 8);
  for (std::size_t k = 0; k < ms.values.size(); ++k)
    CHECK(ms.values[k] == doctest::Approx(1.0 / double(k + 1)).epsilon(1e-14));
}

TEST_CASE("[0/1] approximant is 1/(1+z/2)") {
  const PadeApproximant pa = pade(kLog, 1, -1);
  REQUIRE(pa.numerator.size() == 1);
  REQUIRE(pa.denominator.size() == 2);
  CHECK(pa.numerator[0] == doctest::Approx(1.0));
  CHECK(pa.denominator[0] == doctest::Approx(1.0));
  CHECK(pa.denominator[1] == doctest::Approx(0.5));
}

TEST_CASE("[m/0] is the Taylor polynomial") {
  const PadeApproximant pa = pade(kLog, 0, 3);
  REQUIRE(pa.denominator.size() == 1);
  for (int n = 0; n <= 3; ++n) {
    const double expect = ((n % 2 == 0) ? 1.0 : -1.0) / double(n + 1);
    CHECK(pa.numerator[n] == doctest::Approx(expect).epsilon(1e-14));
  }
}

TEST_CASE("first orthogonal denominators") {
  // The denominator of [m+j/m] is orthogonal with respect to the weight
  // s^{j+1} rho_1(s) ds; for the log family rho_1 is uniform on (0,1).
  // j = -1: integrate (s - c) ds = 0 -> c = 1/2, the [0/1] denominator.
  const MomentSequence ms = moments(kLog, 6);
  const Vec m1 = orthogonal_denominator(ms, 1, -1);
  REQUIRE(m1.size() == 2);
  CHECK(m1[0] / m1[1] == doctest::Approx(-0.5).epsilon(1e-12));
  // j = 0: integrate (s - c) s ds = 0 -> c = 2/3, the [1/1] denominator.
  const Vec m2 = orthogonal_denominator(ms, 1, 0);
  CHECK(m2[0] / m2[1] == doctest::Approx(-2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("Stieltjes lower bound at [0/1]") {
  // [0/1](x) <= F(-x) for x > -1
  const PadeApproximant pa = pade(kLog, 1, -1);
  for (double x : {-0.5, 0.0, 1.0, 4.0}) {
    const double approx = pa.eval(cdouble(x, 0.0)).real();
    const double exact = (x == 0.0) ? 1.0 : std::log1p(x) / x;
    CHECK(approx <= exact + 1e-10);
  }
}

TEST_CASE("normality of the 5x5 log table") {
  const NormalityTable t = normality_check(kLog, 4, 4);
  CHECK(t.all_normal);
}

TEST_CASE("binomial table degenerates") {
  // sigma = 1, A = B: F(-z) = 1/(1+z) is rational, so the table collapses
  const ParameterSet binom(1.0, {1.5}, {1.5});
  CHECK_FALSE(normality_check(binom, 3, 3).all_normal);
}

TEST_CASE("convergence on and off the origin") {
  const std::vector<double> at0 =
      convergence_check(kLog, cdouble(0.0, 0.0), 4, 0, {});
  for (double e : at0) CHECK(e <= 1e-12);

  // against the exact value ln 2 (the quadrature reference has its own
  // ~1e-10 noise floor, which would mask the decrease at large m)
  std::vector<double> at1;
  for (int m = 1; m <= 8; ++m)
    at1.push_back(std::abs(pade(kLog, m, 0).eval(cdouble(1.0, 0.0)).real() -
                           std::log(2.0)));
  CHECK(at1.back() <= 1e-6);
  for (std::size_t k = 1; k < at1.size(); ++k) CHECK(at1[k] < at1[k - 1]);

  // near the cut endpoint: still converging, slower
  const std::vector<double> near =
      convergence_check(kLog, cdouble(-0.9, 0.0), 8, 0, {});
  CHECK(near.back() < near.front());
  CHECK(near.back() > at1.back());
}

TEST_CASE("denominator roots map into the unit interval") {
  const PadeApproximant pa = pade(kLog, 5, 0);
  for (const cdouble& r : poly_roots(pa.ortho_poly())) {
    CHECK(std::abs(r.imag()) <= 1e-8);
    CHECK(r.real() > 0.0);
    CHECK(r.real() < 1.0);
  }
}
