#include <doctest.h>

#include <cmath>

#include "stiehyp/params.hpp"

using namespace stiehyp;

TEST_CASE("pochhammer basics") {
  CHECK(pochhammer(cdouble(3.0, 0.0), 0) == cdouble(1.0, 0.0));
  CHECK(pochhammer(cdouble(1.0, 0.0), 5).real() == doctest::Approx(120.0));
  CHECK(pochhammer(cdouble(0.5, 0.0), 3).real() ==
        doctest::Approx(0.5 * 1.5 * 2.5));
  // log-space path beyond n = 64 agrees with the gamma ratio
  const cdouble big = pochhammer(cdouble(2.5, 0.0), 70);
  const double expect = std::exp(std::lgamma(72.5) - std::lgamma(2.5));
  CHECK(big.real() == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("psi excess") {
  Vec a(2), b(2);
  a << 1.0, 3.0;
  b << 2.0, 2.0;
  CHECK(psi_excess(a, b) == doctest::Approx(0.0));
  b << 2.0, 3.5;
  CHECK(psi_excess(a, b) == doctest::Approx(1.5));
}

TEST_CASE("majorization verdict") {
  Vec a(2), b(2);

  SUBCASE("weak supermajorization with positive excess") {
    a << 1.0, 3.0;
    b << 2.0, 3.5;
    const MajorizationVerdict v = majorization_verdict(a, b);
    CHECK(v.weak_supermajorized);
    CHECK_FALSE(v.majorized);
    CHECK(v.chain_holds);
  }

  SUBCASE("majorization at psi = 0") {
    a << 1.0, 3.0;
    b << 2.0, 2.0;
    const MajorizationVerdict v = majorization_verdict(a, b);
    CHECK(v.weak_supermajorized);
    CHECK(v.majorized);
  }

  SUBCASE("violation: smallest b below smallest a") {
    a << 1.0, 3.0;
    b << 0.5, 4.0;
    CHECK_FALSE(majorization_verdict(a, b).weak_supermajorized);
  }

  SUBCASE("order of entries does not matter") {
    a << 3.0, 1.0;
    b << 3.5, 2.0;
    CHECK(majorization_verdict(a, b).weak_supermajorized);
  }
}

TEST_CASE("elementary symmetric polynomials") {
  Vec x(3);
  x << 1.0, 2.0, 3.0;
  CHECK(elementary_symmetric(x, 0) == doctest::Approx(1.0));
  CHECK(elementary_symmetric(x, 1) == doctest::Approx(6.0));
  CHECK(elementary_symmetric(x, 2) == doctest::Approx(11.0));
  CHECK(elementary_symmetric(x, 3) == doctest::Approx(6.0));
}

TEST_CASE("chain condition follows weak supermajorization") {
  Vec a(3), b(3);
  a << 0.8, 1.5, 2.2;
  b << 1.1, 1.9, 2.6;
  REQUIRE(majorization_verdict(a, b).weak_supermajorized);
  CHECK(chain_condition(a, b));
}
