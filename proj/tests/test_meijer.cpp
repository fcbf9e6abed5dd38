#include <doctest.h>

#include <cmath>

#include "stiehyp/meijer.hpp"

using namespace stiehyp;

namespace {
const QuadratureConfig kCfg{};
}

TEST_CASE("kernel spec exponents") {
  Vec top(2), bottom(2);
  top << 1.9, 2.6;
  bottom << 0.7, 1.4;
  const GKernelSpec spec(top, bottom);
  CHECK(spec.psi() == doctest::Approx(2.4));
  CHECK(spec.one_exponent() == doctest::Approx(1.4));
  CHECK(spec.zero_exponent() == doctest::Approx(0.7));
}

TEST_CASE("q = 1 closed form vs contour") {
  const double a = 0.8, b = 2.3;
  const GKernelSpec spec(Vec::Constant(1, b), Vec::Constant(1, a));
  for (double s : {0.05, 0.2, 0.5, 0.8, 0.95}) {
    const double exact = closed_form_q1(s, a, b);
    CHECK(meijer_g(s, spec, kCfg) == doctest::Approx(exact).epsilon(1e-6));
  }
}

TEST_CASE("q = 2 closed form vs contour") {
  Vec top(2), bottom(2);
  top << 1.9, 2.6;
  bottom << 0.7, 1.4;
  const GKernelSpec spec(top, bottom);
  for (double s : {0.05, 0.3, 0.6, 0.95}) {
    const double exact = closed_form_q2(s, 0.7, 1.4, 1.9, 2.6);
    CHECK(meijer_g(s, spec, kCfg) == doctest::Approx(exact).epsilon(1e-6));
  }
}

TEST_CASE("q = 3 contour vs Monte Carlo oracle") {
  Vec a(3), b(3);
  a << 0.9, 1.4, 2.1;
  b << 1.5, 1.9, 2.8;
  const McEstimate mc = multidim_oracle(0.4, a, b, 120000);
  const double g = meijer_g(0.4, GKernelSpec(b, a), kCfg);
  CHECK(std::abs(g - mc.mean) <= 3.0 * mc.std_error);
}

TEST_CASE("Mellin moments reproduce the gamma ratio") {
  Vec top(2), bottom(2);
  top << 2.1, 2.9;
  bottom << 0.9, 1.6;
  const KernelTable table = KernelTable::build(GKernelSpec(top, bottom), kCfg);
  for (int k = 1; k <= 12; ++k)
    CHECK(mellin_moment(table, double(k)).rel_err() <= 1e-7);
}

TEST_CASE("kernel vanishes beyond one") {
  Vec top(2), bottom(2);
  top << 1.9, 2.6;
  bottom << 0.7, 1.4;
  const GKernelSpec spec(top, bottom);
  for (double x : {1.1, 1.5, 2.0, 10.0})
    CHECK(vanish_check(x, spec, kCfg) <= 1e-6);
}

TEST_CASE("Laplace-type gamma-ratio identity") {
  Vec a(2), b(2);
  a << 0.9, 1.6;
  b << 1.5, 2.4;
  for (double x : {0.5, 1.0, 2.0, 5.0})
    CHECK(laplace_identity_check(x, a, b, kCfg) <= 1e-5);
}

TEST_CASE("exact top/bottom matches cancel") {
  Vec top(2), bottom(2);
  top << 2.3, 1.1;
  bottom << 1.1, 0.8;
  const GKernelSpec reduced = GKernelSpec(top, bottom).cancelled();
  CHECK(reduced.order() == 1);
  CHECK(reduced.top[0] == doctest::Approx(2.3));
  CHECK(reduced.bottom[0] == doctest::Approx(0.8));
}
