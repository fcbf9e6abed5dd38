#include <doctest.h>

#include <cmath>

#include "stiehyp/analysis.hpp"

using namespace stiehyp;

TEST_CASE("disk radii constants") {
  CHECK(r_star() ==
        doctest::Approx(std::sqrt(13.0 * std::sqrt(13.0) - 46.0))
            .epsilon(1e-15));
  CHECK(r_s() ==
        doctest::Approx(std::sqrt(std::sqrt(32.0) - 5.0)).epsilon(1e-15));
  CHECK(r_star() > 0.9);
  CHECK(r_s() > 0.8);
}

TEST_CASE("shifted-parameter ratio is monotone") {
  const ParameterSet p(1.0, {1.0}, {2.0});
  const std::vector<double> grid{-0.5, 0.0, 0.5, 1.0, 2.0, 5.0};

  CHECK(ratio_monotonicity(p, 1.0, grid).pass);

  ParameterSet neg = p;
  neg.sigma = cdouble(-0.5, 0.0);
  CHECK(ratio_monotonicity(neg, 1.0, grid).pass);
}

TEST_CASE("lower bound with equality only at zero") {
  const ParameterSet p(1.0, {1.0}, {2.0});
  // x = 1: (1 + 1/2)^{-1} = 2/3 <= ln 2
  CHECK(2.0 / 3.0 <= std::log(2.0));
  const CheckResult r = lower_bound_check(p, {-0.5, 0.0, 1.0, 3.0});
  CHECK(r.pass);
}

TEST_CASE("upper bound needs all parameters above one") {
  const ParameterSet p(0.8, {1.3, 1.9}, {1.8, 2.6});
  CHECK(upper_bound_check(p, {0.5, 1.0, 4.0}).pass);
  const ParameterSet bad(0.8, {0.9}, {1.5});
  CHECK_THROWS_AS((void)upper_bound_check(bad, {1.0}), std::invalid_argument);
}

TEST_CASE("four-point log-convexity in sigma") {
  const ParameterSet p(1.0, {1.1, 2.0}, {1.6, 2.9});
  CHECK(logconvexity_check(p, -0.5, 0.3, 1.2, 0.4).pass);
  CHECK(logconvexity_check(p, 0.6, 0.3, 1.2, 0.4).pass);
}

TEST_CASE("sector maps into the lower half-plane") {
  const ParameterSet p(1.0, {1.0}, {2.0});
  MappingProbe probe;
  probe.region = MappingProbe::Region::sector;
  probe.sample_count = 400;
  probe.seed = 7;
  CHECK(sector_map_check(p, probe).pass);
}

TEST_CASE("sampled injectivity in the half-plane and disks") {
  const ParameterSet p(0.5, {1.0}, {2.0});
  MappingProbe half;
  half.region = MappingProbe::Region::half_plane;
  half.sample_count = 500;
  CHECK(univalence_check(p, half, false).pass);

  MappingProbe disk;
  disk.region = MappingProbe::Region::disk;
  disk.radius = 0.8;
  disk.sample_count = 500;
  ParameterSet p2 = p;
  p2.sigma = cdouble(2.0, 0.0);
  CHECK(univalence_check(p2, disk, false).pass);
}

TEST_CASE("starlikeness of zF inside r_star") {
  const ParameterSet p(1.0, {1.0}, {2.0});
  const CheckResult at09 = starlikeness_check(p, 0.9);
  CHECK(at09.pass);
  CHECK(at09.worst_margin > 0.0);
  // r -> 0: Re(z g'/g) -> 1
  const CheckResult tiny = starlikeness_check(p, 1e-4);
  CHECK(tiny.worst_margin == doctest::Approx(1.0).epsilon(1e-3));
}
