#ifndef STIEHYP_ANALYSIS_HPP
#define STIEHYP_ANALYSIS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "stiehyp/meijer.hpp"
#include "stiehyp/params.hpp"

namespace stiehyp {

/// Outcome of one inequality / mapping check.  worst_margin is the smallest
/// slack observed (negative means a violation); worst_location the argument
/// where it occurred.
struct CheckResult {
  bool pass = false;
  double worst_margin = 0.0;
  cdouble worst_location{0.0, 0.0};
  std::size_t samples = 0;
  std::string note;
};

struct InequalityGrid {
  std::vector<double> x_values;
  std::vector<double> sigma_values;
  double delta = 1.0;
  std::size_t samples = 0;
};

struct MappingProbe {
  enum class Region { sector, half_plane, disk };
  Region region = Region::half_plane;
  double radius = 0.8;
  std::size_t sample_count = 2000;
  std::uint64_t seed = 1;
};

/// Disk radii of the starlikeness / univalence statements:
/// r_star = sqrt(13 sqrt(13) - 46), r_s = sqrt(sqrt(32) - 5).
double r_star();
double r_s();

/// x -> F(sigma, A+delta; B+delta; -x) / F(sigma, A; B; -x) on an increasing
/// grid in (-1, x_max]; decreasing for sigma > 0, increasing for sigma < 0,
/// slack 1e-9 relative to the local ratio magnitude.
CheckResult ratio_monotonicity(const ParameterSet& p, double delta,
                               const std::vector<double>& x_grid,
                               const QuadratureConfig& cfg = {});

/// (1 + x prod(a_i/b_i))^{-sigma} <= F(sigma,A;B;-x), strict off x = 0.
CheckResult lower_bound_check(const ParameterSet& p,
                              const std::vector<double>& x_grid,
                              const QuadratureConfig& cfg = {});

/// F(sigma,A;B;-x) < (1 + x prod((a_i-1)/(b_i-1)))^{-sigma} for x > 0;
/// requires every entry of A and B > 1 and 0 < sigma <= 1.
CheckResult upper_bound_check(const ParameterSet& p,
                              const std::vector<double>& x_grid,
                              const QuadratureConfig& cfg = {});

/// Four-point log-convexity inequality for f(s) = F(s,A;B;x), x < 1:
/// f(s1+delta) f(s2) <= f(s1) f(s2+delta), 0 <= s1 < s2, delta > 0.
CheckResult logconvexity_check(const ParameterSet& p, double x, double sigma1,
                               double sigma2, double delta,
                               const QuadratureConfig& cfg = {});

struct NegativeControlResult {
  std::size_t trials = 0;
  std::size_t families_found = 0; // chain-satisfying, not supermajorized
  std::size_t violations = 0;
  double worst_violation = 0.0;
  Vec example_a, example_b;
  double example_x = 0.0;
};

/// Search mode: random families satisfying the symmetric-function chain but
/// violating weak supermajorization, probed for four-point failures at
/// x < 0.  Findings only; nothing is asserted.
NegativeControlResult logconvexity_negative_search(std::uint64_t seed,
                                                   std::size_t trials,
                                                   const QuadratureConfig& cfg = {});

/// Im F(sigma,A;B;-z) < -1e-12 for z sampled strictly inside the sector
/// 0 < arg z < pi/sigma, radii 1e-2..1e2; requires sigma >= 1.
CheckResult sector_map_check(const ParameterSet& p, const MappingProbe& probe,
                             const QuadratureConfig& cfg = {});

/// Sampled injectivity of F (use_zf = false) or z F (use_zf = true) on the
/// probe region, plus a nonvanishing numerical derivative on a subgrid.
/// Necessary-condition battery only.
CheckResult univalence_check(const ParameterSet& p, const MappingProbe& probe,
                             bool use_zf, const QuadratureConfig& cfg = {});

/// min over |z| = r of Re(z g'(z)/g(z)), g(z) = z F(sigma,A;B;z), by
/// term-differentiated series on a 360-point circle; requires r < 1.
CheckResult starlikeness_check(const ParameterSet& p, double r,
                               std::size_t circle_points = 360);

} // namespace stiehyp

#endif
