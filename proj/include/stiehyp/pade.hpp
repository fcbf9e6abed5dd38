#ifndef STIEHYP_PADE_HPP
#define STIEHYP_PADE_HPP

#include <vector>

#include "stiehyp/meijer.hpp"
#include "stiehyp/params.hpp"

namespace stiehyp {

/// Moments m_k = (sigma)_k prod(a_i)_k / (prod(b_i)_k k!) of the order-1
/// density rho_1; Taylor coefficients of F(-z) in powers of (-z).
struct MomentSequence {
  std::vector<double> values;
  ParameterSet source;
};
MomentSequence moments(const ParameterSet& p, int K);

struct PadeApproximant {
  int m = 0;
  int j = 0;
  Vec numerator;   // P, degree m+j
  Vec denominator; // Q, degree m, Q(0) = 1
  double hankel_det = 0.0;

  cdouble eval(cdouble z) const;
  /// Monic orthogonal polynomial pi_m^j(s) = s^m Q(-1/s).
  Vec ortho_poly() const;
};

/// [m+j/m] Pade approximant of F(sigma,A;B;-z) at z = 0 from the moment
/// sequence; requires 0 < sigma <= 1 real, B prec^W A, j >= -1.
/// Throws std::runtime_error on a (numerically) singular Hankel system.
PadeApproximant pade(const ParameterSet& p, int m, int j);

/// Generic [L/M] entry from raw series coefficients c_k of F(-z);
/// used by the normality scan.  No hypothesis checks.
PadeApproximant pade_from_coeffs(const std::vector<long double>& c, int L,
                                 int M);

/// Monic denominator orthogonal polynomial pi_m^j, coefficient vector of
/// degree m (index k = coefficient of s^k).
Vec orthogonal_denominator(const MomentSequence& ms, int m, int j);

struct NormalityTable {
  int m_max = 0, n_max = 0;
  std::vector<bool> normal;    // row-major [m][n]
  bool all_normal = false;
  bool entry(int m, int n) const { return normal[std::size_t(m) * std::size_t(n_max + 1) + std::size_t(n)]; }
};

/// Hankel determinant + pairwise-distinctness scan of the [m/n] table,
/// m <= m_max, n <= n_max.  Failures are findings, not errors.
NormalityTable normality_check(const ParameterSet& p, int m_max, int n_max);

/// Roots of the polynomial with coefficient vector coeffs (index k is the
/// coefficient of s^k), via the companion matrix of its monic normalization.
std::vector<cdouble> poly_roots(const Vec& coeffs);

/// |[m+j/m](z) - reference| for m = 1..m_max, reference by the Stieltjes
/// integral representation.
std::vector<double> convergence_check(const ParameterSet& p, cdouble z,
                                      int m_max, int j,
                                      const QuadratureConfig& cfg = {});

} // namespace stiehyp

#endif
