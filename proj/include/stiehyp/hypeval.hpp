#ifndef STIEHYP_HYPEVAL_HPP
#define STIEHYP_HYPEVAL_HPP

#include <utility>

#include "stiehyp/params.hpp"

namespace stiehyp {

struct SeriesResult {
  cdouble value{0.0, 0.0};
  int terms_used = 0;
  double truncation_bound = 0.0; // modulus of the first dropped term
};

/// Power series of {q+1}F{q}(sigma, A; B; z) inside the unit disk.
/// Terms are accumulated with running-ratio updates; parameter pairs with
/// a_i == b_j (exact equality) are cancelled before summation.
/// Throws std::domain_error for |z| >= 1 and std::runtime_error when the
/// term cap (1e5) is reached before two consecutive terms fall below
/// tol * |partial sum|.
SeriesResult eval_series(const ParameterSet& p, cdouble z, double tol = 1e-14);

/// Both sides of the contiguous relation that shifts b_q by 1/m:
///   F(sigma,A;B',b_q+1/m;-z) = F(sigma,A;B',b_q+1+1/m;-z)
///     - z*sigma*prod(a) / [(b_q+1/m)(b_q+1+1/m)*prod(b')] *
///       F(sigma+1,A+1;B'+1,b_q+2+1/m;-z).
/// Returns (LHS, RHS) evaluated by eval_series at argument -z.
std::pair<cdouble, cdouble> contiguous_shift(const ParameterSet& p, int m,
                                             cdouble z, double tol = 1e-14);

/// (1+z)^{-sigma}, principal branch; throws on the cut z in (-inf, -1].
cdouble binomial_case(cdouble sigma, cdouble z);

/// Gauss 2F1(a, b; c; x) for real parameters and x in [0, 1); uses the
/// 1-x connection formula when x > 0.75 (requires c-a-b non-integer there).
double gauss_2f1(double a, double b, double c, double x);

/// 2F1(a, b; c; 1-u) given the complement u in (0, 1]; avoids the loss of
/// precision of forming 1-x when x is close to 1.
double gauss_2f1_near_one(double a, double b, double c, double u);

} // namespace stiehyp

#endif
