#ifndef STIEHYP_GAMMAFN_HPP
#define STIEHYP_GAMMAFN_HPP

#include <complex>

namespace stiehyp {

using cdouble = std::complex<double>;

/// Principal branch of log Gamma(z), Lanczos approximation with reflection
/// for Re(z) < 0.5.  Accurate to ~1e-14 relative away from the poles.
cdouble log_gamma(cdouble z);

/// Digamma psi0(z) by recurrence into the asymptotic region.
cdouble digamma(cdouble z);

/// Trigamma psi1(z).
cdouble trigamma(cdouble z);

/// Gamma(x) for real x, via std::tgamma (poles propagate as inf/nan).
double gamma_real(double x);

} // namespace stiehyp

#endif
