#include "stiehyp/gammafn.hpp"

#include <cmath>

namespace stiehyp {

namespace {

// Lanczos coefficients, g = 607/128, N = 15 (Godfrey's set).
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5};

constexpr double kHalfLog2Pi = 0.91893853320467274178; // log(2*pi)/2

cdouble log_gamma_core(cdouble z) {
  // Requires Re(z) >= 0.5.
  cdouble sum(kLanczos[0], 0.0);
  for (int k = 1; k < 15; ++k) sum += kLanczos[k] / (z - 1.0 + double(k));
  const cdouble t = z + (kLanczosG - 0.5);
  return kHalfLog2Pi + (z - 0.5) * std::log(t) - t + std::log(sum);
}

// Bernoulli numbers B_{2n} for the polygamma asymptotic series.
constexpr double kB2n[7] = {1.0 / 6,   -1.0 / 30, 1.0 / 42,      -1.0 / 30,
                            5.0 / 66, -691.0 / 2730, 7.0 / 6};

} // namespace

cdouble log_gamma(cdouble z) {
  if (z.real() >= 0.5) return log_gamma_core(z);
  // Reflection: log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z).
  // Keep the branch continuous off the real axis by using log of the
  // exponentially dominant part of sin(pi z).
  const double pi = 3.14159265358979323846;
  const cdouble lg1mz = log_gamma_core(1.0 - z);
  const cdouble piz = pi * z;
  // log sin(pi z) computed stably for large |Im z|
  cdouble logsin;
  if (std::abs(piz.imag()) < 20.0) {
    logsin = std::log(std::sin(piz));
  } else {
    // sin(w) = e^{-iw} (i/2) (1 - e^{2iw}) with |e^{2iw}| < 1 for Im w > 0,
    // and the conjugate factorization below the axis.
    const cdouble i(0.0, 1.0);
    if (piz.imag() > 0)
      logsin = -i * piz + std::log(cdouble(0.0, 0.5)) +
               std::log(1.0 - std::exp(2.0 * i * piz));
    else
      logsin = i * piz + std::log(cdouble(0.0, -0.5)) +
               std::log(1.0 - std::exp(-2.0 * i * piz));
  }
  return std::log(cdouble(pi)) - logsin - lg1mz;
}

cdouble digamma(cdouble z) {
  cdouble shift(0.0, 0.0);
  while (z.real() < 10.0) {
    shift -= 1.0 / z;
    z += 1.0;
  }
  const cdouble inv = 1.0 / z;
  const cdouble inv2 = inv * inv;
  cdouble series(0.0, 0.0);
  cdouble p = inv2;
  for (int n = 0; n < 7; ++n) {
    series += kB2n[n] / (2.0 * (n + 1)) * p;
    p *= inv2;
  }
  return shift + std::log(z) - 0.5 * inv - series;
}

cdouble trigamma(cdouble z) {
  cdouble shift(0.0, 0.0);
  while (z.real() < 10.0) {
    shift += 1.0 / (z * z);
    z += 1.0;
  }
  const cdouble inv = 1.0 / z;
  const cdouble inv2 = inv * inv;
  cdouble series(0.0, 0.0);
  cdouble p = inv * inv2;
  for (int n = 0; n < 7; ++n) {
    series += kB2n[n] * p;
    p *= inv2;
  }
  return shift + inv + 0.5 * inv2 + series;
}

double gamma_real(double x) { return std::tgamma(x); }

} // namespace stiehyp
