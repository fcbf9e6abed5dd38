#include "stiehyp/hypeval.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "stiehyp/gammafn.hpp"

namespace stiehyp {

namespace {

constexpr int kTermCap = 100000;

// Cancel exact matches between the upper list (sigma, A) and the lower
// list B; reduces q and covers the degenerate binomial case.
void cancel_pairs(std::vector<cdouble>& upper, std::vector<cdouble>& lower) {
  for (auto iu = upper.begin(); iu != upper.end();) {
    bool cancelled = false;
    for (auto il = lower.begin(); il != lower.end(); ++il) {
      if (*iu == *il) {
        lower.erase(il);
        iu = upper.erase(iu);
        cancelled = true;
        break;
      }
    }
    if (!cancelled) ++iu;
  }
}

SeriesResult sum_series(const std::vector<cdouble>& upper,
                        const std::vector<cdouble>& lower, cdouble z,
                        double tol) {
  SeriesResult r;
  cdouble term(1.0, 0.0);
  cdouble sum(0.0, 0.0);
  int consecutive_small = 0;
  for (int n = 0; n < kTermCap; ++n) {
    sum += term;
    cdouble num(1.0, 0.0), den(double(n + 1), 0.0);
    for (cdouble u : upper) num *= u + double(n);
    for (cdouble l : lower) den *= l + double(n);
    term *= z * num / den;
    const double mag = std::abs(term);
    if (mag <= tol * std::abs(sum)) {
      if (++consecutive_small >= 2) {
        r.value = sum;
        r.terms_used = n + 1;
        r.truncation_bound = mag;
        return r;
      }
    } else {
      consecutive_small = 0;
    }
  }
  throw std::runtime_error("eval_series: no convergence within term cap");
}

} // namespace

SeriesResult eval_series(const ParameterSet& p, cdouble z, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("eval_series: tol must be > 0");
  if (!(std::abs(z) < 1.0))
    throw std::domain_error("eval_series: |z| must be < 1");
  std::vector<cdouble> upper{p.sigma};
  std::vector<cdouble> lower;
  for (Eigen::Index i = 0; i < p.q(); ++i) upper.push_back(p.a[i]);
  for (Eigen::Index i = 0; i < p.q(); ++i) lower.push_back(p.b[i]);
  cancel_pairs(upper, lower);
  if (z == cdouble(0.0, 0.0)) return SeriesResult{cdouble(1.0, 0.0), 1, 0.0};
  return sum_series(upper, lower, z, tol);
}

std::pair<cdouble, cdouble> contiguous_shift(const ParameterSet& p, int m,
                                             cdouble z, double tol) {
  if (m < 1) throw std::invalid_argument("contiguous_shift: m must be >= 1");
  const Eigen::Index q = p.q();
  const double inv_m = 1.0 / double(m);
  const cdouble bq = p.b[q - 1];

  ParameterSet lhs = p;
  lhs.b[q - 1] = bq + inv_m;

  ParameterSet rhs1 = p;
  rhs1.b[q - 1] = bq + 1.0 + inv_m;

  // Shifting b_q by 1 and re-indexing the series forces every upper
  // parameter up by one, sigma included.
  ParameterSet rhs2 = p;
  rhs2.sigma = p.sigma + 1.0;
  rhs2.a.array() += 1.0;
  rhs2.b.array() += 1.0;
  rhs2.b[q - 1] = bq + 2.0 + inv_m;

  cdouble coef = z * p.sigma;
  for (Eigen::Index i = 0; i < q; ++i) coef *= p.a[i];
  coef /= (bq + inv_m) * (bq + 1.0 + inv_m);
  for (Eigen::Index i = 0; i < q - 1; ++i) coef /= p.b[i];

  const cdouble arg = -z;
  const cdouble left = eval_series(lhs, arg, tol).value;
  const cdouble right =
      eval_series(rhs1, arg, tol).value - coef * eval_series(rhs2, arg, tol).value;
  return {left, right};
}

cdouble binomial_case(cdouble sigma, cdouble z) {
  const cdouble w = 1.0 + z;
  if (w.imag() == 0.0 && w.real() <= 0.0)
    throw std::domain_error("binomial_case: z on the cut (-inf, -1]");
  return std::exp(-sigma * std::log(w));
}

namespace {

double gauss_series(double a_, double b_, double c_, double x_) {
  double term = 1.0, sum = 0.0;
  for (int n = 0; n < kTermCap; ++n) {
    sum += term;
    term *= x_ * (a_ + n) * (b_ + n) / ((c_ + n) * (n + 1.0));
    if (std::abs(term) < 1e-16 * std::abs(sum) && n > 2) return sum;
  }
  throw std::runtime_error("gauss_2f1: series did not converge");
}

} // namespace

double gauss_2f1(double a, double b, double c, double x) {
  if (!(x >= 0.0 && x < 1.0))
    throw std::domain_error("gauss_2f1: x must be in [0, 1)");
  if (c == b || c == a) return std::pow(1.0 - x, c - a - b);
  if (x <= 0.75) return gauss_series(a, b, c, x);
  return gauss_2f1_near_one(a, b, c, 1.0 - x);
}

double gauss_2f1_near_one(double a, double b, double c, double u) {
  if (!(u > 0.0 && u <= 1.0))
    throw std::domain_error("gauss_2f1_near_one: complement must be in (0,1]");
  const double cab = c - a - b;
  if (c == b || c == a) return std::pow(u, cab);
  if (u > 0.25) return gauss_series(a, b, c, 1.0 - u);
  if (std::abs(cab - std::round(cab)) < 1e-9)
    throw std::domain_error("gauss_2f1: integer c-a-b near x=1 unsupported");
  const double g1 = std::exp(std::lgamma(c) + std::lgamma(cab) -
                             std::lgamma(c - a) - std::lgamma(c - b));
  double g2 = std::exp(std::lgamma(c) + std::lgamma(-cab) - std::lgamma(a) -
                       std::lgamma(b));
  // sign of Gamma factors: lgamma drops signs for negative arguments
  auto sign_gamma = [](double t) {
    if (t > 0) return 1.0;
    // Gamma alternates sign between consecutive negative integers
    return (std::fmod(std::floor(t), 2.0) == 0.0) ? 1.0 : -1.0;
  };
  const double sg = sign_gamma(c) * sign_gamma(cab) /
                    (sign_gamma(c - a) * sign_gamma(c - b));
  const double sg2 = sign_gamma(c) * sign_gamma(-cab) /
                     (sign_gamma(a) * sign_gamma(b));
  return sg * g1 * gauss_series(a, b, a + b - c + 1.0, u) +
         sg2 * g2 * std::pow(u, cab) *
             gauss_series(c - a, c - b, cab + 1.0, u);
}

} // namespace stiehyp
