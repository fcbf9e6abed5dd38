#include "stiehyp/stieltjes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "stiehyp/gammafn.hpp"
#include "stiehyp/hypeval.hpp"

namespace stiehyp {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_off_cut(cdouble z) {
  if (z.imag() == 0.0 && z.real() <= -1.0)
    throw std::domain_error("argument on the cut (-inf, -1]");
}

double gamma_prefactor(const ParameterSet& p) {
  double lg = 0.0;
  for (Eigen::Index i = 0; i < p.q(); ++i)
    lg += std::lgamma(p.b[i].real()) - std::lgamma(p.a[i].real());
  return std::exp(lg);
}

cdouble cpow(cdouble base, cdouble expo) {
  return std::exp(expo * std::log(base));
}

} // namespace

StieltjesEvaluator::StieltjesEvaluator(ParameterSet p, QuadratureConfig cfg)
    : p_(std::move(p)), cfg_(cfg) {
  for (Eigen::Index i = 0; i < p_.q(); ++i)
    if (p_.a[i].imag() != 0.0 || p_.b[i].imag() != 0.0)
      throw std::invalid_argument("StieltjesEvaluator: A, B must be real");
  for (Eigen::Index i = 0; i < p_.q(); ++i)
    if (!(p_.a[i].real() > 0.0))
      throw std::domain_error(
          "StieltjesEvaluator: representation requires Re(a_i) > 0");
  const double psi = psi_excess(p_.a, p_.b).real();
  if (!(psi > 0.0))
    throw std::domain_error(
        "StieltjesEvaluator: representation requires Re(psi) > 0");
  GKernelSpec spec = kernel_from_params(p_);
  table_ = KernelTable::build(spec, cfg_);
  pref_ = gamma_prefactor(p_);
}

cdouble StieltjesEvaluator::operator()(cdouble z) const {
  return with_sigma(p_.sigma, z);
}

cdouble StieltjesEvaluator::with_sigma(cdouble sigma, cdouble z) const {
  require_off_cut(z);
  if (z == cdouble(0.0, 0.0)) return cdouble(1.0, 0.0);
  cdouble acc(0.0, 0.0);
  for (std::size_t i = 0; i < table_.grid.size(); ++i) {
    const double s = table_.grid.s[i];
    const double gv = table_.values[Eigen::Index(i)];
    if (gv == 0.0) continue;
    acc += table_.grid.w[i] * (gv / s) * cpow(1.0 + s * z, -sigma);
  }
  return pref_ * acc;
}

double StieltjesEvaluator::rho(double s) const {
  return pref_ * meijer_g(s, table_.spec, cfg_) / s;
}

cdouble eval_stieltjes(const ParameterSet& p, cdouble z,
                       const QuadratureConfig& cfg) {
  return StieltjesEvaluator(p, cfg)(z);
}

double density_rho1(double s, const ParameterSet& p,
                    const QuadratureConfig& cfg) {
  const double sigma = p.sigma.real();
  const double psi = psi_excess(p.a, p.b).real();
  if (!(psi + 1.0 > sigma))
    throw std::domain_error("density_rho1: requires Re(psi) + 1 > Re(sigma)");
  if (!(sigma > 0.0))
    throw std::domain_error("density_rho1: requires Re(sigma) > 0");
  const GKernelSpec aug = augmented_kernel(p).cancelled();
  const double pref = gamma_prefactor(p) / std::tgamma(sigma);
  if (aug.order() == 0) {
    throw std::domain_error("density_rho1: degenerate (atomic) parameter set");
  }
  return pref * meijer_g(s, aug, cfg) / s;
}

DensitySpec rho1_spec(const ParameterSet& p) {
  DensitySpec d;
  d.support = DensitySpec::Support::unit_interval;
  d.kernel = augmented_kernel(p).cancelled();
  d.prefactor = gamma_prefactor(p) / std::tgamma(p.sigma.real());
  d.zero_exponent = d.kernel.zero_exponent();
  d.one_exponent = d.kernel.one_exponent();
  return d;
}

double phi_epsilon(double y, double epsilon, const ParameterSet& p,
                   const QuadratureConfig& cfg) {
  if (!(y > 1.0)) throw std::domain_error("phi_epsilon: y must exceed 1");
  if (!(epsilon >= 0.0 && epsilon < 1.0))
    throw std::domain_error("phi_epsilon: epsilon must lie in [0, 1)");
  const double sigma = p.sigma.real();
  const Eigen::Index q = p.q();
  Vec top(q + 1), bottom(q + 1);
  top[0] = 1.0 - epsilon + sigma;
  bottom[0] = sigma;
  top.tail(q) = p.b_real();
  bottom.tail(q) = p.a_real();
  const GKernelSpec spec(std::move(top), std::move(bottom));
  return std::tgamma(1.0 - epsilon) * std::pow(y, sigma - epsilon) *
         meijer_g(1.0 / y, spec, cfg);
}

OrderTestResult exact_order_test(const ParameterSet& p, double epsilon,
                                 double y_max, const QuadratureConfig& cfg,
                                 double rel_window) {
  const double sigma = p.sigma.real();
  const auto verdict = majorization_verdict(p.a_real(), p.b_real());
  if (!verdict.weak_supermajorized)
    throw std::domain_error("exact_order_test: requires B prec^W A");
  if (!(sigma > 0.0 && sigma <= p.a_real().minCoeff() + 1e-12))
    throw std::domain_error(
        "exact_order_test: requires 0 < sigma <= min(A)");

  OrderTestResult r;
  r.epsilon = epsilon;
  r.target = std::pow(2.0, -epsilon);
  r.advisory = verdict.psi == cdouble(0.0, 0.0) && p.q() >= 3;

  double y = y_max;
  while (y >= 8.0) {
    const double num = phi_epsilon(2.0 * y, epsilon, p, cfg);
    const double den = phi_epsilon(y, epsilon, p, cfg);
    r.y_grid.push_back(y);
    r.ratios.push_back(num / den);
    y /= 2.0;
    if (r.y_grid.size() >= 12) break;
  }
  std::reverse(r.y_grid.begin(), r.y_grid.end());
  std::reverse(r.ratios.begin(), r.ratios.end());

  // Aitken extrapolation of the tail of the ratio sequence when it is
  // behaving; otherwise the ratio at the largest y.
  const std::size_t n = r.ratios.size();
  r.limit_estimate = r.ratios.back();
  if (n >= 3) {
    const double r0 = r.ratios[n - 3], r1 = r.ratios[n - 2],
                 r2 = r.ratios[n - 1];
    const double den2 = (r2 - r1) - (r1 - r0);
    if (std::abs(den2) > 1e-14) {
      const double ait = r2 - (r2 - r1) * (r2 - r1) / den2;
      if (std::isfinite(ait) && std::abs(ait - r2) < 0.2) r.limit_estimate = ait;
    }
  }
  r.passes = std::abs(r.limit_estimate - r.target) <= rel_window * r.target;
  return r;
}

LimitMeasureQ2::LimitMeasureQ2(double sigma, double a1, double a2, double b1,
                               double b2)
    : sigma_(sigma) {
  if (a1 > a2) std::swap(a1, a2);
  if (b1 > b2) std::swap(b1, b2);
  a1_ = a1;
  a2_ = a2;
  b1_ = b1;
  b2_ = b2;
  if (std::abs((b1 + b2) - (a1 + a2)) > 1e-12)
    throw std::domain_error("LimitMeasureQ2: requires psi == 0");
  Vec av(2), bv(2);
  av << a1, a2;
  bv << b1, b2;
  if (!majorization_verdict(av, bv).weak_supermajorized)
    throw std::domain_error("LimitMeasureQ2: requires B prec^W A");
  pref_ = std::exp(std::lgamma(b1) + std::lgamma(b2) - std::lgamma(a1) -
                   std::lgamma(a2));
  coef_ = (b2 - a1) * (b1 - a1);
  grid_ = tanh_sinh_unit(90);
}

double LimitMeasureQ2::continuous_density(double t) const {
  if (coef_ == 0.0) return 0.0;
  // The Gauss factor lives at 1 - t; pass t as the complement so the
  // argument stays accurate for t near 0.
  const double f =
      gauss_2f1_near_one(b1_ - a1_ + 1.0, b2_ - a1_ + 1.0, 2.0, t);
  return pref_ * coef_ * std::pow(t, a2_ - 1.0) * f;
}

cdouble LimitMeasureQ2::value(cdouble z) const {
  require_off_cut(z);
  cdouble acc = pref_ * cpow(1.0 + z, -cdouble(sigma_));
  if (coef_ != 0.0) {
    for (std::size_t i = 0; i < grid_.size(); ++i) {
      const double t = grid_.s[i];
      acc += grid_.w[i] * continuous_density(t) *
             cpow(1.0 + t * z, -cdouble(sigma_));
    }
  }
  return acc;
}

DensitySpec LimitMeasureQ2::spec() const {
  DensitySpec d;
  d.support = DensitySpec::Support::unit_interval;
  Vec top(2), bottom(2);
  top << b1_, b2_;
  bottom << a1_, a2_;
  d.kernel = GKernelSpec(std::move(top), std::move(bottom));
  d.prefactor = pref_;
  d.atom = DensitySpec::Atom{1.0, pref_};
  d.zero_exponent = a2_ - 1.0;
  d.one_exponent = 0.0;
  return d;
}

CoefficientResolution resolve_limit_coefficient(double sigma, double a1,
                                                double a2, double b1,
                                                double b2) {
  if (a1 > a2) std::swap(a1, a2);
  if (b1 > b2) std::swap(b1, b2);
  CoefficientResolution res;
  res.chosen = (b2 - a1) * (b1 - a1);
  res.alternative = (b2 - a2) * (b1 - a1);

  CVec av(2), bv(2);
  av << cdouble(a1), cdouble(a2);
  bv << cdouble(b1), cdouble(b2);
  const ParameterSet p(cdouble(sigma), av, bv);
  const UnitGrid grid = tanh_sinh_unit(90);
  const double pref = std::exp(std::lgamma(b1) + std::lgamma(b2) -
                               std::lgamma(a1) - std::lgamma(a2));
  auto residual = [&](double coef) {
    double worst = 0.0;
    for (double z : {0.3, 0.55, 0.8}) {
      double v = pref * std::pow(1.0 + z, -sigma);
      if (coef != 0.0)
        v += integrate_unit(grid, [&](double t, double) {
          return pref * coef * std::pow(t, a2 - 1.0) *
                 gauss_2f1_near_one(b1 - a1 + 1.0, b2 - a1 + 1.0, 2.0, t) *
                 std::pow(1.0 + t * z, -sigma);
        });
      const double ref = eval_series(p, cdouble(-z)).value.real();
      worst = std::max(worst, std::abs(v - ref) / std::abs(ref));
    }
    return worst;
  };
  res.residual_chosen = residual(res.chosen);
  res.residual_alternative = residual(res.alternative);
  return res;
}

PowerDenominatorRep::PowerDenominatorRep(ParameterSet p, QuadratureConfig cfg)
    : p_(std::move(p)), cfg_(cfg) {
  sigma_ = p_.sigma.real();
  if (!(sigma_ >= 2.0))
    throw std::domain_error("power_denominator_rep: requires sigma >= 2");
  const auto verdict = majorization_verdict(p_.a_real(), p_.b_real());
  if (!verdict.weak_supermajorized || !(verdict.psi.real() > 0.0))
    throw std::domain_error(
        "power_denominator_rep: requires B prec^W A with psi > 0");
  table_ = KernelTable::build(kernel_from_params(p_), cfg_);
  pref_ = gamma_prefactor(p_);
  outer_ = tanh_sinh_unit(90);
}

double PowerDenominatorRep::phi(double y) const {
  const double s0 = std::sin(kPi / sigma_);
  const double c0 = std::cos(kPi / sigma_);
  double inner;
  if (sigma_ == 2.0) {
    inner = table_.integrate([&](double t, double) {
      const double d = 1.0 + t * t * y * y;
      return y / (d * d); // sin(2 atan(ty))/(t (1+t^2y^2)) = 2y/(1+t^2y^2)^2
    }) * 2.0;
  } else {
    inner = table_.integrate([&](double t, double) {
      const double ty = t * y;
      const double theta = std::atan2(ty * s0, 1.0 + ty * c0);
      const double d = 1.0 + 2.0 * ty * c0 + ty * ty;
      double ratio;
      if (t > 1e-8) {
        ratio = std::sin(sigma_ * theta) / t;
      } else {
        ratio = sigma_ * y * s0; // sin(sigma*theta)/t -> sigma*y*sin(pi/sigma)
      }
      return ratio / std::pow(d, 0.5 * sigma_);
    });
  }
  return sigma_ * std::pow(y, sigma_ - 1.0) / kPi * pref_ * inner;
}

cdouble PowerDenominatorRep::operator()(cdouble z) const {
  if (z == cdouble(0.0, 0.0)) return cdouble(1.0, 0.0);
  if (!(std::abs(std::arg(z)) < kPi / sigma_))
    throw std::domain_error("power_denominator_rep: requires |arg z| < pi/sigma");
  const cdouble zs = cpow(z, cdouble(sigma_));
  cdouble acc(0.0, 0.0);
  for (std::size_t i = 0; i < outer_.size(); ++i) {
    const double y = outer_.s[i];
    const double w = outer_.w[i];
    acc += w * phi(y) / (std::pow(y, sigma_) + zs);
    const double yi = 1.0 / y;
    acc += w * phi(yi) / (std::pow(yi, sigma_) + zs) * (yi * yi);
  }
  return acc;
}

cdouble power_denominator_rep(const ParameterSet& p, cdouble z,
                              const QuadratureConfig& cfg) {
  return PowerDenominatorRep(p, cfg)(z);
}

cdouble gauss_power_rep(double b, double c, cdouble z,
                        const QuadratureConfig& cfg) {
  if (!(c > b && b > 0.0))
    throw std::domain_error("gauss_power_rep: requires c > b > 0");
  CVec av(2), bv(2);
  av << cdouble(0.5 * (b + 1.0)), cdouble(0.5 * (b + 2.0));
  bv << cdouble(0.5 * (c + 1.0)), cdouble(0.5 * (c + 2.0));
  const ParameterSet inner(cdouble(2.0), av, bv);
  const StieltjesEvaluator f3(inner, cfg);
  const cdouble z2 = z * z;
  const UnitGrid grid = tanh_sinh_unit(80);
  cdouble acc(0.0, 0.0);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double y = grid.s[i];
    const double w = grid.w[i];
    acc += w * y * y * f3(cdouble(y * y, 0.0)).real() / (y * y + z2);
    const double yi = 1.0 / y;
    acc += w * yi * yi * f3(cdouble(yi * yi, 0.0)).real() / (yi * yi + z2) *
           (yi * yi);
  }
  return 4.0 * b / (kPi * c) * acc;
}

} // namespace stiehyp
