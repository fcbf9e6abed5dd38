#ifndef STIEHYP_STIELTJES_HPP
#define STIEHYP_STIELTJES_HPP

#include <optional>
#include <vector>

#include "stiehyp/meijer.hpp"
#include "stiehyp/params.hpp"

namespace stiehyp {

/// A representing density on (0,1) (rho form) or (1,inf) (mu form) with an
/// optional atom, plus endpoint metadata taken from the kernel.
struct DensitySpec {
  enum class Support { unit_interval, tail };
  struct Atom {
    double location = 1.0;
    double weight = 0.0;
  };
  Support support = Support::unit_interval;
  GKernelSpec kernel;
  double prefactor = 1.0;
  std::optional<Atom> atom;
  double zero_exponent = 0.0;
  double one_exponent = 0.0;
};

/// Evaluates F(sigma, A; B; -z) through the rho-form Stieltjes integral
/// int_0^1 rho(s) (1+sz)^{-sigma} ds, with G cached on a tanh-sinh grid so
/// repeated z evaluations are cheap.  Requires real A, B with Re(a_i) > 0
/// and psi > 0.
class StieltjesEvaluator {
 public:
  StieltjesEvaluator(ParameterSet p, QuadratureConfig cfg = {});

  /// F(sigma, A; B; -z); z off the cut (-inf, -1].
  cdouble operator()(cdouble z) const;
  /// Same integral with an alternative exponent; the density does not
  /// depend on sigma, so the cached table is reused.
  cdouble with_sigma(cdouble sigma, cdouble z) const;
  double operator()(double x) const { return (*this)(cdouble(x, 0.0)).real(); }

  const ParameterSet& params() const { return p_; }
  const KernelTable& table() const { return table_; }
  double prefactor() const { return pref_; }
  /// rho(s) = prefactor * G(s)/s at an arbitrary point (fresh contour eval).
  double rho(double s) const;

 private:
  ParameterSet p_;
  QuadratureConfig cfg_;
  KernelTable table_;
  double pref_;
};

/// One-shot convenience wrapper around StieltjesEvaluator.
cdouble eval_stieltjes(const ParameterSet& p, cdouble z,
                       const QuadratureConfig& cfg = {});

/// Order-1 density rho_1(s) of the S_1 representation, via the augmented
/// kernel with top (1, B), bottom (sigma, A).
double density_rho1(double s, const ParameterSet& p,
                    const QuadratureConfig& cfg = {});
DensitySpec rho1_spec(const ParameterSet& p);

/// Phi_eps(y) = Gamma(1-eps) y^{sigma-eps} G^{q+1,0}(1/y | 1-eps+sigma, B;
/// sigma, A); y > 1, eps in (0,1).  (Prefactor-free form; the doubling
/// ratio is prefactor independent.)
double phi_epsilon(double y, double epsilon, const ParameterSet& p,
                   const QuadratureConfig& cfg = {});

struct OrderTestResult {
  double epsilon = 0.0;
  std::vector<double> y_grid;
  std::vector<double> ratios; // Phi(2y)/Phi(y)
  double limit_estimate = 0.0;
  double target = 0.0; // 2^{-eps}
  bool passes = false;
  bool advisory = false; // psi == 0 with q >= 3
};

/// Doubling-ratio exactness test on y = y_max / 2^k; passes when the
/// extrapolated limit sits within rel_window of 2^{-eps}.
OrderTestResult exact_order_test(const ParameterSet& p, double epsilon,
                                 double y_max, const QuadratureConfig& cfg = {},
                                 double rel_window = 0.05);

/// q = 2, psi = 0 limit measure: atom at 1 plus the continuous part with
/// coefficient (b1-a1)(b2-a1) (entries sorted ascending internally).
class LimitMeasureQ2 {
 public:
  LimitMeasureQ2(double sigma, double a1, double a2, double b1, double b2);

  double atom_weight() const { return pref_; }
  double coefficient() const { return coef_; }
  /// continuous density (including the overall prefactor) at t in (0,1)
  double continuous_density(double t) const;
  /// int dF / (1+tz)^sigma
  cdouble value(cdouble z) const;
  DensitySpec spec() const;

 private:
  double sigma_, a1_, a2_, b1_, b2_;
  double pref_, coef_;
  UnitGrid grid_;
};

/// Residuals of the two coefficient candidates (b2-a1)(b1-a1) vs
/// (b2-a2)(b1-a1) against the series oracle; used to pin the correct
/// coefficient before trusting the measure.
struct CoefficientResolution {
  double chosen = 0.0;
  double alternative = 0.0;
  double residual_chosen = 0.0;
  double residual_alternative = 0.0;
};
CoefficientResolution resolve_limit_coefficient(double sigma, double a1,
                                                double a2, double b1,
                                                double b2);

/// Representation with power denominator y^sigma + z^sigma,
/// sigma >= 2; phi built from the cached G table.
class PowerDenominatorRep {
 public:
  PowerDenominatorRep(ParameterSet p, QuadratureConfig cfg = {});

  double phi(double y) const;
  cdouble operator()(cdouble z) const;

 private:
  ParameterSet p_;
  QuadratureConfig cfg_;
  KernelTable table_;
  double pref_;
  double sigma_;
  UnitGrid outer_;
};

cdouble power_denominator_rep(const ParameterSet& p, cdouble z,
                              const QuadratureConfig& cfg = {});

/// Gauss fast path: 2F1(2, b; c; -z) = (4b/(pi c)) *
/// int_0^inf y^2 3F2(2,(b+1)/2,(b+2)/2;(c+1)/2,(c+2)/2;-y^2)/(y^2+z^2) dy.
cdouble gauss_power_rep(double b, double c, cdouble z,
                        const QuadratureConfig& cfg = {});

} // namespace stiehyp

#endif
