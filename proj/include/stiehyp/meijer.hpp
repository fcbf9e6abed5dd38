#ifndef STIEHYP_MEIJER_HPP
#define STIEHYP_MEIJER_HPP

#include <cstdint>

#include "stiehyp/params.hpp"
#include "stiehyp/quadrature.hpp"

namespace stiehyp {

/// Kernel G^{q,0}_{q,q}(x | top; bottom): bottom entries sit in the gamma
/// numerators of the Mellin-Barnes integrand, top entries in the
/// denominators.  For the density of F(sigma,A;B;-z), top = B, bottom = A.
struct GKernelSpec {
  Vec top;
  Vec bottom;

  GKernelSpec() = default;
  GKernelSpec(Vec top_, Vec bottom_);

  Eigen::Index order() const { return top.size(); }
  double psi() const { return top.sum() - bottom.sum(); }
  /// Endpoint exponent at x -> 0: min over bottom entries that are not
  /// cancelled by a top entry top_j = bottom_i - l, l in N0; multiplicity
  /// of that minimum is written to *mult when given.
  double zero_exponent(int* mult = nullptr) const;
  double one_exponent() const { return psi() - 1.0; }
  /// Remove exactly matching top/bottom pairs.
  GKernelSpec cancelled() const;
};

/// Density kernel of the rho-form representation: top = B, bottom = A.
GKernelSpec kernel_from_params(const ParameterSet& p);
/// Augmented kernel of the order-1 density rho_1: top = (1, B),
/// bottom = (sigma, A).
GKernelSpec augmented_kernel(const ParameterSet& p);

struct QuadratureConfig {
  double contour_offset = 0.0;   // <= 0: choose automatically
  double truncation_height = 0.0; // > 0: fixed T, no adaptation
  std::size_t panel_nodes = 20;  // Gauss-Legendre points per contour panel
  std::size_t unit_half_n = 110; // tanh-sinh half node count on (0,1)
  double abs_tol = 1e-11;
  double rel_tol = 1e-9;
  bool verify_symmetry = false;  // integrate both half-lines independently
};

struct ContourResult {
  double value = 0.0;
  double imag_residual = 0.0; // only populated with verify_symmetry
  double err_est = 0.0;
  double truncation = 0.0;
  std::size_t evals = 0;
  bool converged = false;
};

/// Mellin-Barnes contour quadrature of G^{q,0}_{q,q}(x | top; bottom),
/// 0 < x, x != 1.  Requires Re(psi) > 0 after cancellation.
ContourResult meijer_g_detail(double x, const GKernelSpec& spec,
                              const QuadratureConfig& cfg);
double meijer_g(double x, const GKernelSpec& spec, const QuadratureConfig& cfg);

/// q = 1 closed form: s^a (1-s)^{b-a-1} / Gamma(b-a); requires b > a > 0.
double closed_form_q1(double s, double a, double b);

/// q = 2 closed form via the Gauss function; requires a1, a2 > 0 and
/// b1 + b2 > a1 + a2.
double closed_form_q2(double t, double a1, double a2, double b1, double b2);

/// Monte Carlo evaluation of the (q-1)-dimensional integral over
/// Lambda_q(x) with Beta-distributed proposals; deterministic per seed.
struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
};
McEstimate multidim_oracle(double x, const Vec& a, const Vec& b,
                           std::size_t samples, std::uint64_t seed = 20240817);

/// G sampled once on a tanh-sinh grid of (0,1); reused by every integral
/// against the same kernel (moments, Stieltjes quadrature, densities).
struct KernelTable {
  GKernelSpec spec;
  UnitGrid grid;
  Vec values; // G(s_i)

  static KernelTable build(const GKernelSpec& spec, const QuadratureConfig& cfg);

  /// integral over (0,1) of f(s, 1-s) * G(s) ds
  template <typename F>
  double integrate(F&& f) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i)
      acc += grid.w[i] * values[Eigen::Index(i)] *
             f(grid.s[i], grid.one_minus_s[i]);
    return acc;
  }
};

/// Quadrature moment int_0^1 s^{k-1} G(s) ds against the exact gamma
/// ratio prod Gamma(k+bottom_i)/Gamma(k+top_i); k may be any real with
/// k > -min(bottom).
struct MomentCheck {
  double quadrature = 0.0;
  double exact = 0.0;
  double rel_err() const;
};
MomentCheck mellin_moment(const KernelTable& table, double k);
MomentCheck mellin_moment(const GKernelSpec& spec, double k,
                          const QuadratureConfig& cfg);

/// |G(x)| for x > 1, where the kernel vanishes identically; uses a fixed
/// truncation height when
/// cfg.truncation_height > 0.
double vanish_check(double x, const GKernelSpec& spec,
                    const QuadratureConfig& cfg);

/// Relative residual of prod Gamma(x+a_i)/Gamma(x+b_i)
///   = int_0^infty e^{-tx} G(e^{-t} | B; A) dt, substituted to (0,1).
double laplace_identity_check(double x, const Vec& a, const Vec& b,
                              const QuadratureConfig& cfg);
double laplace_identity_check(double x, const KernelTable& table);

} // namespace stiehyp

#endif
