#include "stiehyp/meijer.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "stiehyp/gammafn.hpp"
#include "stiehyp/hypeval.hpp"

namespace stiehyp {

namespace {

constexpr double kPi = 3.14159265358979323846;

cdouble log_ratio(const GKernelSpec& k, cdouble s) {
  cdouble acc(0.0, 0.0);
  for (Eigen::Index i = 0; i < k.order(); ++i) acc += log_gamma(k.bottom[i] + s);
  for (Eigen::Index i = 0; i < k.order(); ++i) acc -= log_gamma(k.top[i] + s);
  return acc;
}

cdouble log_ratio_d1(const GKernelSpec& k, cdouble s) {
  cdouble acc(0.0, 0.0);
  for (Eigen::Index i = 0; i < k.order(); ++i) acc += digamma(k.bottom[i] + s);
  for (Eigen::Index i = 0; i < k.order(); ++i) acc -= digamma(k.top[i] + s);
  return acc;
}

cdouble log_ratio_d2(const GKernelSpec& k, cdouble s) {
  cdouble acc(0.0, 0.0);
  for (Eigen::Index i = 0; i < k.order(); ++i) acc += trigamma(k.bottom[i] + s);
  for (Eigen::Index i = 0; i < k.order(); ++i) acc -= trigamma(k.top[i] + s);
  return acc;
}

struct HalfLineResult {
  cdouble sum{0.0, 0.0}; // integral over [0, T] plus tail correction
  double err = 0.0;
  double T = 0.0;
  std::size_t evals = 0;
  bool converged = false;
};

// Integrate f(t) = exp(L(c + sgn*i*t) + (c + sgn*i*t)*omega) over t in
// [0, inf), omega = -ln x.  Oscillatory tail handled by integration by
// parts at the truncation point.
HalfLineResult integrate_half_line(const GKernelSpec& spec, double c,
                                   double omega, double sgn,
                                   const QuadratureConfig& cfg,
                                   double scale_hint) {
  const GaussRule& rule = gauss_legendre(cfg.panel_nodes);
  const double psi = spec.psi();
  const double aomega = std::abs(omega);
  // A panel_nodes-point Gauss panel resolves a few full oscillation
  // periods to machine precision; half a period per panel would waste an
  // order of magnitude of evaluations at large omega.
  const double cap_osc = aomega > 1e-300 ? 8.0 * kPi / aomega : 1e300;
  const double pole_dist = c + spec.bottom.minCoeff();

  HalfLineResult res;
  double t0 = 0.0;
  double width = std::min({0.5, cap_osc, 0.5 * pole_dist + 0.02});
  const bool fixed_T = cfg.truncation_height > 0.0;
  double T_goal =
      fixed_T ? cfg.truncation_height
              : std::min(1e6, std::max(20.0, 16.0 / std::max(aomega, 0.8)));
  const double T_max = fixed_T ? cfg.truncation_height : 3e7;
  const std::size_t eval_cap = 400000;

  auto integrand = [&](double t) {
    const cdouble s(c, sgn * t);
    return std::exp(log_ratio(spec, s) + s * omega);
  };

  while (true) {
    while (t0 < T_goal && res.evals < eval_cap) {
      const double w2 = 0.5 * width;
      const double mid = t0 + w2;
      cdouble panel(0.0, 0.0);
      for (std::size_t i = 0; i < rule.x.size(); ++i)
        panel += rule.w[i] * integrand(mid + w2 * rule.x[i]);
      res.sum += w2 * panel;
      res.evals += rule.x.size();
      t0 += width;
      width = std::min({width * 1.6, cap_osc,
                        std::max(0.5 * (t0 + pole_dist), 0.05)});
    }
    res.T = t0;

    // Tail correction via integration by parts:
    //   int_T^inf f dt = -f(T)/(i w) [1 - L'/w + (L'' + L'^2)/w^2] + ...
    // with w = sgn*omega for this half line (phase e^{i sgn omega t}).
    const cdouble sT(c, sgn * t0);
    const cdouble fT = integrand(t0);
    const double w_eff = sgn * omega; // d(phase)/dt
    cdouble tail(0.0, 0.0);
    double err_osc = 1e300, err_decay = 1e300;
    if (aomega * t0 >= 6.0) {
      const cdouble iw(0.0, w_eff);
      const cdouble L1s = log_ratio_d1(spec, sT);
      const cdouble L2s = log_ratio_d2(spec, sT);
      // derivatives with respect to t: E'/E = sgn*i*L1s, E''/E = -(L2s+L1s^2)
      const cdouble e1 = cdouble(0.0, sgn) * L1s;
      const cdouble e2 = -(L2s + L1s * L1s);
      tail = -fT / iw * (1.0 - e1 / iw + e2 / (iw * iw));
      const double ratio =
          (std::abs(L1s) + 2.0 / std::max(t0, 1.0)) / aomega;
      err_osc = std::abs(fT / iw) * ratio * ratio * ratio;
    }
    if (psi > 1.05)
      err_decay = std::abs(fT) * t0 / (psi - 1.0);
    double err = std::min(err_osc, err_decay);
    if (err_decay < err_osc) tail = cdouble(0.0, 0.0);
    res.err = err;

    const double target =
        std::max(cfg.abs_tol, cfg.rel_tol * std::max(std::abs(res.sum.real()),
                                                     scale_hint)) *
        kPi;
    if (fixed_T || err <= 0.5 * target || T_goal >= T_max ||
        res.evals >= eval_cap) {
      res.sum += tail;
      res.converged = err <= target;
      return res;
    }
    T_goal = std::min(T_max, T_goal * 2.0);
  }
}

double auto_contour_offset(const GKernelSpec& spec, double omega) {
  const double minb = spec.bottom.minCoeff();
  double c = std::max(1.0, 1.0 - minb) + 0.5;
  // For small x the computed integral cancels down to ~x^{c+a}; move the
  // contour toward the leading pole to keep the cancellation bounded.
  if (omega > 8.0) {
    const double delta = std::max(0.2, 12.0 / omega);
    c = std::min(c, -minb + delta);
  }
  return c;
}

} // namespace

GKernelSpec::GKernelSpec(Vec top_, Vec bottom_)
    : top(std::move(top_)), bottom(std::move(bottom_)) {
  if (top.size() != bottom.size())
    throw std::invalid_argument("GKernelSpec: length mismatch");
}

double GKernelSpec::zero_exponent(int* mult) const {
  double best = std::numeric_limits<double>::infinity();
  int m = 0;
  for (Eigen::Index i = 0; i < order(); ++i) {
    bool excluded = false;
    for (Eigen::Index j = 0; j < order(); ++j) {
      const double l = bottom[i] - top[j];
      if (l >= -1e-12 && std::abs(l - std::round(l)) < 1e-12) {
        excluded = true;
        break;
      }
    }
    if (excluded) continue;
    if (bottom[i] < best - 1e-12) {
      best = bottom[i];
      m = 1;
    } else if (std::abs(bottom[i] - best) <= 1e-12) {
      ++m;
    }
  }
  if (!std::isfinite(best)) {
    // fully cancelled kernel; exponent of the surviving atom-free part
    best = bottom.size() ? bottom.minCoeff() : 0.0;
    m = 1;
  }
  if (mult) *mult = m;
  return best;
}

GKernelSpec GKernelSpec::cancelled() const {
  std::vector<double> t(top.begin(), top.end());
  std::vector<double> b(bottom.begin(), bottom.end());
  for (auto ib = b.begin(); ib != b.end();) {
    auto it = std::find(t.begin(), t.end(), *ib);
    if (it != t.end()) {
      t.erase(it);
      ib = b.erase(ib);
    } else {
      ++ib;
    }
  }
  GKernelSpec out;
  out.top = Eigen::Map<Vec>(t.data(), Eigen::Index(t.size()));
  out.bottom = Eigen::Map<Vec>(b.data(), Eigen::Index(b.size()));
  return out;
}

GKernelSpec kernel_from_params(const ParameterSet& p) {
  if (!p.all_real())
    throw std::invalid_argument("kernel_from_params: parameters must be real");
  return GKernelSpec(p.b_real(), p.a_real());
}

GKernelSpec augmented_kernel(const ParameterSet& p) {
  if (!p.all_real())
    throw std::invalid_argument("augmented_kernel: parameters must be real");
  const Eigen::Index q = p.q();
  Vec top(q + 1), bottom(q + 1);
  top[0] = 1.0;
  bottom[0] = p.sigma.real();
  top.tail(q) = p.b_real();
  bottom.tail(q) = p.a_real();
  return GKernelSpec(std::move(top), std::move(bottom));
}

ContourResult meijer_g_detail(double x, const GKernelSpec& spec_in,
                              const QuadratureConfig& cfg) {
  if (!(x > 0.0) || x == 1.0)
    throw std::domain_error("meijer_g: x must be positive and != 1");
  const GKernelSpec spec = spec_in.cancelled();
  if (spec.order() == 0)
    throw std::domain_error("meijer_g: kernel fully cancelled (atomic case)");
  if (!(spec.psi() > 0.0))
    throw std::domain_error("meijer_g: requires Re(psi) > 0");

  const double omega = -std::log(x);
  const double minb = spec.bottom.minCoeff();
  double c = cfg.contour_offset;
  if (c > 0.0) {
    if (!(c > -minb))
      throw std::domain_error("meijer_g: contour offset at/left of a pole");
  } else {
    c = auto_contour_offset(spec, omega);
  }

  // Leading-order magnitude of G, used to steer the relative target.
  const double scale_hint =
      std::exp(spec.zero_exponent() * std::log(std::min(x, 1.0)));

  HalfLineResult pos =
      integrate_half_line(spec, c, omega, +1.0, cfg, scale_hint);
  ContourResult out;
  out.truncation = pos.T;
  out.evals = pos.evals;
  out.err_est = pos.err / kPi;
  out.converged = pos.converged;
  if (cfg.verify_symmetry) {
    HalfLineResult neg =
        integrate_half_line(spec, c, omega, -1.0, cfg, scale_hint);
    out.evals += neg.evals;
    const cdouble total = (pos.sum + neg.sum) / (2.0 * kPi);
    out.value = total.real();
    out.imag_residual = std::abs(total.imag());
    out.err_est = (pos.err + neg.err) / (2.0 * kPi);
    out.converged = pos.converged && neg.converged;
  } else {
    out.value = pos.sum.real() / kPi;
  }
  return out;
}

double meijer_g(double x, const GKernelSpec& spec,
                const QuadratureConfig& cfg) {
  return meijer_g_detail(x, spec, cfg).value;
}

double closed_form_q1(double s, double a, double b) {
  if (!(b > a && a > 0.0))
    throw std::domain_error("closed_form_q1: requires b > a > 0");
  if (!(s > 0.0 && s < 1.0))
    throw std::domain_error("closed_form_q1: s must lie in (0,1)");
  return std::pow(s, a) * std::pow(1.0 - s, b - a - 1.0) /
         std::tgamma(b - a);
}

double closed_form_q2(double t, double a1, double a2, double b1, double b2) {
  const double psi = b1 + b2 - a1 - a2;
  if (!(a1 > 0.0 && a2 > 0.0 && psi > 0.0))
    throw std::domain_error(
        "closed_form_q2: requires a1,a2 > 0 and b1+b2 > a1+a2");
  if (!(t > 0.0 && t < 1.0))
    throw std::domain_error("closed_form_q2: t must lie in (0,1)");
  return std::pow(t, a2) * std::pow(1.0 - t, psi - 1.0) / std::tgamma(psi) *
         gauss_2f1_near_one(b1 - a1, b2 - a1, psi, t);
}

namespace {

// Deterministic uniforms/normals/gammas built directly on mt19937_64 so
// results do not depend on the standard library's distribution algorithms.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  double uniform() {
    return double(eng() >> 11) * 0x1.0p-53 + 0x1.0p-54;
  }
  double normal() {
    const double u1 = uniform(), u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
  }
  // Marsaglia-Tsang, with the shape < 1 boost.
  double gamma(double shape) {
    if (shape < 1.0)
      return gamma(shape + 1.0) * std::pow(uniform(), 1.0 / shape);
    const double d = shape - 1.0 / 3.0;
    const double cc = 1.0 / std::sqrt(9.0 * d);
    while (true) {
      double z = normal();
      double v = 1.0 + cc * z;
      if (v <= 0.0) continue;
      v = v * v * v;
      const double u = uniform();
      if (u < 1.0 - 0.0331 * z * z * z * z) return d * v;
      if (std::log(u) < 0.5 * z * z + d * (1.0 - v + std::log(v))) return d * v;
    }
  }
  double beta(double alpha, double beta_) {
    const double g1 = gamma(alpha), g2 = gamma(beta_);
    return g1 / (g1 + g2);
  }
};

} // namespace

McEstimate multidim_oracle(double x, const Vec& a_in, const Vec& b_in,
                           std::size_t samples, std::uint64_t seed) {
  const Eigen::Index q = a_in.size();
  if (q < 2 || b_in.size() != q)
    throw std::invalid_argument("multidim_oracle: need q >= 2");
  if (!(x > 0.0 && x < 1.0))
    throw std::domain_error("multidim_oracle: x must lie in (0,1)");
  for (Eigen::Index i = 0; i < q; ++i)
    if (!(b_in[i] > a_in[i] && a_in[i] > 0.0))
      throw std::domain_error("multidim_oracle: requires b_k > a_k > 0");

  // Put the pair with the smallest upper parameter first so the remaining
  // exponents a_k - a_1 are nonnegative.
  auto idx = std::vector<Eigen::Index>(std::size_t(q));
  for (Eigen::Index i = 0; i < q; ++i) idx[std::size_t(i)] = i;
  std::sort(idx.begin(), idx.end(),
            [&](Eigen::Index i, Eigen::Index j) { return a_in[i] < a_in[j]; });
  Vec a(q), b(q);
  for (Eigen::Index i = 0; i < q; ++i) {
    a[i] = a_in[idx[std::size_t(i)]];
    b[i] = b_in[idx[std::size_t(i)]];
  }

  double log_pref = a[0] * std::log(x);
  for (Eigen::Index i = 0; i < q; ++i) log_pref -= std::lgamma(b[i] - a[i]);

  // Beta proposals matched to the endpoint factors; the exponent shift
  // a_k - a_1 - alpha_k goes into the weight.
  const std::size_t qs = std::size_t(q);
  std::vector<double> alpha(qs), betap(qs), shift(qs), logB(qs);
  double logBsum = 0.0;
  for (Eigen::Index k = 1; k < q; ++k) {
    const double raw = a[k] - a[0];
    alpha[std::size_t(k)] = raw > 0.05 ? raw : raw + 0.5;
    betap[std::size_t(k)] = b[k] - a[k];
    shift[std::size_t(k)] = raw - alpha[std::size_t(k)];
    logB[std::size_t(k)] = std::lgamma(alpha[std::size_t(k)]) +
                           std::lgamma(betap[std::size_t(k)]) -
                           std::lgamma(alpha[std::size_t(k)] +
                                       betap[std::size_t(k)]);
    logBsum += logB[std::size_t(k)];
  }

  Rng rng(seed);
  const double expo1 = b[0] - a[0] - 1.0;
  double sum = 0.0, sumsq = 0.0;
  for (std::size_t n = 0; n < samples; ++n) {
    double prod = 1.0;
    double logw = 0.0;
    for (Eigen::Index k = 1; k < q; ++k) {
      const double t = rng.beta(alpha[std::size_t(k)], betap[std::size_t(k)]);
      prod *= t;
      logw += shift[std::size_t(k)] * std::log(t);
    }
    double val = 0.0;
    if (prod > x)
      val = std::exp(log_pref + logBsum + logw +
                     expo1 * std::log1p(-x / prod));
    sum += val;
    sumsq += val * val;
  }
  McEstimate est;
  est.samples = samples;
  est.mean = sum / double(samples);
  const double var =
      std::max(0.0, sumsq / double(samples) - est.mean * est.mean);
  est.std_error = std::sqrt(var / double(samples));
  return est;
}

KernelTable KernelTable::build(const GKernelSpec& spec,
                               const QuadratureConfig& cfg) {
  KernelTable t;
  t.spec = spec.cancelled();
  t.grid = tanh_sinh_unit(cfg.unit_half_n);
  t.values.resize(Eigen::Index(t.grid.size()));
  const double a0 = t.spec.zero_exponent();
  const double psi = t.spec.psi();
  const double inv_gamma_psi = 1.0 / gamma_real(psi);
  // First endpoint-correction coefficient, fixed by matching the 1/k term
  // of the Mellin transform prod Gamma(k+a)/Gamma(k+b) ~ k^-psi (1 + D/k)
  // against the Beta-function moments of (1-s)^{psi-1}(1 + c1 (1-s)).
  double sq_diff = 0.0;
  for (Eigen::Index i = 0; i < t.spec.order(); ++i)
    sq_diff += t.spec.bottom[i] * t.spec.bottom[i] -
               t.spec.top[i] * t.spec.top[i];
  const double c1 = (sq_diff + psi * psi) / (2.0 * psi);
  for (std::size_t i = 0; i < t.grid.size(); ++i) {
    const double s = t.grid.s[i];
    const double oms = t.grid.one_minus_s[i];
    // Skip nodes whose weighted contribution is below double noise; the
    // leading behaviour s^{a0} bounds |G| up to logs.
    if (a0 * std::log(s) < -320.0) {
      t.values[Eigen::Index(i)] = 0.0;
      continue;
    }
    // Near s = 1 the contour integral degenerates (the Mellin variable
    // couples to -ln s -> 0); switch to the endpoint expansion, whose
    // relative error is O((1-s)^2) with the c1 correction.
    if (oms < 1e-4) {
      t.values[Eigen::Index(i)] =
          std::pow(oms, psi - 1.0) * inv_gamma_psi * (1.0 + c1 * oms);
      continue;
    }
    t.values[Eigen::Index(i)] = meijer_g(s, t.spec, cfg);
  }
  return t;
}

double MomentCheck::rel_err() const {
  return std::abs(quadrature - exact) /
         std::max(std::abs(exact), 1e-300);
}

MomentCheck mellin_moment(const KernelTable& table, double k) {
  const GKernelSpec& spec = table.spec;
  if (!(k > -spec.bottom.minCoeff()))
    throw std::domain_error("mellin_moment: k + min(bottom) must be > 0");
  MomentCheck m;
  m.quadrature = table.integrate(
      [&](double s, double) { return std::pow(s, k - 1.0); });
  double lg = 0.0;
  for (Eigen::Index i = 0; i < spec.order(); ++i)
    lg += std::lgamma(k + spec.bottom[i]) - std::lgamma(k + spec.top[i]);
  m.exact = std::exp(lg);
  return m;
}

MomentCheck mellin_moment(const GKernelSpec& spec, double k,
                          const QuadratureConfig& cfg) {
  return mellin_moment(KernelTable::build(spec, cfg), k);
}

double vanish_check(double x, const GKernelSpec& spec,
                    const QuadratureConfig& cfg) {
  if (!(x > 1.0)) throw std::domain_error("vanish_check: x must exceed 1");
  return std::abs(meijer_g(x, spec, cfg));
}

double laplace_identity_check(double x, const KernelTable& table) {
  const MomentCheck m = mellin_moment(table, x);
  return m.rel_err();
}

double laplace_identity_check(double x, const Vec& a, const Vec& b,
                              const QuadratureConfig& cfg) {
  const KernelTable table = KernelTable::build(GKernelSpec(b, a), cfg);
  return laplace_identity_check(x, table);
}

} // namespace stiehyp
