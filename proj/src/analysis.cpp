#include "stiehyp/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "stiehyp/hypeval.hpp"
#include "stiehyp/rng.hpp"
#include "stiehyp/stieltjes.hpp"

namespace stiehyp {

namespace {

// F(sigma, A; B; w) at a complex argument w off the cut [1, infinity):
// through the cached Stieltjes table when the representation hypotheses
// hold, otherwise by the power series (|w| < 1 only).
struct FOracle {
  ParameterSet p;
  std::optional<StieltjesEvaluator> st;

  FOracle(const ParameterSet& p_, const QuadratureConfig& cfg) : p(p_) {
    bool representable = p.all_real();
    if (representable) {
      const Vec a = p.a_real();
      representable = (a.array() > 0.0).all() &&
                      psi_excess(p.a_real(), p.b_real()) > 0.0;
    }
    if (representable) st.emplace(p, cfg);
  }

  cdouble at(cdouble w) const {
    if (st) return (*st)(-w);
    return eval_series(p, w).value;
  }

  cdouble at_sigma(cdouble sigma, cdouble w) const {
    if (st) return st->with_sigma(sigma, -w);
    ParameterSet q = p;
    q.sigma = sigma;
    return eval_series(q, w).value;
  }
};

double prod_ratio(const Vec& num, const Vec& den) {
  double r = 1.0;
  for (Eigen::Index i = 0; i < num.size(); ++i) r *= num[i] / den[i];
  return r;
}

void require_real_hypotheses(const ParameterSet& p, const char* who) {
  if (!p.all_real() || p.sigma.imag() != 0.0)
    throw std::invalid_argument(std::string(who) +
                                ": parameters must be real");
  const MajorizationVerdict mv = majorization_verdict(p.a_real(), p.b_real());
  if (!mv.weak_supermajorized) {
    const std::string why =
        mv.reason.empty() ? "weak supermajorization fails" : mv.reason;
    throw std::invalid_argument(std::string(who) + ": " + why);
  }
}

} // namespace

double r_star() { return std::sqrt(13.0 * std::sqrt(13.0) - 46.0); }
double r_s() { return std::sqrt(std::sqrt(32.0) - 5.0); }

CheckResult ratio_monotonicity(const ParameterSet& p, double delta,
                               const std::vector<double>& x_grid,
                               const QuadratureConfig& cfg) {
  require_real_hypotheses(p, "ratio_monotonicity");
  if (!(delta > 0.0))
    throw std::invalid_argument("ratio_monotonicity: delta must be positive");
  const double sigma = p.sigma.real();
  const double direction = (sigma >= 0.0) ? 1.0 : -1.0; // 1: decreasing

  FOracle base(p, cfg);
  FOracle shifted(p.shifted(delta), cfg);

  CheckResult res;
  res.pass = true;
  res.worst_margin = std::numeric_limits<double>::infinity();
  std::vector<double> ratios;
  ratios.reserve(x_grid.size());
  for (double x : x_grid)
    ratios.push_back(shifted.at(cdouble(-x, 0.0)).real() /
                     base.at(cdouble(-x, 0.0)).real());
  for (std::size_t i = 0; i + 1 < ratios.size(); ++i) {
    const double margin = direction * (ratios[i] - ratios[i + 1]);
    const double slack = 1e-9 * std::max(std::abs(ratios[i]), 1.0);
    if (margin < res.worst_margin) {
      res.worst_margin = margin;
      res.worst_location = cdouble(x_grid[i + 1], 0.0);
    }
    if (margin < -slack) res.pass = false;
  }
  res.samples = ratios.size();
  return res;
}

CheckResult lower_bound_check(const ParameterSet& p,
                              const std::vector<double>& x_grid,
                              const QuadratureConfig& cfg) {
  require_real_hypotheses(p, "lower_bound_check");
  const double sigma = p.sigma.real();
  if (!(sigma > 0.0))
    throw std::invalid_argument("lower_bound_check: sigma must be positive");
  const double c = prod_ratio(p.a_real(), p.b_real());

  FOracle oracle(p, cfg);
  CheckResult res;
  res.pass = true;
  res.worst_margin = std::numeric_limits<double>::infinity();
  for (double x : x_grid) {
    const double f = oracle.at(cdouble(-x, 0.0)).real();
    const double bound = std::pow(1.0 + x * c, -sigma);
    const double margin = f - bound;
    if (x == 0.0) {
      if (std::abs(margin) > 1e-12) res.pass = false;
      continue;
    }
    if (margin < res.worst_margin) {
      res.worst_margin = margin;
      res.worst_location = cdouble(x, 0.0);
    }
    if (margin < -1e-10 * std::max(std::abs(f), 1.0)) res.pass = false;
  }
  res.samples = x_grid.size();
  return res;
}

CheckResult upper_bound_check(const ParameterSet& p,
                              const std::vector<double>& x_grid,
                              const QuadratureConfig& cfg) {
  require_real_hypotheses(p, "upper_bound_check");
  const double sigma = p.sigma.real();
  if (!(sigma > 0.0) || sigma > 1.0)
    throw std::invalid_argument("upper_bound_check: need 0 < sigma <= 1");
  const Vec a = p.a_real(), b = p.b_real();
  if (a.minCoeff() <= 1.0 || b.minCoeff() <= 1.0)
    throw std::invalid_argument(
        "upper_bound_check: every parameter must exceed 1");
  Vec am1 = a.array() - 1.0, bm1 = b.array() - 1.0;
  const double c = prod_ratio(am1, bm1);

  FOracle oracle(p, cfg);
  CheckResult res;
  res.pass = true;
  res.worst_margin = std::numeric_limits<double>::infinity();
  for (double x : x_grid) {
    if (!(x > 0.0))
      throw std::invalid_argument("upper_bound_check: grid must have x > 0");
    const double f = oracle.at(cdouble(-x, 0.0)).real();
    const double bound = std::pow(1.0 + x * c, -sigma);
    const double margin = bound - f;
    if (margin < res.worst_margin) {
      res.worst_margin = margin;
      res.worst_location = cdouble(x, 0.0);
    }
    if (margin < -1e-10 * std::max(std::abs(f), 1.0)) res.pass = false;
  }
  res.samples = x_grid.size();
  return res;
}

CheckResult logconvexity_check(const ParameterSet& p, double x, double sigma1,
                               double sigma2, double delta,
                               const QuadratureConfig& cfg) {
  require_real_hypotheses(p, "logconvexity_check");
  if (!(x < 1.0))
    throw std::invalid_argument("logconvexity_check: need x < 1");
  if (!(0.0 <= sigma1 && sigma1 < sigma2) || !(delta > 0.0))
    throw std::invalid_argument(
        "logconvexity_check: need 0 <= sigma1 < sigma2 and delta > 0");

  FOracle oracle(p, cfg);
  auto f = [&](double s) {
    return oracle.at_sigma(cdouble(s, 0.0), cdouble(x, 0.0)).real();
  };
  const double lhs = f(sigma1 + delta) * f(sigma2);
  const double rhs = f(sigma1) * f(sigma2 + delta);
  CheckResult res;
  res.worst_margin = rhs - lhs;
  res.worst_location = cdouble(x, 0.0);
  res.samples = 4;
  res.pass = res.worst_margin >= -1e-10 * std::max(std::abs(rhs), 1.0);
  return res;
}

NegativeControlResult logconvexity_negative_search(std::uint64_t seed,
                                                   std::size_t trials,
                                                   const QuadratureConfig&) {
  DetRng rng(seed);
  NegativeControlResult out;
  out.trials = trials;
  // Series-only probes keep the search cheap; |x| < 1 suffices to look for
  // counterexamples, and nothing is asserted either way.
  const double xs[] = {-0.3, -0.6, -0.9};
  for (std::size_t t = 0; t < trials; ++t) {
    const Eigen::Index q = 2 + Eigen::Index(rng.eng() % 2);
    Vec a(q), b(q);
    for (Eigen::Index i = 0; i < q; ++i) {
      a[i] = rng.uniform(0.1, 5.0);
      b[i] = rng.uniform(0.1, 5.0);
    }
    if (!chain_condition(a, b)) continue;
    if (majorization_verdict(a, b).weak_supermajorized) continue;
    ++out.families_found;

    ParameterSet p;
    p.sigma = cdouble(1.0, 0.0);
    p.a = a.cast<cdouble>();
    p.b = b.cast<cdouble>();
    for (double x : xs) {
      const double s1 = 0.3, s2 = 1.1, d = 0.5;
      auto f = [&](double s) {
        ParameterSet ps = p;
        ps.sigma = cdouble(s, 0.0);
        return eval_series(ps, cdouble(x, 0.0)).value.real();
      };
      double lhs, rhs;
      try {
        lhs = f(s1 + d) * f(s2);
        rhs = f(s1) * f(s2 + d);
      } catch (const std::exception&) {
        continue;
      }
      const double viol = lhs - rhs;
      if (viol > 1e-9 * std::max(std::abs(rhs), 1.0)) {
        ++out.violations;
        if (viol > out.worst_violation) {
          out.worst_violation = viol;
          out.example_a = a;
          out.example_b = b;
          out.example_x = x;
        }
      }
    }
  }
  return out;
}

CheckResult sector_map_check(const ParameterSet& p, const MappingProbe& probe,
                             const QuadratureConfig& cfg) {
  require_real_hypotheses(p, "sector_map_check");
  const double sigma = p.sigma.real();
  if (!(sigma >= 1.0))
    throw std::invalid_argument("sector_map_check: need sigma >= 1");

  StieltjesEvaluator st(p, cfg);
  DetRng rng(probe.seed);
  const double top = std::numbers::pi / sigma;
  const double pad = 0.01 * top;

  CheckResult res;
  res.pass = true;
  res.worst_margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < probe.sample_count; ++i) {
    const double r = std::pow(10.0, rng.uniform(-2.0, 2.0));
    const double theta = rng.uniform(pad, top - pad);
    const cdouble z = std::polar(r, theta);
    const cdouble f = st(z); // F(sigma,A;B;-z)
    const double margin = -f.imag();
    if (margin < res.worst_margin) {
      res.worst_margin = margin;
      res.worst_location = z;
    }
    if (!(margin > 1e-12)) res.pass = false;
  }
  res.samples = probe.sample_count;
  return res;
}

CheckResult univalence_check(const ParameterSet& p, const MappingProbe& probe,
                             bool use_zf, const QuadratureConfig& cfg) {
  require_real_hypotheses(p, "univalence_check");
  StieltjesEvaluator st(p, cfg);
  // map(z) evaluated at argument z: F(sigma,A;B;z) = st(-z)
  auto map = [&](cdouble z) {
    const cdouble f = st(-z);
    return use_zf ? z * f : f;
  };

  DetRng rng(probe.seed);
  std::vector<cdouble> zs;
  zs.reserve(probe.sample_count);
  const double pi = std::numbers::pi;
  while (zs.size() < probe.sample_count) {
    cdouble z;
    switch (probe.region) {
      case MappingProbe::Region::half_plane:
        z = cdouble(rng.uniform(-3.0, 1.0 - 1e-3), rng.uniform(-3.0, 3.0));
        break;
      case MappingProbe::Region::disk: {
        const double r = probe.radius * std::sqrt(rng.uniform());
        z = std::polar(r, rng.uniform(0.0, 2.0 * pi));
        break;
      }
      case MappingProbe::Region::sector: {
        const double sig = p.sigma.real();
        const double r = std::pow(10.0, rng.uniform(-2.0, 2.0));
        z = std::polar(r, rng.uniform(0.01, pi / sig - 0.01));
        break;
      }
    }
    zs.push_back(z);
  }

  std::vector<cdouble> ws(zs.size());
  for (std::size_t i = 0; i < zs.size(); ++i) ws[i] = map(zs[i]);

  CheckResult res;
  res.pass = true;
  res.worst_margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < zs.size(); ++i) {
    for (std::size_t k = i + 1; k < zs.size(); ++k) {
      if (std::abs(zs[i] - zs[k]) <= 1e-6) continue;
      const double sep = std::abs(ws[i] - ws[k]);
      if (sep < res.worst_margin) {
        res.worst_margin = sep;
        res.worst_location = zs[i];
      }
      if (sep < 1e-12) res.pass = false;
    }
  }
  // Nonvanishing derivative on a subgrid (necessary condition).
  const std::size_t nd = std::min<std::size_t>(100, zs.size());
  double min_deriv = std::numeric_limits<double>::infinity();
  const double h = 1e-5;
  for (std::size_t i = 0; i < nd; ++i) {
    const cdouble d = (map(zs[i] + h) - map(zs[i] - h)) / (2.0 * h);
    min_deriv = std::min(min_deriv, std::abs(d));
  }
  if (!(min_deriv > 1e-10)) res.pass = false;
  res.samples = zs.size();
  res.note = "min |derivative| = " + std::to_string(min_deriv);
  return res;
}

CheckResult starlikeness_check(const ParameterSet& p, double r,
                               std::size_t circle_points) {
  require_real_hypotheses(p, "starlikeness_check");
  const double sigma = p.sigma.real();
  if (!(sigma > 0.0) || sigma > 1.0)
    throw std::invalid_argument("starlikeness_check: need 0 < sigma <= 1");
  if (!(r > 0.0 && r < 1.0))
    throw std::invalid_argument("starlikeness_check: need 0 < r < 1");

  // Series terms t_k of F; |t_k| r^k decides truncation.
  std::vector<double> t;
  t.push_back(1.0);
  double rk = 1.0;
  for (int k = 0;; ++k) {
    double ratio = (sigma + k) / (k + 1.0);
    for (Eigen::Index i = 0; i < p.q(); ++i)
      ratio *= (p.a[i].real() + k) / (p.b[i].real() + k);
    t.push_back(t.back() * ratio);
    rk *= r;
    if (std::abs(t.back()) * rk < 1e-18 && k > 4) break;
    if (t.size() > 100000)
      throw std::runtime_error("starlikeness_check: series too slow");
  }

  CheckResult res;
  res.pass = true;
  res.worst_margin = std::numeric_limits<double>::infinity();
  const double pi = std::numbers::pi;
  for (std::size_t i = 0; i < circle_points; ++i) {
    const cdouble z = std::polar(r, 2.0 * pi * double(i) / double(circle_points));
    cdouble f(0.0, 0.0), fp(0.0, 0.0);
    cdouble zk(1.0, 0.0);
    for (std::size_t k = 0; k < t.size(); ++k) {
      f += t[k] * zk;
      if (k + 1 < t.size()) fp += double(k + 1) * t[k + 1] * zk;
      zk *= z;
    }
    // g = zF, z g'/g = 1 + z F'/F
    const double re = (1.0 + z * fp / f).real();
    if (re < res.worst_margin) {
      res.worst_margin = re;
      res.worst_location = z;
    }
    if (!(re > 0.0)) res.pass = false;
  }
  res.samples = circle_points;
  return res;
}

} // namespace stiehyp
