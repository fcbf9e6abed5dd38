#include "stiehyp/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace stiehyp {

namespace {

GaussRule compute_gauss_legendre(std::size_t n) {
  GaussRule r;
  r.x.resize(n);
  r.w.resize(n);
  const double pi = 3.14159265358979323846;
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(pi * (double(i) + 0.75) / (double(n) + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      // Legendre P_n and derivative by upward recurrence
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / double(k);
        p0 = p1;
        p1 = pk;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    r.x[i] = -x;
    r.x[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.w[i] = w;
    r.w[n - 1 - i] = w;
  }
  return r;
}

} // namespace

const GaussRule& gauss_legendre(std::size_t n) {
  static std::mutex mtx;
  static std::map<std::size_t, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
  return it->second;
}

UnitGrid tanh_sinh_unit(std::size_t half_n, double u_max) {
  const double pi_half = 1.57079632679489661923;
  const double h = u_max / double(half_n);
  UnitGrid g;
  g.s.reserve(2 * half_n + 1);
  g.one_minus_s.reserve(2 * half_n + 1);
  g.w.reserve(2 * half_n + 1);
  for (std::ptrdiff_t k = -std::ptrdiff_t(half_n); k <= std::ptrdiff_t(half_n);
       ++k) {
    const double u = h * double(k);
    const double v = pi_half * std::sinh(u);
    // s = 1/(1+e^{-2v}), 1-s = 1/(1+e^{2v}); both accurate near the ends
    const double s = 1.0 / (1.0 + std::exp(-2.0 * v));
    const double oms = 1.0 / (1.0 + std::exp(2.0 * v));
    const double sech = 1.0 / std::cosh(v);
    const double w = h * pi_half * std::cosh(u) * 0.5 * sech * sech;
    if (w < 1e-290 || s <= 0.0 || oms <= 0.0) continue;
    g.s.push_back(s);
    g.one_minus_s.push_back(oms);
    g.w.push_back(w);
  }
  return g;
}

} // namespace stiehyp
