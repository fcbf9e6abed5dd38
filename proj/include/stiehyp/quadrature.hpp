#ifndef STIEHYP_QUADRATURE_HPP
#define STIEHYP_QUADRATURE_HPP

#include <cstddef>
#include <vector>

namespace stiehyp {

/// Nodes/weights of an n-point Gauss-Legendre rule on [-1, 1].
/// Results are cached per n; thread-safe after first use of a given n.
struct GaussRule {
  std::vector<double> x;
  std::vector<double> w;
};
const GaussRule& gauss_legendre(std::size_t n);

/// tanh-sinh (double-exponential) grid on (0, 1).
/// Stores both s and 1-s so endpoint-singular integrands can be
/// evaluated without cancellation near either end.
struct UnitGrid {
  std::vector<double> s;
  std::vector<double> one_minus_s;
  std::vector<double> w;
  std::size_t size() const { return s.size(); }
};

/// half_n points on each side of the midpoint plus the centre node.
UnitGrid tanh_sinh_unit(std::size_t half_n = 100, double u_max = 4.0);

/// Integrate f over (0,1) on a tanh-sinh grid; f receives (s, 1-s).
template <typename F>
double integrate_unit(const UnitGrid& g, F&& f) {
  double acc = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i)
    acc += g.w[i] * f(g.s[i], g.one_minus_s[i]);
  return acc;
}

} // namespace stiehyp

#endif
