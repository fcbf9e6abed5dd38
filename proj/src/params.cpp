#include "stiehyp/params.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "stiehyp/gammafn.hpp"

namespace stiehyp {

namespace {

bool nonpositive_integer(cdouble z) {
  return z.imag() == 0.0 && z.real() <= 0.0 &&
         z.real() == std::floor(z.real());
}

} // namespace

ParameterSet::ParameterSet(cdouble sigma_, CVec a_, CVec b_)
    : sigma(sigma_), a(std::move(a_)), b(std::move(b_)) {
  if (a.size() != b.size() || a.size() < 1)
    throw std::invalid_argument("ParameterSet: need length(A) == length(B) >= 1");
  for (Eigen::Index i = 0; i < b.size(); ++i)
    if (nonpositive_integer(b[i]))
      throw std::invalid_argument("ParameterSet: lower parameter is a nonpositive integer");
}

ParameterSet::ParameterSet(double sigma_, std::initializer_list<double> a_,
                           std::initializer_list<double> b_)
    : ParameterSet(cdouble(sigma_, 0.0),
                   [&] {
                     CVec v(Eigen::Index(a_.size()));
                     Eigen::Index i = 0;
                     for (double x : a_) v[i++] = x;
                     return v;
                   }(),
                   [&] {
                     CVec v(Eigen::Index(b_.size()));
                     Eigen::Index i = 0;
                     for (double x : b_) v[i++] = x;
                     return v;
                   }()) {}

bool ParameterSet::all_real() const {
  if (sigma.imag() != 0.0) return false;
  for (Eigen::Index i = 0; i < q(); ++i)
    if (a[i].imag() != 0.0 || b[i].imag() != 0.0) return false;
  return true;
}

ParameterSet ParameterSet::shifted(double delta) const {
  ParameterSet p(*this);
  p.a.array() += delta;
  p.b.array() += delta;
  return p;
}

cdouble pochhammer(cdouble a, unsigned n) {
  if (n == 0) return 1.0;
  if (n <= 64) {
    cdouble prod(1.0, 0.0);
    for (unsigned k = 0; k < n; ++k) prod *= a + double(k);
    return prod;
  }
  // (a)_n = Gamma(a+n)/Gamma(a); at nonpositive-integer a fall back to the
  // direct product (it may be an exact zero).
  if (nonpositive_integer(a)) {
    cdouble prod(1.0, 0.0);
    for (unsigned k = 0; k < n && prod != cdouble(0.0, 0.0); ++k)
      prod *= a + double(k);
    return prod;
  }
  return std::exp(log_gamma(a + double(n)) - log_gamma(a));
}

cdouble psi_excess(const CVec& a, const CVec& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("psi: length mismatch");
  return (b - a).sum();
}

double psi_excess(const Vec& a, const Vec& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("psi: length mismatch");
  return (b - a).sum();
}

MajorizationVerdict majorization_verdict(const Vec& a, const Vec& b) {
  MajorizationVerdict v;
  if (a.size() != b.size()) {
    v.reason = "length mismatch";
    return v;
  }
  v.psi = cdouble(psi_excess(a, b), 0.0);
  Vec sa = a, sb = b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa[0] <= 0.0 || sb[0] <= 0.0) {
    v.reason = "entries must be positive";
    return v;
  }
  double pa = 0.0, pb = 0.0;
  bool weak = true;
  for (Eigen::Index k = 0; k < sa.size(); ++k) {
    pa += sa[k];
    pb += sb[k];
    if (!(pa <= pb)) {
      weak = false;
      break;
    }
  }
  v.weak_supermajorized = weak;
  v.majorized = weak && v.psi == cdouble(0.0, 0.0);
  v.chain_holds = chain_condition(a, b);
  return v;
}

double elementary_symmetric(const Vec& x, int k) {
  const int q = int(x.size());
  if (k < 0 || k > q) throw std::invalid_argument("elementary_symmetric: k out of range");
  // e[j] over growing prefixes
  std::vector<double> e(std::size_t(k) + 1, 0.0);
  e[0] = 1.0;
  for (int i = 0; i < q; ++i)
    for (int j = std::min(k, i + 1); j >= 1; --j) e[std::size_t(j)] += x[i] * e[std::size_t(j) - 1];
  return e[std::size_t(k)];
}

bool chain_condition(const Vec& a, const Vec& b) {
  const int q = int(a.size());
  std::vector<double> ea(std::size_t(q) + 1), eb(std::size_t(q) + 1);
  for (int k = 0; k <= q; ++k) {
    ea[std::size_t(k)] = elementary_symmetric(a, k);
    eb[std::size_t(k)] = elementary_symmetric(b, k);
  }
  // e_1(B)/e_1(A) >= 1
  if (!(eb[1] >= ea[1])) return false;
  // e_k(B)/e_k(A) >= e_{k-1}(B)/e_{k-1}(A), cross-multiplied
  for (int k = 1; k <= q; ++k)
    if (!(eb[std::size_t(k)] * ea[std::size_t(k) - 1] >=
          eb[std::size_t(k) - 1] * ea[std::size_t(k)]))
      return false;
  return true;
}

} // namespace stiehyp
