#include "stiehyp/pade.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

#include "stiehyp/stieltjes.hpp"

namespace stiehyp {

namespace {

using LVec = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
using LMat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;

// Taylor coefficients c_0..c_K of F(sigma, A; B; -z) in powers of z;
// c_k = (-1)^k m_k with m_k the moments.  Long double running product.
std::vector<long double> series_coeffs(const ParameterSet& p, int K) {
  if (!p.all_real() || p.sigma.imag() != 0.0)
    throw std::invalid_argument("series_coeffs: parameters must be real");
  const long double sigma = static_cast<long double>(p.sigma.real());
  const Eigen::Index q = p.q();
  std::vector<long double> c(std::size_t(K) + 1);
  long double term = 1.0L;
  for (int k = 0; k <= K; ++k) {
    c[std::size_t(k)] = (k % 2 == 0) ? term : -term;
    long double ratio = (sigma + k) / (k + 1.0L);
    for (Eigen::Index i = 0; i < q; ++i)
      ratio *= (static_cast<long double>(p.a[i].real()) + k) /
               (static_cast<long double>(p.b[i].real()) + k);
    term *= ratio;
  }
  return c;
}

long double coeff_at(const std::vector<long double>& c, int k) {
  if (k < 0) return 0.0L;
  return c[std::size_t(k)];
}

struct DenominatorSolve {
  bool ok = false;
  LVec q;               // q_0 = 1, q_1..q_M
  long double det = 0.0L;
  long double scale = 1.0L; // Hadamard bound of the system matrix
};

// Linear system for q_1..q_M from the order conditions
//   sum_{l=0}^{M} q_l c_{n-l} = 0,   n = L+1 .. L+M.
DenominatorSolve solve_denominator(const std::vector<long double>& c, int L,
                                   int M) {
  DenominatorSolve out;
  out.q = LVec::Zero(M + 1);
  out.q[0] = 1.0L;
  if (M == 0) {
    out.ok = true;
    out.det = 1.0L;
    return out;
  }
  LMat mat(M, M);
  LVec rhs(M);
  for (int r = 0; r < M; ++r) {
    const int n = L + 1 + r;
    for (int l = 1; l <= M; ++l) mat(r, l - 1) = coeff_at(c, n - l);
    rhs[r] = -coeff_at(c, n);
  }
  Eigen::FullPivLU<LMat> lu(mat);
  // Hankel systems of smooth Stieltjes moments are Hilbert-like: tiny
  // determinants yet numerically regular.  Judge singularity by the pivot
  // ratio, not the determinant.
  lu.setThreshold(1e-14L);
  out.det = lu.determinant();
  out.scale = 1.0L;
  for (int r = 0; r < M; ++r) {
    long double row = mat.row(r).norm();
    out.scale *= (row > 0.0L) ? row : 1.0L;
  }
  if (!lu.isInvertible()) {
    out.ok = false;
    return out;
  }
  out.q.segment(1, M) = lu.solve(rhs);
  out.ok = true;
  return out;
}

PadeApproximant assemble(const std::vector<long double>& c, int L, int M,
                         const DenominatorSolve& den) {
  PadeApproximant pa;
  pa.m = M;
  pa.j = L - M;
  pa.denominator = Vec(M + 1);
  for (int l = 0; l <= M; ++l)
    pa.denominator[l] = static_cast<double>(den.q[l]);
  pa.numerator = Vec(L + 1);
  for (int n = 0; n <= L; ++n) {
    long double acc = 0.0L;
    for (int l = 0; l <= std::min(n, M); ++l)
      acc += den.q[l] * coeff_at(c, n - l);
    pa.numerator[n] = static_cast<double>(acc);
  }
  pa.hankel_det = static_cast<double>(den.det);
  return pa;
}

cdouble horner(const Vec& coeffs, cdouble z) {
  cdouble acc(0.0, 0.0);
  for (Eigen::Index k = coeffs.size() - 1; k >= 0; --k)
    acc = acc * z + coeffs[k];
  return acc;
}

// P1/Q1 == P2/Q2 as rational functions iff P1*Q2 == P2*Q1 as polynomials.
bool same_rational(const PadeApproximant& x, const PadeApproximant& y) {
  auto mul = [](const Vec& u, const Vec& v) {
    Vec w = Vec::Zero(u.size() + v.size() - 1);
    for (Eigen::Index i = 0; i < u.size(); ++i)
      for (Eigen::Index k = 0; k < v.size(); ++k) w[i + k] += u[i] * v[k];
    return w;
  };
  Vec lhs = mul(x.numerator, y.denominator);
  Vec rhs = mul(y.numerator, x.denominator);
  const Eigen::Index n = std::max(lhs.size(), rhs.size());
  lhs.conservativeResize(n);
  rhs.conservativeResize(n);
  const double scale =
      std::max(lhs.cwiseAbs().maxCoeff(), rhs.cwiseAbs().maxCoeff());
  if (scale == 0.0) return true;
  return (lhs - rhs).cwiseAbs().maxCoeff() <= 1e-8 * scale;
}

} // namespace

MomentSequence moments(const ParameterSet& p, int K) {
  MomentSequence ms;
  ms.source = p;
  const std::vector<long double> c = series_coeffs(p, K);
  ms.values.resize(c.size());
  for (std::size_t k = 0; k < c.size(); ++k)
    ms.values[k] = static_cast<double>(std::abs(c[k]));
  return ms;
}

cdouble PadeApproximant::eval(cdouble z) const {
  return horner(numerator, z) / horner(denominator, z);
}

Vec PadeApproximant::ortho_poly() const {
  // pi(s) = s^m Q(-1/s) = sum_l q_l (-1)^l s^{m-l}
  Vec pi(m + 1);
  for (int k = 0; k <= m; ++k) {
    const int l = m - k;
    pi[k] = ((l % 2 == 0) ? 1.0 : -1.0) * denominator[l];
  }
  return pi;
}

PadeApproximant pade_from_coeffs(const std::vector<long double>& c, int L,
                                 int M) {
  if (L < 0 || M < 0)
    throw std::invalid_argument("pade_from_coeffs: negative degree");
  if (c.size() < std::size_t(L + M) + 1)
    throw std::invalid_argument("pade_from_coeffs: too few coefficients");
  DenominatorSolve den = solve_denominator(c, L, M);
  if (!den.ok)
    throw std::runtime_error("pade_from_coeffs: singular Hankel system");
  return assemble(c, L, M, den);
}

PadeApproximant pade(const ParameterSet& p, int m, int j) {
  if (j < -1) throw std::invalid_argument("pade: j must be >= -1");
  if (m < 0 || m + j < 0)
    throw std::invalid_argument("pade: need m >= 0 and m + j >= 0");
  if (!p.all_real() || p.sigma.imag() != 0.0)
    throw std::invalid_argument("pade: parameters must be real");
  const double sigma = p.sigma.real();
  if (!(sigma > 0.0) || sigma > 1.0)
    throw std::invalid_argument("pade: need 0 < sigma <= 1");
  const MajorizationVerdict mv = majorization_verdict(p.a_real(), p.b_real());
  if (!mv.weak_supermajorized)
    throw std::invalid_argument("pade: lower parameters must weakly "
                                "supermajorize the upper ones");
  const int L = m + j;
  const std::vector<long double> c = series_coeffs(p, L + m);
  return pade_from_coeffs(c, L, m);
}

Vec orthogonal_denominator(const MomentSequence& ms, int m, int j) {
  const int L = m + j;
  if (L < 0 || m < 0)
    throw std::invalid_argument("orthogonal_denominator: negative degree");
  std::vector<long double> c(ms.values.size());
  for (std::size_t k = 0; k < c.size(); ++k)
    c[k] = (k % 2 == 0) ? static_cast<long double>(ms.values[k])
                        : -static_cast<long double>(ms.values[k]);
  if (c.size() < std::size_t(L + m) + 1)
    throw std::invalid_argument("orthogonal_denominator: too few moments");
  DenominatorSolve den = solve_denominator(c, L, m);
  if (!den.ok)
    throw std::runtime_error("orthogonal_denominator: singular system");
  return assemble(c, L, m, den).ortho_poly();
}

NormalityTable normality_check(const ParameterSet& p, int m_max, int n_max) {
  NormalityTable out;
  out.m_max = m_max;
  out.n_max = n_max;
  out.normal.assign(std::size_t(m_max + 1) * std::size_t(n_max + 1), false);
  const std::vector<long double> c = series_coeffs(p, m_max + n_max);

  std::vector<PadeApproximant> entries;
  std::vector<bool> solvable(out.normal.size(), false);
  for (int m = 0; m <= m_max; ++m) {
    for (int n = 0; n <= n_max; ++n) {
      const std::size_t idx =
          std::size_t(m) * std::size_t(n_max + 1) + std::size_t(n);
      DenominatorSolve den = solve_denominator(c, m, n);
      if (!den.ok) continue;
      solvable[idx] = true;
      entries.push_back(assemble(c, m, n, den));
    }
  }
  // An entry is normal when its system is well-posed and it differs, as a
  // rational function, from every other solvable entry.
  std::vector<bool> dup(entries.size(), false);
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t k = i + 1; k < entries.size(); ++k)
      if (same_rational(entries[i], entries[k])) dup[i] = dup[k] = true;
  std::size_t e = 0;
  out.all_normal = true;
  for (std::size_t idx = 0; idx < out.normal.size(); ++idx) {
    if (solvable[idx]) {
      out.normal[idx] = !dup[e];
      ++e;
    }
    if (!out.normal[idx]) out.all_normal = false;
  }
  return out;
}

std::vector<cdouble> poly_roots(const Vec& coeffs) {
  Eigen::Index deg = coeffs.size() - 1;
  while (deg > 0 && coeffs[deg] == 0.0) --deg;
  if (deg < 1) return {};
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
  for (Eigen::Index i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < deg; ++i)
    comp(i, deg - 1) = -coeffs[i] / coeffs[deg];
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, /*computeEigenvectors=*/false);
  auto roots = std::vector<cdouble>(std::size_t(deg));
  for (Eigen::Index i = 0; i < deg; ++i) roots[std::size_t(i)] = es.eigenvalues()[i];
  return roots;
}

std::vector<double> convergence_check(const ParameterSet& p, cdouble z,
                                      int m_max, int j,
                                      const QuadratureConfig& cfg) {
  const cdouble ref = eval_stieltjes(p, z, cfg);
  std::vector<double> errs;
  errs.reserve(std::size_t(m_max));
  for (int m = 1; m <= m_max; ++m)
    errs.push_back(std::abs(pade(p, m, j).eval(z) - ref));
  return errs;
}

} // namespace stiehyp
