#ifndef STIEHYP_PARAMS_HPP
#define STIEHYP_PARAMS_HPP

#include <Eigen/Dense>
#include <complex>
#include <string>

namespace stiehyp {

using cdouble = std::complex<double>;
using Vec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;

/// Parameters (sigma, A; B) of {q+1}F{q}(sigma, A; B; z), q = A.size().
struct ParameterSet {
  cdouble sigma;
  CVec a; // upper parameters a_1..a_q
  CVec b; // lower parameters b_1..b_q

  ParameterSet() = default;
  ParameterSet(cdouble sigma_, CVec a_, CVec b_);
  ParameterSet(double sigma_, std::initializer_list<double> a_,
               std::initializer_list<double> b_);

  Eigen::Index q() const { return a.size(); }
  bool all_real() const;
  /// Real views; valid only when all_real().
  Vec a_real() const { return a.real(); }
  Vec b_real() const { return b.real(); }

  /// Shift every upper and lower parameter by delta.
  ParameterSet shifted(double delta) const;
};

struct MajorizationVerdict {
  bool weak_supermajorized = false; // B prec^W A
  bool majorized = false;           // B prec A (adds psi == 0)
  cdouble psi{0.0, 0.0};
  bool chain_holds = false;
  std::string reason; // set when a precondition fails
};

/// Rising factorial (a)_n; log-space beyond n = 64 to avoid overflow.
cdouble pochhammer(cdouble a, unsigned n);

/// psi = sum(b_k - a_k); throws on length mismatch.
cdouble psi_excess(const CVec& a, const CVec& b);
double psi_excess(const Vec& a, const Vec& b);

/// Sorts copies of A, B ascending and checks positivity plus all prefix-sum
/// inequalities; majorized additionally requires psi == 0.
MajorizationVerdict majorization_verdict(const Vec& a, const Vec& b);

/// k-th elementary symmetric polynomial, stable prefix recurrence; e_0 = 1.
double elementary_symmetric(const Vec& x, int k);

/// e_k(B)/e_k(A) >= e_{k-1}(B)/e_{k-1}(A) for k = 1..q and e_1(B)/e_1(A) >= 1,
/// evaluated via cross-multiplication.
bool chain_condition(const Vec& a, const Vec& b);

} // namespace stiehyp

#endif
