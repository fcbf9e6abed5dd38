// Acceptance gate: one pass/fail line per criterion, exit 0 only if all
// criteria hold.  Criteria 1-13 are judged from a single full verification
// run at seed 42; criterion 14 reruns the suite and compares reports byte
// for byte.

#include <cstdio>
#include <string>
#include <vector>

#include "stiehyp/verify.hpp"

namespace {

using stiehyp::ReportEntry;
using stiehyp::VerificationReport;

const ReportEntry* find(const VerificationReport& rep, const std::string& suite,
                        const std::string& check) {
  for (const ReportEntry& e : rep.entries)
    if (e.suite == suite && e.check == check) return &e;
  return nullptr;
}

// All named checks must exist and not be failed.
bool checks_ok(const VerificationReport& rep, const std::string& suite,
               const std::vector<std::string>& checks) {
  for (const std::string& c : checks) {
    const ReportEntry* e = find(rep, suite, c);
    if (e == nullptr || !e->ok()) return false;
  }
  return true;
}

bool suite_ok(const VerificationReport& rep, const std::string& suite) {
  bool seen = false;
  for (const ReportEntry& e : rep.entries) {
    if (e.suite != suite) continue;
    seen = true;
    if (!e.ok()) return false;
  }
  return seen;
}

int report_line(int n, bool pass, const char* text) {
  std::printf("%s  criterion %2d: %s\n", pass ? "PASS" : "FAIL", n, text);
  return pass ? 0 : 1;
}

} // namespace

int main() {
  const std::uint64_t seed = 42;
  const VerificationReport rep = stiehyp::verify_suite(stiehyp::all_suites(),
                                                       seed);

  int failures = 0;
  failures += report_line(
      1, checks_ok(rep, "moments", {"mellin-moments"}),
      "moment identity: quadrature vs gamma-ratio closed form");
  failures += report_line(
      2,
      checks_ok(rep, "moments",
                {"closed-form-kernels", "contour-vs-monte-carlo"}),
      "closed-form kernels q=1,2 and q=3 Monte Carlo oracle");
  failures += report_line(
      3,
      checks_ok(rep, "vanish",
                {"kernel-vanishes-beyond-one", "truncation-residual-decay"}),
      "kernel vanishes for x > 1 with decaying truncation residual");
  failures += report_line(4, suite_ok(rep, "nonneg"),
                          "kernel nonnegativity on (0, 1)");
  failures += report_line(
      5,
      checks_ok(rep, "representation",
                {"integral-vs-series", "continuation-log"}),
      "integral representation vs series, plus log continuation");
  failures += report_line(6, suite_ok(rep, "order"),
                          "exact Stieltjes order via doubling ratios");
  failures += report_line(7, suite_ok(rep, "limit-measure"),
                          "psi = 0 limit measure reconstruction (q = 2)");
  failures += report_line(
      8, checks_ok(rep, "corollary1", {"power-denominator", "gauss-fast-path"}),
      "power-denominator representation at sigma >= 2");
  failures += report_line(
      9,
      checks_ok(rep, "inequalities",
                {"ratio-monotone", "lower-bound", "upper-bound",
                 "log-convexity"}),
      "monotonicity, bounds and log-convexity inequalities");
  failures += report_line(
      10,
      checks_ok(rep, "schur",
                {"majorization-implies-chain", "newton-inequality"}),
      "supermajorization chain condition and Newton inequality");
  failures += report_line(
      11,
      checks_ok(rep, "pade",
                {"table-normal", "order-condition", "denominator-orthogonality",
                 "convergence-ln2", "ortho-roots-in-unit-interval"}),
      "Pade table normality, order condition, orthogonality, convergence");
  failures += report_line(12, suite_ok(rep, "mapping"),
                          "sector mapping, sampled univalence, starlikeness");
  failures += report_line(
      13, checks_ok(rep, "moments", {"laplace-gamma-ratio"}),
      "Laplace-type gamma-ratio identity");

  const VerificationReport rerun =
      stiehyp::verify_suite(stiehyp::all_suites(), seed);
  failures += report_line(14, rep.to_json() == rerun.to_json(),
                          "byte-identical reports across reruns at seed 42");

  std::printf("%d of 14 criteria passed\n", 14 - failures);
  return failures == 0 ? 0 : 1;
}
