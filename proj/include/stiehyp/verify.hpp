#ifndef STIEHYP_VERIFY_HPP
#define STIEHYP_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "stiehyp/meijer.hpp"
#include "stiehyp/params.hpp"
#include "stiehyp/rng.hpp"

namespace stiehyp {

struct ReportEntry {
  std::string suite;   // selection key, e.g. "moments"
  std::string check;   // sub-check id within the suite
  std::string status;  // "pass" | "fail" | "advisory"
  double worst = 0.0;  // worst margin / largest error of the check
  std::string detail;

  bool ok() const { return status != "fail"; }
};

struct VerificationReport {
  int schema_version = 1;
  std::uint64_t seed = 0;
  std::vector<std::string> selection;
  QuadratureConfig config;
  std::vector<ReportEntry> entries;

  bool all_pass() const;
  /// Deterministic serialization: same (selection, seed, config) gives a
  /// byte-identical string.  Runtimes are deliberately not recorded.
  std::string to_json() const;
  std::string to_csv() const;
};

/// Keys accepted by verify_suite, in report order.
const std::vector<std::string>& all_suites();

/// Runs the selected suites with seeds derived from `seed`; individual
/// failures are recorded and the run continues.  Unknown keys throw
/// std::invalid_argument.
VerificationReport verify_suite(const std::vector<std::string>& selection,
                                std::uint64_t seed,
                                const QuadratureConfig& cfg = {});

/// Thread cap: STIELTJES_HYP_THREADS when set, else hardware concurrency.
std::size_t thread_budget();

/// Runs body(i) for i in [0, n) on up to thread_budget() threads.  The
/// caller owns result ordering (write into slot i).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

/// Random family with B obtained from sorted A by nonnegative increments,
/// so B weakly supermajorizes A; total increment at least psi_min.
ParameterSet random_family(DetRng& rng, Eigen::Index q, double psi_min,
                           double sigma);
/// q = 2 family with psi = 0 (spread transfer a -> b), B majorizes A.
ParameterSet random_majorized_q2(DetRng& rng, double sigma);

} // namespace stiehyp

#endif
