#include <doctest.h>

#include <stdexcept>

#include "stiehyp/verify.hpp"

using namespace stiehyp;

TEST_CASE("suite registry") {
  const std::vector<std::string>& keys = all_suites();
  CHECK(keys.size() == 11);
  CHECK(keys.front() == "moments");
}

TEST_CASE("empty selection gives an empty passing report") {
  const VerificationReport rep = verify_suite({}, 42);
  CHECK(rep.entries.empty());
  CHECK(rep.all_pass());
}

TEST_CASE("unknown selection key is rejected") {
  CHECK_THROWS_AS((void)verify_suite({"no-such-suite"}, 42),
                  std::invalid_argument);
}

TEST_CASE("reports are byte-identical across runs") {
  const VerificationReport r1 = verify_suite({"schur"}, 7);
  const VerificationReport r2 = verify_suite({"schur"}, 7);
  CHECK(r1.to_json() == r2.to_json());
  CHECK(r1.to_csv() == r2.to_csv());
}

TEST_CASE("different seeds change the drawn families but not validity") {
  const VerificationReport r1 = verify_suite({"schur"}, 1);
  const VerificationReport r2 = verify_suite({"schur"}, 2);
  CHECK(r1.all_pass());
  CHECK(r2.all_pass());
}

TEST_CASE("random families satisfy the sampled hypotheses") {
  DetRng rng(3);
  for (int i = 0; i < 50; ++i) {
    const ParameterSet p = random_family(rng, 3, 1.2, 0.8);
    const MajorizationVerdict v = majorization_verdict(p.a_real(), p.b_real());
    CHECK(v.weak_supermajorized);
    CHECK(psi_excess(p.a_real(), p.b_real()) >= 1.2 - 1e-12);
  }
  for (int i = 0; i < 50; ++i) {
    const ParameterSet p = random_majorized_q2(rng, 0.7);
    const MajorizationVerdict v = majorization_verdict(p.a_real(), p.b_real());
    CHECK(v.majorized);
  }
}
