#ifndef STIEHYP_RNG_HPP
#define STIEHYP_RNG_HPP

#include <cstdint>
#include <random>

namespace stiehyp {

/// Deterministic uniform sampler; mt19937_64 has a fully specified output
/// sequence, and the 53-bit mantissa mapping avoids the distribution
/// wrappers whose streams vary between standard libraries.
struct DetRng {
  std::mt19937_64 eng;

  explicit DetRng(std::uint64_t seed) : eng(seed) {}

  double uniform() { return double(eng() >> 11) * 0x1p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

} // namespace stiehyp

#endif
