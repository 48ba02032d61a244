#include "dpl/rng.hpp"

#include <cmath>
#include <numbers>

namespace dpl {

double Rng::gaussian() {
  // u1 in (0, 1] so the log is finite.
  double u1 = 1.0 - uniform();
  double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n <= 1) return 0;
  // Rejection sampling: discard the biased low range.
  std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    std::uint64_t x = engine_();
    if (x >= threshold) return x % n;
  }
}

}  // namespace dpl
