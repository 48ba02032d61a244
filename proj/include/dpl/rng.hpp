#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace dpl {

/// splitmix64 finalizer step. Small, well-mixed, and fully portable; used to
/// derive independent child seeds from a master seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Derives child_seed = mix(master, role, index). Distinct roles give
/// independent streams for the same master seed.
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t role,
                              std::uint64_t index) {
  return splitmix64(splitmix64(splitmix64(master) ^ role) ^ index);
}

/// Stream role tags for mix_seed. Arbitrary distinct constants.
namespace seed_role {
inline constexpr std::uint64_t kRun = 0x52554E00ULL;           // per-seed run
inline constexpr std::uint64_t kSyntheticMeans = 0x4D45414EULL;
inline constexpr std::uint64_t kSyntheticNoise = 0x4E4F4953ULL;
inline constexpr std::uint64_t kData = 0x44415441ULL;
inline constexpr std::uint64_t kSplit = 0x53504C54ULL;
inline constexpr std::uint64_t kTrainMissing = 0x54524D53ULL;
inline constexpr std::uint64_t kTestMissing = 0x54454D53ULL;
inline constexpr std::uint64_t kHeadInit = 0x494E4954ULL;
inline constexpr std::uint64_t kTrainLoop = 0x4C4F4F50ULL;
inline constexpr std::uint64_t kShuffle = 0x53484046ULL;
}  // namespace seed_role

/// Owned deterministic generator. mt19937_64 output is pinned by the
/// standard; uniform/gaussian/integer draws are implemented here rather than
/// through std distributions, whose sequences are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller. Two uniforms per draw; no cached pair so
  /// the stream position is a pure function of the number of calls.
  double gaussian();

  /// Unbiased integer in [0, n). n must be >= 1.
  std::uint64_t below(std::uint64_t n);

  /// Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& values) {
    if (values.size() < 2) return;
    for (std::size_t i = values.size() - 1; i > 0; --i) {
      std::size_t j = static_cast<std::size_t>(below(i + 1));
      std::swap(values[i], values[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace dpl
