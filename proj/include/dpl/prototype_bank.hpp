#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>

#include "dpl/numerics.hpp"

namespace dpl {

/// Which modalities of a sample are observed. The ordering
/// Complete < ImageMissing < TextMissing is load-bearing: it breaks ties in
/// minimum-entropy selection and fixes iteration order everywhere.
enum class MissingPattern : int { Complete = 0, ImageMissing = 1, TextMissing = 2 };

enum class Modality : int { Image = 0, Text = 1 };

inline constexpr std::array<MissingPattern, 3> kAllPatterns = {
    MissingPattern::Complete, MissingPattern::ImageMissing,
    MissingPattern::TextMissing};

inline constexpr std::array<Modality, 2> kAllModalities = {Modality::Image,
                                                           Modality::Text};

const char* to_string(MissingPattern p);
const char* to_string(Modality m);

/// Addresses one of the 6 components a class owns (3 patterns x 2 modalities).
struct ComponentKey {
  int class_index = 0;
  MissingPattern pattern = MissingPattern::Complete;
  Modality modality = Modality::Image;
};

/// Per-class, per-missing-pattern, per-modality prototype parameters.
///
/// Raw parameters are stored unnormalized and normalized on read, so
/// optimizer updates stay unconstrained. Storage is one flat array in
/// (class, pattern, modality, dim) row-major order, which is also the
/// checkpoint layout and the gradient layout used by the losses.
class PrototypeBank {
 public:
  static constexpr int kComponentsPerClass = 6;

  /// Zero-initialized bank (used by deserialization). Throws InvalidShape.
  PrototypeBank(int num_classes, int dim);

  int num_classes() const noexcept { return num_classes_; }
  int dim() const noexcept { return dim_; }

  std::size_t param_count() const noexcept { return params_.size(); }
  Vec& params() noexcept { return params_; }
  const Vec& params() const noexcept { return params_; }

  /// Flat offset of a component's first entry.
  std::size_t offset(int class_index, MissingPattern pattern,
                     Modality modality) const;

  std::span<double> component(int class_index, MissingPattern pattern,
                              Modality modality);
  std::span<const double> component(int class_index, MissingPattern pattern,
                                    Modality modality) const;

  /// L2-normalized copy of one raw component. Throws KeyOutOfRange /
  /// NormTooSmall. Never mutates the bank.
  Vec normalized_component(const ComponentKey& key) const;

  /// Concatenates the two raw modality components of (class, pattern) and
  /// normalizes the whole 2d vector. Only the un-decomposed ablation head
  /// scores with whole-vector normalization; the regular path never does.
  Vec concat_normalized(int class_index, MissingPattern pattern) const;

  void save(const std::filesystem::path& path) const;
  static PrototypeBank load(const std::filesystem::path& path);

 private:
  void check_key(int class_index) const;

  int num_classes_;
  int dim_;
  Vec params_;
};

/// 6K component vectors drawn i.i.d. uniform on the unit sphere (Gaussian
/// entries, then normalized). Bit-reproducible given (K, d, seed).
PrototypeBank init_bank(int num_classes, int dim, std::uint64_t seed);

}  // namespace dpl
