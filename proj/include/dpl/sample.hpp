#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dpl/numerics.hpp"
#include "dpl/prototype_bank.hpp"

namespace dpl {

enum class Task : int { Multiclass = 0, Multilabel = 1 };

const char* to_string(Task t);

/// Non-owning view of a possibly-absent modality feature. Absence is
/// structural: a missing modality is nullopt, never a zero vector, so nothing
/// downstream can accidentally normalize a zero-pad.
using FeatureView = std::optional<std::span<const double>>;

inline FeatureView as_view(const std::optional<Vec>& feature) {
  if (!feature) return std::nullopt;
  return std::span<const double>(*feature);
}

/// One instance: per-modality features, the observed missing pattern, and a
/// label (integer for multiclass, 0/1 mask for multilabel).
struct Sample {
  std::optional<Vec> image_feat;
  std::optional<Vec> text_feat;
  MissingPattern pattern = MissingPattern::Complete;
  int label = 0;
  std::vector<std::uint8_t> label_mask;

  /// Pattern agrees with presence flags (Complete <=> both present, etc.).
  bool consistent() const {
    switch (pattern) {
      case MissingPattern::Complete: return image_feat && text_feat;
      case MissingPattern::ImageMissing: return !image_feat && text_feat;
      case MissingPattern::TextMissing: return image_feat && !text_feat;
    }
    return false;
  }
};

}  // namespace dpl
