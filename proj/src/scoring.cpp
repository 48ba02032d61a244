#include "dpl/scoring.hpp"

#include <limits>

#include "dpl/errors.hpp"

namespace dpl {

namespace {

Vec require_normalized(FeatureView feature, const char* which) {
  if (!feature)
    fail(ErrorCode::PatternMismatch,
         std::string(which) + " modality required by pattern but absent");
  return l2_normalize(*feature);
}

}  // namespace

Logits score(const PrototypeBank& bank, FeatureView image, FeatureView text,
             MissingPattern pattern) {
  const int k_classes = bank.num_classes();
  Logits out;
  out.pattern_used = pattern;
  out.values.assign(k_classes, 0.0);

  switch (pattern) {
    case MissingPattern::Complete: {
      Vec img = require_normalized(image, "image");
      Vec txt = require_normalized(text, "text");
      for (int k = 0; k < k_classes; ++k) {
        Vec wi = bank.normalized_component(
            {k, MissingPattern::Complete, Modality::Image});
        Vec wt = bank.normalized_component(
            {k, MissingPattern::Complete, Modality::Text});
        out.values[k] = 0.5 * (dot(img, wi) + dot(txt, wt));
      }
      break;
    }
    case MissingPattern::ImageMissing: {
      Vec txt = require_normalized(text, "text");
      for (int k = 0; k < k_classes; ++k) {
        Vec wt = bank.normalized_component(
            {k, MissingPattern::ImageMissing, Modality::Text});
        out.values[k] = dot(txt, wt);
      }
      break;
    }
    case MissingPattern::TextMissing: {
      Vec img = require_normalized(image, "image");
      for (int k = 0; k < k_classes; ++k) {
        Vec wi = bank.normalized_component(
            {k, MissingPattern::TextMissing, Modality::Image});
        out.values[k] = dot(img, wi);
      }
      break;
    }
  }
  return out;
}

Logits score_min_entropy(const PrototypeBank& bank, FeatureView image,
                         FeatureView text) {
  if (!image && !text)
    fail(ErrorCode::NoModalityPresent, "both modalities absent");

  Logits best;
  double best_entropy = std::numeric_limits<double>::infinity();
  bool have_best = false;
  for (MissingPattern candidate : kAllPatterns) {
    bool compatible = false;
    switch (candidate) {
      case MissingPattern::Complete: compatible = image && text; break;
      case MissingPattern::ImageMissing: compatible = text.has_value(); break;
      case MissingPattern::TextMissing: compatible = image.has_value(); break;
    }
    if (!compatible) continue;
    Logits candidate_logits = score(bank, image, text, candidate);
    double h = entropy(stable_softmax(candidate_logits.values));
    // Strict comparison keeps the earliest pattern on exact ties.
    if (!have_best || h < best_entropy) {
      best = std::move(candidate_logits);
      best_entropy = h;
      have_best = true;
    }
  }
  return best;
}

int decide_multiclass(const Logits& logits) {
  if (logits.values.empty())
    fail(ErrorCode::InvalidShape, "empty logits");
  int best = 0;
  for (int k = 1; k < static_cast<int>(logits.values.size()); ++k)
    if (logits.values[k] > logits.values[best]) best = k;
  return best;
}

std::vector<std::uint8_t> decide_multilabel(const Logits& logits,
                                            double threshold) {
  if (!(threshold > 0.0 && threshold < 1.0))
    fail(ErrorCode::InvalidThreshold,
         "threshold must lie in (0, 1), got " + std::to_string(threshold));
  std::vector<std::uint8_t> out(logits.values.size(), 0);
  for (std::size_t k = 0; k < logits.values.size(); ++k)
    out[k] = sigmoid(logits.values[k]) > threshold ? 1 : 0;
  return out;
}

}  // namespace dpl
