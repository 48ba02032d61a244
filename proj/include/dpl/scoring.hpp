#pragma once

#include <vector>

#include "dpl/prototype_bank.hpp"
#include "dpl/sample.hpp"

namespace dpl {

/// Class logits: cosine similarities in [-1, 1], plus the pattern whose
/// prototypes produced them.
struct Logits {
  Vec values;
  MissingPattern pattern_used = MissingPattern::Complete;
};

/// Cosine logits against the pattern's prototypes:
///   complete:      z_k = (img . w_k[c,I] + txt . w_k[c,T]) / 2
///   image missing: z_k = txt . w_k[rI,T]
///   text missing:  z_k = img . w_k[rT,I]
/// with features and prototype components each L2-normalized on their own.
/// A modality the pattern does not score is never read, so absent content
/// cannot influence the output. Throws PatternMismatch when a modality the
/// pattern needs is absent.
Logits score(const PrototypeBank& bank, FeatureView image, FeatureView text,
             MissingPattern pattern);

/// Fallback used when missing-awareness is disabled: scores every pattern
/// compatible with the available modalities (Complete needs both; the
/// single-modality patterns need only the modality they score), and returns
/// the candidate whose softmax distribution has minimum entropy. Exact ties
/// go to the earlier pattern in Complete < ImageMissing < TextMissing.
/// Throws NoModalityPresent when both modalities are absent.
Logits score_min_entropy(const PrototypeBank& bank, FeatureView image,
                         FeatureView text);

/// argmax, ties to the smallest index.
int decide_multiclass(const Logits& logits);

/// Label k assigned iff sigmoid(z_k) > threshold (strict). Threshold must lie
/// in (0, 1); throws InvalidThreshold otherwise.
std::vector<std::uint8_t> decide_multilabel(const Logits& logits,
                                            double threshold = 0.5);

}  // namespace dpl
