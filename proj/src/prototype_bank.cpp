#include "dpl/prototype_bank.hpp"

#include <fstream>

#include "binary_io.hpp"
#include "dpl/errors.hpp"
#include "dpl/rng.hpp"

namespace dpl {

namespace {
constexpr char kBankMagic[4] = {'D', 'P', 'L', 'B'};
constexpr std::uint32_t kBankVersion = 1;
}  // namespace

const char* to_string(MissingPattern p) {
  switch (p) {
    case MissingPattern::Complete: return "complete";
    case MissingPattern::ImageMissing: return "image_missing";
    case MissingPattern::TextMissing: return "text_missing";
  }
  return "?";
}

const char* to_string(Modality m) {
  return m == Modality::Image ? "image" : "text";
}

PrototypeBank::PrototypeBank(int num_classes, int dim)
    : num_classes_(num_classes), dim_(dim) {
  if (num_classes < 1 || dim < 1)
    fail(ErrorCode::InvalidShape,
         "bank needs K >= 1 and d >= 1, got K=" + std::to_string(num_classes) +
             " d=" + std::to_string(dim));
  params_.assign(static_cast<std::size_t>(num_classes) * kComponentsPerClass *
                     dim,
                 0.0);
}

void PrototypeBank::check_key(int class_index) const {
  if (class_index < 0 || class_index >= num_classes_)
    fail(ErrorCode::KeyOutOfRange,
         "class index " + std::to_string(class_index) + " for K=" +
             std::to_string(num_classes_));
}

std::size_t PrototypeBank::offset(int class_index, MissingPattern pattern,
                                  Modality modality) const {
  check_key(class_index);
  std::size_t component =
      static_cast<std::size_t>(class_index) * 3 + static_cast<int>(pattern);
  return (component * 2 + static_cast<int>(modality)) *
         static_cast<std::size_t>(dim_);
}

std::span<double> PrototypeBank::component(int class_index,
                                           MissingPattern pattern,
                                           Modality modality) {
  return {params_.data() + offset(class_index, pattern, modality),
          static_cast<std::size_t>(dim_)};
}

std::span<const double> PrototypeBank::component(int class_index,
                                                 MissingPattern pattern,
                                                 Modality modality) const {
  return {params_.data() + offset(class_index, pattern, modality),
          static_cast<std::size_t>(dim_)};
}

Vec PrototypeBank::normalized_component(const ComponentKey& key) const {
  return l2_normalize(component(key.class_index, key.pattern, key.modality));
}

Vec PrototypeBank::concat_normalized(int class_index,
                                     MissingPattern pattern) const {
  auto img = component(class_index, pattern, Modality::Image);
  auto txt = component(class_index, pattern, Modality::Text);
  Vec joint;
  joint.reserve(img.size() + txt.size());
  joint.insert(joint.end(), img.begin(), img.end());
  joint.insert(joint.end(), txt.begin(), txt.end());
  return l2_normalize(joint);
}

void PrototypeBank::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::IoFailure, "cannot open " + path.string());
  io::write_magic(out, kBankMagic);
  io::write_le<std::uint32_t>(out, kBankVersion);
  io::write_le<std::uint32_t>(out, static_cast<std::uint32_t>(num_classes_));
  io::write_le<std::uint32_t>(out, static_cast<std::uint32_t>(dim_));
  for (double x : params_) io::write_le<double>(out, x);
  if (!out) fail(ErrorCode::IoFailure, "short write to " + path.string());
}

PrototypeBank PrototypeBank::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoFailure, "cannot open " + path.string());
  io::expect_magic(in, kBankMagic, "DPLB");
  auto version = io::read_le<std::uint32_t>(in);
  if (version != kBankVersion)
    fail(ErrorCode::VersionMismatch,
         "DPLB version " + std::to_string(version));
  auto k = io::read_le<std::uint32_t>(in);
  auto d = io::read_le<std::uint32_t>(in);
  if (k < 1 || d < 1)
    fail(ErrorCode::InconsistentHeader, "DPLB header with K=0 or d=0");
  PrototypeBank bank(static_cast<int>(k), static_cast<int>(d));
  for (double& x : bank.params_) x = io::read_le<double>(in);
  // Reject trailing garbage so a checkpoint is exactly its header's promise.
  in.peek();
  if (!in.eof())
    fail(ErrorCode::InconsistentHeader, "trailing bytes after bank payload");
  return bank;
}

PrototypeBank init_bank(int num_classes, int dim, std::uint64_t seed) {
  PrototypeBank bank(num_classes, dim);
  Rng rng(seed);
  for (int k = 0; k < num_classes; ++k) {
    for (MissingPattern p : kAllPatterns) {
      for (Modality m : kAllModalities) {
        auto comp = bank.component(k, p, m);
        double norm_sq = 0.0;
        for (double& x : comp) {
          x = rng.gaussian();
          norm_sq += x * x;
        }
        double norm = std::sqrt(norm_sq);
        // d Gaussian entries are zero-norm with probability 0; regenerating
        // would complicate the stream contract, so treat it as a hard error.
        if (!(norm > kNormEps))
          fail(ErrorCode::NormTooSmall, "degenerate init draw");
        for (double& x : comp) x /= norm;
      }
    }
  }
  return bank;
}

}  // namespace dpl
