#include "dpl/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dpl/errors.hpp"

namespace dpl {

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size())
    fail(ErrorCode::ShapeMismatch, "dot on vectors of unequal length");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double l2_norm(std::span<const double> v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return std::sqrt(acc);
}

Vec l2_normalize(std::span<const double> v) {
  double n = l2_norm(v);
  if (!(n > kNormEps))
    fail(ErrorCode::NormTooSmall, "vector norm " + std::to_string(n));
  Vec out(v.begin(), v.end());
  for (double& x : out) x /= n;
  return out;
}

double log_sum_exp(std::span<const double> z) {
  double m = -std::numeric_limits<double>::infinity();
  for (double x : z) m = std::max(m, x);
  double acc = 0.0;
  for (double x : z) acc += std::exp(x - m);
  return m + std::log(acc);
}

Vec stable_softmax(std::span<const double> z) {
  double m = -std::numeric_limits<double>::infinity();
  for (double x : z) m = std::max(m, x);
  Vec out(z.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    out[i] = std::exp(z[i] - m);
    sum += out[i];
  }
  for (double& x : out) x /= sum;
  return out;
}

double entropy(std::span<const double> p) {
  double sum = 0.0;
  for (double x : p) {
    if (x < 0.0)
      fail(ErrorCode::InvalidDistribution, "negative probability");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    fail(ErrorCode::InvalidDistribution,
         "probabilities sum to " + std::to_string(sum));
  double h = 0.0;
  for (double x : p)
    if (x > 0.0) h -= x * std::log(x);
  return h;
}

double sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  double e = std::exp(x);
  return e / (1.0 + e);
}

double log_sigmoid(double x) {
  // -log(1 + exp(-x)) without overflow on either tail.
  if (x >= 0.0) return -std::log1p(std::exp(-x));
  return x - std::log1p(std::exp(x));
}

bool all_finite(std::span<const double> v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

}  // namespace dpl
