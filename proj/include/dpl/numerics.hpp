#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace dpl {

/// Dense real vector. All library arithmetic is 64-bit.
using Vec = std::vector<double>;

/// Norms below this are treated as degenerate (NormTooSmall).
inline constexpr double kNormEps = 1e-12;

double dot(std::span<const double> a, std::span<const double> b);
double l2_norm(std::span<const double> v);

/// v / ||v||. Throws NormTooSmall when ||v|| <= kNormEps.
Vec l2_normalize(std::span<const double> v);

double log_sum_exp(std::span<const double> z);

/// Max-shifted softmax; entries sum to 1, never overflows for finite input.
Vec stable_softmax(std::span<const double> z);

/// Shannon entropy -sum p ln p with 0 ln 0 := 0. Requires p to be a
/// probability vector (entries >= 0, sum within 1e-9 of 1), otherwise throws
/// InvalidDistribution.
double entropy(std::span<const double> p);

double sigmoid(double x);

/// log(sigmoid(x)), computed without overflow for large |x|.
double log_sigmoid(double x);

bool all_finite(std::span<const double> v);

}  // namespace dpl
