#pragma once

// Contradiction extraction over a dataset: the extremes are fused through a
// PAN and replaced by the node's real evidence degree until one value remains.

#include <span>
#include <vector>

#include "pal2v/types.hpp"

namespace pal2v {

/// Values rescaled to [0,1], plus the raw extremes needed to map back.
struct NormalizedDataset {
  std::vector<double> values;
  double min_raw;
  double max_raw;
};

/// Min-max normalization. A constant dataset maps to all ones.
NormalizedDataset normalize_dataset(std::span<const double> raw);

/// min_raw + real_evidence * (max_raw - min_raw)
double denormalize(double real_evidence, double min_raw, double max_raw) noexcept;

/// How the unfavorable evidence is taken from the running minimum.
enum class LambdaRule {
  kComplementOfMin,  // lam = 1 - min; reproduces the published delay example
  kMin,              // lam = min; literal flowchart reading, kept for comparison only
};

/// Tolerance used to locate the extremes when removing them.
inline constexpr double kRemovalTolerance = 1e-9;

struct ReduceOptions {
  // Only thresholds the decision output, so it never changes the reduced value.
  ControlFactor ftc{};
  LambdaRule lambda_rule = LambdaRule::kComplementOfMin;
};

/// Reduces a non-empty list of values in [0,1] to a single value. Each step
/// removes one instance of the max and one of the min and appends the fused
/// real evidence degree, so the list shrinks by exactly one.
double reduce(std::span<const double> values, const ReduceOptions& options = {});

}  // namespace pal2v
