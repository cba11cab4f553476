#include "pal2v/paraextr.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "pal2v/core.hpp"

namespace pal2v {
namespace {

void erase_first_near(std::vector<double>& values, double target) {
  const auto it = std::find_if(values.begin(), values.end(), [target](double v) {
    return std::abs(v - target) <= kRemovalTolerance;
  });
  assert(it != values.end());
  if (it != values.end()) values.erase(it);
}

}  // namespace

NormalizedDataset normalize_dataset(std::span<const double> raw) {
  if (raw.empty()) throw DomainError("dataset must not be empty");
  for (double v : raw) {
    if (!std::isfinite(v)) throw DomainError("dataset values must be finite");
  }
  const auto [min_it, max_it] = std::minmax_element(raw.begin(), raw.end());
  NormalizedDataset out{{}, *min_it, *max_it};
  out.values.reserve(raw.size());
  const double span = out.max_raw - out.min_raw;
  for (double v : raw) {
    out.values.push_back(span == 0.0 ? 1.0 : (v - out.min_raw) / span);
  }
  return out;
}

double denormalize(double real_evidence, double min_raw, double max_raw) noexcept {
  return min_raw + real_evidence * (max_raw - min_raw);
}

double reduce(std::span<const double> values, const ReduceOptions& options) {
  if (values.empty()) throw DomainError("cannot reduce an empty dataset");
  for (double v : values) require_in_range(v, 0.0, 1.0, "dataset value");

  std::vector<double> base(values.begin(), values.end());
  while (base.size() > 1) {
    const auto [min_it, max_it] = std::minmax_element(base.begin(), base.end());
    const double highest = *max_it;
    const double lowest = *min_it;
    const double lam =
        options.lambda_rule == LambdaRule::kComplementOfMin ? 1.0 - lowest : lowest;
    const double fused = analyze(EvidencePair(highest, lam), options.ftc).real_evidence;

    erase_first_near(base, highest);
    erase_first_near(base, lowest);
    base.push_back(fused);
  }
  return base.front();
}

}  // namespace pal2v
