#include "pal2v/core.hpp"

#include <algorithm>
#include <cmath>

namespace pal2v {

double complement_evidence(double mu2) {
  require_in_range(mu2, 0.0, 1.0, "mu2");
  return 1.0 - mu2;
}

LatticePoint lattice_map(const EvidencePair& pair) noexcept {
  return {pair.mu() - pair.lam(), pair.mu() + pair.lam() - 1.0};
}

double certainty_interval(double contradiction) {
  require_in_range(contradiction, -1.0, 1.0, "dct");
  return 1.0 - std::abs(contradiction);
}

CertaintyRecovery certainty_recovery(const LatticePoint& point) noexcept {
  const double dc = point.certainty();
  const double gap = 1.0 - std::abs(dc);
  const double segment = std::sqrt(gap * gap + point.contradiction() * point.contradiction());
  const double clamped = std::min(segment, 1.0);

  double real_certainty = 0.0;
  if (dc > 0.0) {
    real_certainty = 1.0 - clamped;
  } else if (dc < 0.0) {
    real_certainty = clamped - 1.0;
  }
  return {segment, clamped, real_certainty};
}

NormalizedOutputs normalize_outputs(const LatticePoint& point, double real_certainty) noexcept {
  NormalizedOutputs out;
  out.evidence = (point.certainty() + 1.0) / 2.0;
  out.contradiction_evidence = (point.contradiction() + 1.0) / 2.0;
  out.real_evidence = (real_certainty + 1.0) / 2.0;
  out.real_certainty_interval = 1.0 - std::abs(2.0 * out.contradiction_evidence - 1.0);
  return out;
}

Decision decide(double real_evidence, ControlFactor ftc) noexcept {
  if (real_evidence > ftc.value()) return Decision::kTrue;
  if (real_evidence < ftc.value()) return Decision::kFalse;
  return Decision::kUndefined;
}

AnalysisResult analyze(const EvidencePair& pair, ControlFactor ftc) {
  const LatticePoint point = lattice_map(pair);
  const CertaintyRecovery recovery = certainty_recovery(point);
  const NormalizedOutputs normalized = normalize_outputs(point, recovery.real_certainty);
  return AnalysisResult{
      .point = point,
      .segment = recovery.segment,
      .segment_clamped = recovery.segment_clamped,
      .real_certainty = recovery.real_certainty,
      .certainty_interval = certainty_interval(point.contradiction()),
      .evidence = normalized.evidence,
      .contradiction_evidence = normalized.contradiction_evidence,
      .real_evidence = normalized.real_evidence,
      .real_certainty_interval = normalized.real_certainty_interval,
      .decision = decide(normalized.real_evidence, ftc),
      .label = classify(point, ftc),
      .regions = region_flags(point, ftc),
  };
}

}  // namespace pal2v
