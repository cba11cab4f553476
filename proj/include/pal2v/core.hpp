#pragma once

// The PAL2v calculus: evidence pair -> lattice point -> real certainty ->
// normalized outputs -> decision. Everything here is pure.

#include "pal2v/analyzer.hpp"
#include "pal2v/types.hpp"

namespace pal2v {

/// Three-state decision output.
enum class Decision { kFalse, kUndefined, kTrue };

/// 0, 0.5 or 1.
constexpr double decision_value(Decision decision) noexcept {
  switch (decision) {
    case Decision::kFalse: return 0.0;
    case Decision::kUndefined: return 0.5;
    case Decision::kTrue: return 1.0;
  }
  return 0.5;
}

/// Turns a second annotation value into unfavorable evidence: 1 - mu2.
double complement_evidence(double mu2);

LatticePoint lattice_map(const EvidencePair& pair) noexcept;

/// 1 - |dct|. Throws DomainError when |dct| > 1.
double certainty_interval(double contradiction);

struct CertaintyRecovery {
  double segment;          // distance to the nearest true/false vertex, in [0, sqrt(2)]
  double segment_clamped;  // min(segment, 1)
  double real_certainty;   // in [-1, 1]
};

CertaintyRecovery certainty_recovery(const LatticePoint& point) noexcept;

/// The lattice quantities rescaled to [0,1] so they can feed another node.
struct NormalizedOutputs {
  double evidence;                 // muE
  double contradiction_evidence;   // muECT
  double real_evidence;            // muER
  double real_certainty_interval;  // phiE
};

NormalizedOutputs normalize_outputs(const LatticePoint& point, double real_certainty) noexcept;

/// Exact three-way comparison of the real evidence degree against FtC.
Decision decide(double real_evidence, ControlFactor ftc) noexcept;

/// Every output of one node for one evidence pair.
struct AnalysisResult {
  LatticePoint point;
  double segment;
  double segment_clamped;
  double real_certainty;
  double certainty_interval;
  double evidence;
  double contradiction_evidence;
  double real_evidence;
  double real_certainty_interval;
  Decision decision;
  RegionLabel label;
  RegionFlags regions;

  bool operator==(const AnalysisResult&) const = default;
};

AnalysisResult analyze(const EvidencePair& pair, ControlFactor ftc = {});

}  // namespace pal2v
