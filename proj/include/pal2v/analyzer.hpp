#pragma once

// Para-analyzer: partitions the lattice into 12 logical states plus the
// undefined center, with boundaries placed by the control factor.

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

#include "pal2v/types.hpp"

namespace pal2v {

// Declaration order is the canonical serialization order.
enum class RegionLabel : std::size_t {
  kTrue,                         // t
  kFalse,                        // f
  kInconsistent,                 // ⊤
  kParacomplete,                 // ⊥
  kQuasiInconsistentToTrue,      // Q⊤→t
  kQuasiInconsistentToFalse,     // Q⊤→f
  kQuasiTrueToInconsistent,      // Qt→⊤
  kQuasiFalseToInconsistent,     // Qf→⊤
  kQuasiTrueToParacomplete,      // Qt→⊥
  kQuasiFalseToParacomplete,     // Qf→⊥
  kQuasiParacompleteToTrue,      // Q⊥→t
  kQuasiParacompleteToFalse,     // Q⊥→f
  kUndefined,                    // I
};

inline constexpr std::size_t kRegionCount = 13;

inline constexpr std::array<RegionLabel, kRegionCount> kAllRegions = {
    RegionLabel::kTrue,
    RegionLabel::kFalse,
    RegionLabel::kInconsistent,
    RegionLabel::kParacomplete,
    RegionLabel::kQuasiInconsistentToTrue,
    RegionLabel::kQuasiInconsistentToFalse,
    RegionLabel::kQuasiTrueToInconsistent,
    RegionLabel::kQuasiFalseToInconsistent,
    RegionLabel::kQuasiTrueToParacomplete,
    RegionLabel::kQuasiFalseToParacomplete,
    RegionLabel::kQuasiParacompleteToTrue,
    RegionLabel::kQuasiParacompleteToFalse,
    RegionLabel::kUndefined,
};

/// ASCII spelling used in transcripts: T stands for ⊤ and l for ⊥.
std::string_view ascii_name(RegionLabel label) noexcept;
std::string_view unicode_name(RegionLabel label) noexcept;

/// Accepts either the ASCII or the Unicode spelling.
std::optional<RegionLabel> parse_region_label(std::string_view name) noexcept;

/// One boolean per region, indexed by RegionLabel.
class RegionFlags {
 public:
  bool operator[](RegionLabel label) const noexcept { return flags_[index(label)]; }
  void set(RegionLabel label, bool value) noexcept { flags_[index(label)] = value; }
  std::size_t count() const noexcept;

  bool operator==(const RegionFlags&) const = default;

 private:
  static constexpr std::size_t index(RegionLabel label) noexcept {
    return static_cast<std::size_t>(label);
  }
  std::array<bool, kRegionCount> flags_{};
};

/// Extreme-region thresholds. The certainty boundary equals FtC and the
/// contradiction boundary its complement, so they always sum to one.
struct RegionGeometry {
  double certainty_boundary;
  double contradiction_boundary;
};

RegionGeometry region_geometry(ControlFactor ftc) noexcept;

/// Total classification. Extreme regions are closed at their boundary; inner
/// points go to the contradiction-dominant state only when |dct| > |dc|.
RegionLabel classify(const LatticePoint& point, ControlFactor ftc = {}) noexcept;

RegionFlags region_flags(const LatticePoint& point, ControlFactor ftc = {}) noexcept;

}  // namespace pal2v
