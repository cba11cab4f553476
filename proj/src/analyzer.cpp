#include "pal2v/analyzer.hpp"

#include <algorithm>
#include <cmath>

namespace pal2v {
namespace {

struct Names {
  std::string_view ascii;
  std::string_view unicode;
};

constexpr std::array<Names, kRegionCount> kNames = {{
    {"t", "t"},
    {"f", "f"},
    {"T", "⊤"},
    {"l", "⊥"},
    {"QT-t", "Q⊤→t"},
    {"QT-f", "Q⊤→f"},
    {"Qt-T", "Qt→⊤"},
    {"Qf-T", "Qf→⊤"},
    {"Qt-l", "Qt→⊥"},
    {"Qf-l", "Qf→⊥"},
    {"Ql-t", "Q⊥→t"},
    {"Ql-f", "Q⊥→f"},
    {"I", "I"},
}};

}  // namespace

std::string_view ascii_name(RegionLabel label) noexcept {
  return kNames[static_cast<std::size_t>(label)].ascii;
}

std::string_view unicode_name(RegionLabel label) noexcept {
  return kNames[static_cast<std::size_t>(label)].unicode;
}

std::optional<RegionLabel> parse_region_label(std::string_view name) noexcept {
  for (RegionLabel label : kAllRegions) {
    if (ascii_name(label) == name || unicode_name(label) == name) return label;
  }
  return std::nullopt;
}

std::size_t RegionFlags::count() const noexcept {
  return static_cast<std::size_t>(std::count(flags_.begin(), flags_.end(), true));
}

RegionGeometry region_geometry(ControlFactor ftc) noexcept {
  return {ftc.value(), 1.0 - ftc.value()};
}

RegionLabel classify(const LatticePoint& point, ControlFactor ftc) noexcept {
  const double dc = point.certainty();
  const double dct = point.contradiction();
  const RegionGeometry geometry = region_geometry(ftc);

  if (std::abs(dc) <= kEpsNum && std::abs(dct) <= kEpsNum) return RegionLabel::kUndefined;
  if (dc >= geometry.certainty_boundary) return RegionLabel::kTrue;
  if (dc <= -geometry.certainty_boundary) return RegionLabel::kFalse;
  if (dct >= geometry.contradiction_boundary) return RegionLabel::kInconsistent;
  if (dct <= -geometry.contradiction_boundary) return RegionLabel::kParacomplete;

  const bool toward_true = dc >= 0.0;
  const bool toward_inconsistent = dct >= 0.0;
  if (std::abs(dct) > std::abs(dc)) {
    if (toward_inconsistent) {
      return toward_true ? RegionLabel::kQuasiInconsistentToTrue
                         : RegionLabel::kQuasiInconsistentToFalse;
    }
    return toward_true ? RegionLabel::kQuasiParacompleteToTrue
                       : RegionLabel::kQuasiParacompleteToFalse;
  }
  if (toward_true) {
    return toward_inconsistent ? RegionLabel::kQuasiTrueToInconsistent
                               : RegionLabel::kQuasiTrueToParacomplete;
  }
  return toward_inconsistent ? RegionLabel::kQuasiFalseToInconsistent
                             : RegionLabel::kQuasiFalseToParacomplete;
}

RegionFlags region_flags(const LatticePoint& point, ControlFactor ftc) noexcept {
  RegionFlags flags;
  flags.set(classify(point, ftc), true);
  return flags;
}

}  // namespace pal2v
