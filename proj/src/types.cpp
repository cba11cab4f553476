#include "pal2v/types.hpp"

#include <fmt/format.h>

namespace pal2v {

void require_in_range(double value, double lo, double hi, const std::string& what) {
  if (!(value >= lo && value <= hi)) {
    throw DomainError(fmt::format("{} must be in [{},{}] (got {})", what, lo, hi, value));
  }
}

EvidencePair::EvidencePair(double mu, double lam) : mu_(mu), lam_(lam) {
  require_in_range(mu, 0.0, 1.0, "mu");
  require_in_range(lam, 0.0, 1.0, "lam");
}

ControlFactor::ControlFactor(double ftc) : ftc_(ftc) {
  require_in_range(ftc, 0.0, 1.0, "FtC");
}

LatticePoint::LatticePoint(double certainty, double contradiction)
    : certainty_(certainty), contradiction_(contradiction) {
  require_in_range(certainty, -1.0, 1.0, "dc");
  require_in_range(contradiction, -1.0, 1.0, "dct");
}

}  // namespace pal2v
