#pragma once

#include <stdexcept>
#include <string>

namespace pal2v {

/// Absolute tolerance for identity checks on lattice quantities.
inline constexpr double kEpsNum = 1e-12;

/// A value fell outside the range its quantity is defined on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Annotation (mu, lam): favorable and unfavorable evidence degrees, each in [0,1].
class EvidencePair {
 public:
  EvidencePair(double mu, double lam);

  double mu() const noexcept { return mu_; }
  double lam() const noexcept { return lam_; }

  bool operator==(const EvidencePair&) const = default;

 private:
  double mu_;
  double lam_;
};

/// Control factor FtC in [0,1]. Shapes the region geometry and thresholds the decision output.
class ControlFactor {
 public:
  static constexpr double kDefault = 0.5;

  constexpr ControlFactor() noexcept = default;
  explicit ControlFactor(double ftc);

  double value() const noexcept { return ftc_; }

  bool operator==(const ControlFactor&) const = default;

 private:
  double ftc_ = kDefault;
};

/// Point in the rotated unit square: certainty degree (horizontal) and
/// contradiction degree (vertical), both in [-1,1].
class LatticePoint {
 public:
  LatticePoint(double certainty, double contradiction);

  double certainty() const noexcept { return certainty_; }
  double contradiction() const noexcept { return contradiction_; }

  bool operator==(const LatticePoint&) const = default;

 private:
  double certainty_;
  double contradiction_;
};

// Throws DomainError naming `what` unless lo <= value <= hi (NaN is rejected).
void require_in_range(double value, double lo, double hi, const std::string& what);

}  // namespace pal2v
