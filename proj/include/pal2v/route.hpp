#pragma once

// Best-route selection between two routes through a four-node PAN network:
//
//   PAN1(mu1, lam1) ----------------> PAN3(mu3, lam = PAN1.muER)
//   PAN2(mu2, lam2) --+                 |
//                     +-> PAN4(mu = PAN3.muER, lam = PAN2.muER) -> decision
//
// A decision of 1 selects route A, 0 selects route B, 0.5 keeps the current one.

#include <string_view>

#include "pal2v/core.hpp"
#include "pal2v/pan_graph.hpp"

namespace pal2v {

struct RouteMetrics {
  double rx_jitter_ms;
  double tx_jitter_ms;
  double round_trip_ms;
  double processing_pct;
  double packet_loss_pct;
};

/// Throws DomainError for negative metrics or percentages above 100.
void validate(const RouteMetrics& metrics);

struct RouteEvidence {
  double mu1;   // complement of reception jitter
  double lam1;  // transmission jitter
  double mu2;   // complement of round-trip time
  double lam2;  // processing consumption
  double mu3;   // complement of packet loss
};

enum class Calibration {
  kPublished,  // reference constants, reproduced as published (offsets 0.001, spans 99.9 and 199.999)
  kConsistent,  // jitter in [0.001, 100] ms, RTT in [0.001, 200] ms with matching offsets and spans
};

/// Maps raw metrics to evidence degrees, clamped to [0,1].
RouteEvidence route_normalize(const RouteMetrics& metrics,
                              Calibration calibration = Calibration::kPublished);

/// The four-node network fed by `evidence`; PAN4 is the output node.
PanGraph build_route_graph(const RouteEvidence& evidence, ControlFactor ftc = {});

enum class Route { kA, kB, kKeepCurrent };

std::string_view route_name(Route route) noexcept;

struct RouteDecision {
  RouteEvidence evidence;
  GraphEvaluation nodes;
  double real_evidence;  // PAN4 muER
  Decision decision;
  Route route;
};

RouteDecision select_route(const RouteMetrics& metrics, ControlFactor ftc = {},
                           Calibration calibration = Calibration::kPublished);

}  // namespace pal2v
