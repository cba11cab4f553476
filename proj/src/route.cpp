#include "pal2v/route.hpp"

#include <algorithm>
#include <limits>

namespace pal2v {
namespace {

double clamp_unit(double v) { return std::clamp(v, 0.0, 1.0); }

Route route_for(Decision decision) noexcept {
  switch (decision) {
    case Decision::kTrue: return Route::kA;
    case Decision::kFalse: return Route::kB;
    case Decision::kUndefined: return Route::kKeepCurrent;
  }
  return Route::kKeepCurrent;
}

}  // namespace

void validate(const RouteMetrics& metrics) {
  constexpr double kUnbounded = std::numeric_limits<double>::max();
  require_in_range(metrics.rx_jitter_ms, 0.0, kUnbounded, "reception jitter");
  require_in_range(metrics.tx_jitter_ms, 0.0, kUnbounded, "transmission jitter");
  require_in_range(metrics.round_trip_ms, 0.0, kUnbounded, "round trip time");
  require_in_range(metrics.processing_pct, 0.0, 100.0, "processing consumption");
  require_in_range(metrics.packet_loss_pct, 0.0, 100.0, "packet loss");
}

RouteEvidence route_normalize(const RouteMetrics& metrics, Calibration calibration) {
  validate(metrics);
  constexpr double kOffset = 0.001;
  const double jitter_span = calibration == Calibration::kPublished ? 100.0 - 0.1 : 100.0 - kOffset;
  const double rtt_span = 200.0 - kOffset;

  RouteEvidence evidence;
  evidence.mu1 = clamp_unit(1.0 - (metrics.rx_jitter_ms - kOffset) / jitter_span);
  evidence.lam1 = clamp_unit((metrics.tx_jitter_ms - kOffset) / jitter_span);
  evidence.mu2 = clamp_unit(1.0 - (metrics.round_trip_ms - kOffset) / rtt_span);
  evidence.lam2 = clamp_unit(metrics.processing_pct / 100.0);
  evidence.mu3 = clamp_unit(1.0 - metrics.packet_loss_pct / 100.0);
  return evidence;
}

PanGraph build_route_graph(const RouteEvidence& evidence, ControlFactor ftc) {
  PanGraph graph;
  const NodeId pan1 = graph.add_node(ftc);
  const NodeId pan2 = graph.add_node(ftc);
  const NodeId pan3 = graph.add_node(ftc);
  const NodeId pan4 = graph.add_node(ftc);

  graph.bind(pan1, Port::kMu, evidence.mu1);
  graph.bind(pan1, Port::kLam, evidence.lam1);
  graph.bind(pan2, Port::kMu, evidence.mu2);
  graph.bind(pan2, Port::kLam, evidence.lam2);
  graph.bind(pan3, Port::kMu, evidence.mu3);
  graph.bind(pan3, Port::kLam, NodeOutput{pan1, OutputField::kMuER});
  graph.bind(pan4, Port::kMu, NodeOutput{pan3, OutputField::kMuER});
  graph.bind(pan4, Port::kLam, NodeOutput{pan2, OutputField::kMuER});
  graph.set_output(pan4);
  return graph;
}

std::string_view route_name(Route route) noexcept {
  switch (route) {
    case Route::kA: return "A";
    case Route::kB: return "B";
    case Route::kKeepCurrent: return "keep current (undefined analysis)";
  }
  return "";
}

RouteDecision select_route(const RouteMetrics& metrics, ControlFactor ftc,
                           Calibration calibration) {
  const RouteEvidence evidence = route_normalize(metrics, calibration);
  const PanGraph graph = build_route_graph(evidence, ftc);
  GraphEvaluation nodes = graph.evaluate();
  const AnalysisResult& out = nodes.at(graph.output()).result;
  return RouteDecision{evidence, std::move(nodes), out.real_evidence, out.decision,
                       route_for(out.decision)};
}

}  // namespace pal2v
