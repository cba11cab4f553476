#pragma once

// Rendering of analysis results as text transcripts and JSON documents.
// JSON field names follow the library's published field table exactly
// (mu, lam, FtC, dc, dct, d, D, dcr, phi, phiE, muE, muECT, muER,
// decision_output, label, regions).

#include <span>
#include <string>

#include "json.hpp"
#include "pal2v/core.hpp"
#include "pal2v/delay.hpp"
#include "pal2v/pan_graph.hpp"
#include "pal2v/route.hpp"

namespace pal2v {

struct OutputDocument {
  EvidencePair input;
  ControlFactor ftc;
  AnalysisResult result;
};

OutputDocument make_document(const EvidencePair& input, ControlFactor ftc = {});

/// Key-sorted listing with 4-decimal values, one field per line. phi is
/// only carried in JSON since it always equals phiE.
std::string render_text(const OutputDocument& doc);

/// Full-precision JSON. "label" holds the ASCII spelling and
/// "label_unicode" the Unicode one; "regions" follows the canonical order.
nlohmann::ordered_json to_json(const OutputDocument& doc);

/// Inverse of to_json. Throws ParseError on missing or mistyped fields and
/// DomainError on out-of-range values.
OutputDocument document_from_json(const nlohmann::json& json);

/// The region map as a single-line dict: {'t': False, 'f': False, ...}
std::string render_regions(const RegionFlags& flags);

/// Shortest round-trip spelling, always with a decimal point ("11.0", "0.027").
std::string shortest_float(double value);

/// "[0.4595 1. 0.1622]": each value rounded to `decimals`, trailing zeros dropped.
std::string render_rounded_vector(std::span<const double> values, int decimals);

/// "[11.28, 11.68]": each value rounded to `decimals` then printed shortest.
std::string render_rounded_list(std::span<const double> values, int decimals);

/// Delay list, mean, normalized vector and the final results block.
std::string render_extract_text(std::span<const double> delays_ms, const DelayEstimate& estimate);
nlohmann::ordered_json extract_json(std::span<const double> delays_ms,
                                    const DelayEstimate& estimate);

/// Header and per-reply lines printed before the extraction block.
std::string render_probe_text(const DelayProbeReport& report);
nlohmann::ordered_json probe_json(const DelayProbeReport& report, const DelayEstimate& estimate);

/// Echoed metrics, the network result to 3 decimals, and the chosen route.
std::string render_route_text(const RouteMetrics& metrics, const RouteDecision& decision);
nlohmann::ordered_json route_json(const RouteMetrics& metrics, const RouteDecision& decision);

/// One line per node in evaluation order, then the output node's result.
std::string render_graph_text(const PanGraph& graph, const GraphEvaluation& evaluation);
nlohmann::ordered_json graph_json(const PanGraph& graph, const GraphEvaluation& evaluation);

}  // namespace pal2v
