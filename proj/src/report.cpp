#include "pal2v/report.hpp"

#include <cmath>

#include <fmt/format.h>

namespace pal2v {
namespace {

std::string fixed4(double v) { return fmt::format("{:.4f}", v); }

Decision decision_from_value(double value) {
  if (value == 0.0) return Decision::kFalse;
  if (value == 0.5) return Decision::kUndefined;
  if (value == 1.0) return Decision::kTrue;
  throw DomainError(fmt::format("decision_output must be 0, 0.5 or 1 (got {})", value));
}

double number_field(const nlohmann::json& json, const char* key) {
  const auto it = json.find(key);
  if (it == json.end() || !it->is_number()) {
    throw ParseError(fmt::format("field '{}' missing or not a number", key));
  }
  return it->get<double>();
}

double round_to(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::nearbyint(value * scale) / scale;
}

nlohmann::ordered_json node_json(const PanNode& node, const NodeEvaluation& evaluation) {
  nlohmann::ordered_json out;
  out["id"] = node.name;
  out["document"] = to_json(OutputDocument{evaluation.input, node.ftc, evaluation.result});
  return out;
}

}  // namespace

OutputDocument make_document(const EvidencePair& input, ControlFactor ftc) {
  return {input, ftc, analyze(input, ftc)};
}

std::string render_regions(const RegionFlags& flags) {
  std::string out = "{";
  for (RegionLabel label : kAllRegions) {
    if (out.size() > 1) out += ", ";
    out += fmt::format("'{}': {}", ascii_name(label), flags[label] ? "True" : "False");
  }
  out += "}";
  return out;
}

std::string render_text(const OutputDocument& doc) {
  const AnalysisResult& r = doc.result;
  // Byte order of the keys: upper case sorts before lower case.
  std::string out;
  out += "D: " + fixed4(r.segment_clamped) + "\n";
  out += "FtC: " + fixed4(doc.ftc.value()) + "\n";
  out += "Regions: " + render_regions(r.regions) + "\n";
  out += "d: " + fixed4(r.segment) + "\n";
  out += "dc: " + fixed4(r.point.certainty()) + "\n";
  out += "dcr: " + fixed4(r.real_certainty) + "\n";
  out += "dct: " + fixed4(r.point.contradiction()) + "\n";
  out += "decision_output: " + fixed4(decision_value(r.decision)) + "\n";
  out += fmt::format("label: {}\n", ascii_name(r.label));
  out += "lam: " + fixed4(doc.input.lam()) + "\n";
  out += "mu: " + fixed4(doc.input.mu()) + "\n";
  out += "muE: " + fixed4(r.evidence) + "\n";
  out += "muECT: " + fixed4(r.contradiction_evidence) + "\n";
  out += "muER: " + fixed4(r.real_evidence) + "\n";
  out += "phiE: " + fixed4(r.real_certainty_interval) + "\n";
  return out;
}

nlohmann::ordered_json to_json(const OutputDocument& doc) {
  const AnalysisResult& r = doc.result;
  nlohmann::ordered_json out;
  out["mu"] = doc.input.mu();
  out["lam"] = doc.input.lam();
  out["FtC"] = doc.ftc.value();
  out["dc"] = r.point.certainty();
  out["dct"] = r.point.contradiction();
  out["d"] = r.segment;
  out["D"] = r.segment_clamped;
  out["dcr"] = r.real_certainty;
  out["phi"] = r.certainty_interval;
  out["phiE"] = r.real_certainty_interval;
  out["muE"] = r.evidence;
  out["muECT"] = r.contradiction_evidence;
  out["muER"] = r.real_evidence;
  out["decision_output"] = decision_value(r.decision);
  out["label"] = ascii_name(r.label);
  out["label_unicode"] = unicode_name(r.label);
  nlohmann::ordered_json regions = nlohmann::ordered_json::object();
  for (RegionLabel label : kAllRegions) regions[std::string(ascii_name(label))] = r.regions[label];
  out["regions"] = std::move(regions);
  return out;
}

OutputDocument document_from_json(const nlohmann::json& json) {
  if (!json.is_object()) throw ParseError("analysis document must be a JSON object");

  const auto label_it = json.find("label");
  if (label_it == json.end() || !label_it->is_string()) {
    throw ParseError("field 'label' missing or not a string");
  }
  const auto label = parse_region_label(label_it->get<std::string>());
  if (!label) throw ParseError(fmt::format("unknown region label '{}'", label_it->get<std::string>()));

  const auto regions_it = json.find("regions");
  if (regions_it == json.end() || !regions_it->is_object()) {
    throw ParseError("field 'regions' missing or not an object");
  }
  RegionFlags flags;
  for (const auto& [name, value] : regions_it->items()) {
    const auto region = parse_region_label(name);
    if (!region || !value.is_boolean()) throw ParseError(fmt::format("bad region entry '{}'", name));
    flags.set(*region, value.get<bool>());
  }

  const EvidencePair input(number_field(json, "mu"), number_field(json, "lam"));
  const ControlFactor ftc(number_field(json, "FtC"));
  AnalysisResult result{
      .point = LatticePoint(number_field(json, "dc"), number_field(json, "dct")),
      .segment = number_field(json, "d"),
      .segment_clamped = number_field(json, "D"),
      .real_certainty = number_field(json, "dcr"),
      .certainty_interval = number_field(json, "phi"),
      .evidence = number_field(json, "muE"),
      .contradiction_evidence = number_field(json, "muECT"),
      .real_evidence = number_field(json, "muER"),
      .real_certainty_interval = number_field(json, "phiE"),
      .decision = decision_from_value(number_field(json, "decision_output")),
      .label = *label,
      .regions = flags,
  };
  return {input, ftc, result};
}

std::string shortest_float(double value) {
  std::string s = fmt::format("{}", value);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

std::string render_rounded_vector(std::span<const double> values, int decimals) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ' ';
    std::string item = fmt::format("{:.{}f}", values[i], decimals);
    if (item.find('.') != std::string::npos) {
      item.erase(item.find_last_not_of('0') + 1);
    }
    out += item;
  }
  out += "]";
  return out;
}

std::string render_rounded_list(std::span<const double> values, int decimals) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ", ";
    out += shortest_float(round_to(values[i], decimals));
  }
  out += "]";
  return out;
}

std::string render_extract_text(std::span<const double> delays_ms, const DelayEstimate& estimate) {
  std::string out;
  out += fmt::format("Delays (msec): {}\n", render_rounded_list(delays_ms, 3));
  out += fmt::format("Arithmetic Mean of the delay: {:.3f} msec\n", estimate.mean_ms);
  out += fmt::format("Normalized values (μ) [congestion]: {}\n",
                     render_rounded_vector(estimate.normalized.values, 4));
  out += "\n=== Final Results ===\n";
  out += fmt::format("ParaExtrCTX μER (congestion) = {:.4f}\n", estimate.real_evidence);
  out += fmt::format("Estimated ParaExtrCTX (msec) = {:.3f}\n", estimate.estimate_ms);
  out += fmt::format("Arithmetic Average Delay (msec) = {:.3f}\n", estimate.mean_ms);
  return out;
}

nlohmann::ordered_json extract_json(std::span<const double> delays_ms,
                                    const DelayEstimate& estimate) {
  nlohmann::ordered_json out;
  out["delays_ms"] = std::vector<double>(delays_ms.begin(), delays_ms.end());
  out["normalized"] = estimate.normalized.values;
  out["min_raw"] = estimate.normalized.min_raw;
  out["max_raw"] = estimate.normalized.max_raw;
  out["muER"] = estimate.real_evidence;
  out["estimate_ms"] = estimate.estimate_ms;
  out["mean_ms"] = estimate.mean_ms;
  return out;
}

std::string render_probe_text(const DelayProbeReport& report) {
  // Reported reply sizes include the 8-byte ICMP and 20-byte IPv4 headers.
  std::string out = fmt::format("Pinging {} com {} packets {} Bytes...\n\n", report.host,
                                report.sent, report.packet_size);
  for (double delay : report.delays_ms) {
    out += fmt::format("Reply from {}, {} bytes in {:.2f}ms\n", report.host,
                       report.packet_size + 28, delay);
  }
  out += "\n";
  return out;
}

nlohmann::ordered_json probe_json(const DelayProbeReport& report, const DelayEstimate& estimate) {
  nlohmann::ordered_json out;
  out["host"] = report.host;
  out["sent"] = report.sent;
  out["received"] = report.received;
  out["packet_size"] = report.packet_size;
  const auto extraction = extract_json(report.delays_ms, estimate);
  for (const auto& [key, value] : extraction.items()) out[key] = value;
  return out;
}

std::string render_route_text(const RouteMetrics& metrics, const RouteDecision& decision) {
  std::string out;
  out += fmt::format("Reception Jitter (msec): {}\n", metrics.rx_jitter_ms);
  out += fmt::format("Transmission Jitter (msec): {}\n", metrics.tx_jitter_ms);
  out += fmt::format("round trip time (msec): {}\n", metrics.round_trip_ms);
  out += fmt::format("Processing Consumption of the Router (%): {}\n", metrics.processing_pct);
  out += fmt::format("packet loss (%): {}\n", metrics.packet_loss_pct);
  out += fmt::format("Result of the PANnet = {:.3f}\n", decision.real_evidence);
  out += fmt::format("Best Route is = {}\n", route_name(decision.route));
  return out;
}

nlohmann::ordered_json route_json(const RouteMetrics& metrics, const RouteDecision& decision) {
  nlohmann::ordered_json out;
  out["metrics"] = {{"rxj_ms", metrics.rx_jitter_ms},
                    {"txj_ms", metrics.tx_jitter_ms},
                    {"rtt_ms", metrics.round_trip_ms},
                    {"pc_pct", metrics.processing_pct},
                    {"pl_pct", metrics.packet_loss_pct}};
  out["evidence"] = {{"mu1", decision.evidence.mu1},
                     {"lam1", decision.evidence.lam1},
                     {"mu2", decision.evidence.mu2},
                     {"lam2", decision.evidence.lam2},
                     {"mu3", decision.evidence.mu3}};
  nlohmann::ordered_json nodes = nlohmann::ordered_json::object();
  for (const auto& [id, evaluation] : decision.nodes) {
    nodes[fmt::format("PAN{}", id.value + 1)] = evaluation.result.real_evidence;
  }
  out["nodes_muER"] = std::move(nodes);
  out["muER"] = decision.real_evidence;
  out["decision_output"] = decision_value(decision.decision);
  out["route"] = decision.route == Route::kKeepCurrent ? "KeepCurrent" : route_name(decision.route);
  return out;
}

std::string render_graph_text(const PanGraph& graph, const GraphEvaluation& evaluation) {
  std::string out;
  for (NodeId id : graph.topological_order()) {
    const NodeEvaluation& e = evaluation.at(id);
    out += fmt::format("{}: mu={:.4f} lam={:.4f} muER={:.4f} label={} decision_output={:.4f}\n",
                       graph.node(id).name, e.input.mu(), e.input.lam(), e.result.real_evidence,
                       ascii_name(e.result.label), decision_value(e.result.decision));
  }
  const NodeId output = graph.output();
  out += fmt::format("Result of the PANnet ({}) = {:.4f}\n", graph.node(output).name,
                     evaluation.at(output).result.real_evidence);
  return out;
}

nlohmann::ordered_json graph_json(const PanGraph& graph, const GraphEvaluation& evaluation) {
  nlohmann::ordered_json out;
  nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
  for (NodeId id : graph.topological_order()) {
    nodes.push_back(node_json(graph.node(id), evaluation.at(id)));
  }
  out["nodes"] = std::move(nodes);
  out["output"] = graph.node(graph.output()).name;
  out["muER"] = evaluation.at(graph.output()).result.real_evidence;
  return out;
}

}  // namespace pal2v
