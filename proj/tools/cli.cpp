#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "pal2v/core.hpp"
#include "pal2v/delay.hpp"
#include "pal2v/graph_file.hpp"
#include "pal2v/report.hpp"
#include "pal2v/route.hpp"

namespace pal2v::cli {
namespace {

// Raised for flag values that parse but violate their documented range.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check_flag(double value, double lo, double hi, const std::string& flag) {
  if (!(value >= lo && value <= hi)) {
    throw UsageError(fmt::format("{} must be in [{},{}] (got {})", flag, lo, hi, value));
  }
}

ControlFactor resolve_ftc(const std::optional<double>& flag) {
  if (flag) {
    check_flag(*flag, 0.0, 1.0, "--ftc");
    return ControlFactor(*flag);
  }
  const char* env = std::getenv(kFtcEnvVar);
  if (env == nullptr || *env == '\0') return ControlFactor{};
  char* end = nullptr;
  const double value = std::strtod(env, &end);
  if (end == env || *end != '\0') {
    throw UsageError(fmt::format("{} must be a number (got '{}')", kFtcEnvVar, env));
  }
  check_flag(value, 0.0, 1.0, kFtcEnvVar);
  return ControlFactor(value);
}

void emit(std::ostream& out, const nlohmann::ordered_json& json) { out << json.dump(2) << '\n'; }

struct AnalyzeArgs {
  double mu = 0.0;
  std::optional<double> lam;
  std::optional<double> mu2;
  std::optional<double> ftc;
  bool json = false;
};

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
  check_flag(a.mu, 0.0, 1.0, "--mu");
  double lam = 0.0;
  if (a.lam) {
    check_flag(*a.lam, 0.0, 1.0, "--lam");
    lam = *a.lam;
  } else if (a.mu2) {
    check_flag(*a.mu2, 0.0, 1.0, "--mu2");
    lam = complement_evidence(*a.mu2);
  } else {
    throw UsageError("one of --lam or --mu2 is required");
  }
  const OutputDocument doc = make_document(EvidencePair(a.mu, lam), resolve_ftc(a.ftc));
  if (a.json) {
    emit(out, to_json(doc));
  } else {
    out << render_text(doc);
  }
  return kExitOk;
}

struct ClassifyArgs {
  double dc = 0.0;
  double dct = 0.0;
  std::optional<double> ftc;
  bool json = false;
};

int cmd_classify(const ClassifyArgs& a, std::ostream& out) {
  check_flag(a.dc, -1.0, 1.0, "--dc");
  check_flag(a.dct, -1.0, 1.0, "--dct");
  const ControlFactor ftc = resolve_ftc(a.ftc);
  const LatticePoint point(a.dc, a.dct);
  const RegionLabel label = classify(point, ftc);
  const RegionFlags flags = region_flags(point, ftc);
  if (a.json) {
    nlohmann::ordered_json doc;
    doc["dc"] = a.dc;
    doc["dct"] = a.dct;
    doc["FtC"] = ftc.value();
    doc["label"] = ascii_name(label);
    doc["label_unicode"] = unicode_name(label);
    nlohmann::ordered_json regions = nlohmann::ordered_json::object();
    for (RegionLabel r : kAllRegions) regions[std::string(ascii_name(r))] = flags[r];
    doc["regions"] = std::move(regions);
    emit(out, doc);
  } else {
    out << "Regions: " << render_regions(flags) << '\n';
    out << "label: " << ascii_name(label) << '\n';
  }
  return kExitOk;
}

struct ExtractArgs {
  std::string input;
  bool json = false;
};

int cmd_extract(const ExtractArgs& a, std::istream& in, std::ostream& out) {
  std::vector<double> values;
  if (a.input.empty() || a.input == "-") {
    values = read_trace(in);
  } else {
    std::ifstream file(a.input);
    if (!file) throw ParseError(fmt::format("cannot open input file '{}'", a.input));
    values = read_trace(file);
  }
  if (values.empty()) throw ParseError("input holds no values");
  const DelayEstimate estimate = estimate_delay(values);
  if (a.json) {
    emit(out, extract_json(values, estimate));
  } else {
    out << render_extract_text(values, estimate);
  }
  return kExitOk;
}

struct PingArgs {
  ProbeRequest request;
  std::string offline;
  bool json = false;
};

int cmd_ping_estimate(const PingArgs& a, std::ostream& out) {
  if (a.request.count < 1) throw UsageError("--count must be at least 1");
  if (a.request.size_bytes < 0) throw UsageError("--size must not be negative");
  DelayProbeReport report;
  if (a.offline.empty()) {
    IcmpProber prober;
    report = probe_delays(a.request, prober);
  } else {
    ReplayProber prober = ReplayProber::from_file(a.offline);
    report = probe_delays(a.request, prober);
  }
  const DelayEstimate estimate = estimate_delay(report);
  if (a.json) {
    emit(out, probe_json(report, estimate));
  } else {
    out << render_probe_text(report) << render_extract_text(report.delays_ms, estimate);
  }
  return kExitOk;
}

struct RouteArgs {
  std::vector<double> positional;
  // Fallbacks follow the reference script's prompts.
  std::optional<double> rxj, txj, rtt, pc, pl;
  std::optional<double> ftc;
  std::string calibration = "published";
  bool json = false;
};

int cmd_route_select(const RouteArgs& a, std::ostream& out) {
  if (!a.positional.empty() && a.positional.size() != 5) {
    throw UsageError("route-select takes exactly five positional metrics: RXJ TXJ RTT PC PL");
  }
  auto pick = [&a](const std::optional<double>& flag, std::size_t index, double fallback) {
    if (flag) return *flag;
    return a.positional.empty() ? fallback : a.positional[index];
  };
  RouteMetrics metrics{pick(a.rxj, 0, 10.0), pick(a.txj, 1, 10.0), pick(a.rtt, 2, 10.0),
                       pick(a.pc, 3, 50.0), pick(a.pl, 4, 10.0)};
  constexpr double kUnbounded = std::numeric_limits<double>::max();
  check_flag(metrics.rx_jitter_ms, 0.0, kUnbounded, "--rxj");
  check_flag(metrics.tx_jitter_ms, 0.0, kUnbounded, "--txj");
  check_flag(metrics.round_trip_ms, 0.0, kUnbounded, "--rtt");
  check_flag(metrics.processing_pct, 0.0, 100.0, "--pc");
  check_flag(metrics.packet_loss_pct, 0.0, 100.0, "--pl");

  const Calibration calibration =
      a.calibration == "consistent" ? Calibration::kConsistent : Calibration::kPublished;
  const RouteDecision decision = select_route(metrics, resolve_ftc(a.ftc), calibration);
  if (a.json) {
    emit(out, route_json(metrics, decision));
  } else {
    out << render_route_text(metrics, decision);
  }
  return kExitOk;
}

struct GraphArgs {
  std::string file;
  bool json = false;
};

int cmd_graph(const GraphArgs& a, std::ostream& out) {
  const PanGraph graph = load_graph_file(a.file);
  const GraphEvaluation evaluation = graph.evaluate();
  if (a.json) {
    emit(out, graph_json(graph, evaluation));
  } else {
    out << render_graph_text(graph, evaluation);
  }
  return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Paraconsistent annotated logic (PAL2v) analysis tool", "pal2v"};
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze one evidence pair (mu, lam)");
  analyze_cmd->add_option("--mu", analyze_args.mu, "Favorable evidence in [0,1]")->required();
  auto* lam_opt = analyze_cmd->add_option("--lam", analyze_args.lam, "Unfavorable evidence in [0,1]");
  analyze_cmd->add_option("--mu2", analyze_args.mu2, "Second annotation value; lam = 1 - mu2")
      ->excludes(lam_opt);
  analyze_cmd->add_option("--ftc", analyze_args.ftc, "Control factor in [0,1] (default 0.5)");
  analyze_cmd->add_flag("--json", analyze_args.json, "Emit full-precision JSON");

  ClassifyArgs classify_args;
  auto* classify_cmd = app.add_subcommand("classify", "Classify a lattice point (dc, dct)");
  classify_cmd->add_option("--dc", classify_args.dc, "Certainty degree in [-1,1]")->required();
  classify_cmd->add_option("--dct", classify_args.dct, "Contradiction degree in [-1,1]")->required();
  classify_cmd->add_option("--ftc", classify_args.ftc, "Control factor in [0,1] (default 0.5)");
  classify_cmd->add_flag("--json", classify_args.json, "Emit JSON");

  ExtractArgs extract_args;
  auto* extract_cmd =
      app.add_subcommand("extract", "Contradiction extraction over a list of values");
  extract_cmd->add_option("--input", extract_args.input,
                          "File with one value per line (default: stdin)");
  extract_cmd->add_flag("--json", extract_args.json, "Emit JSON");

  PingArgs ping_args;
  auto* ping_cmd = app.add_subcommand("ping-estimate", "Probe a host and estimate its delay");
  ping_cmd->add_option("--host", ping_args.request.host, "Host to ping")->capture_default_str();
  ping_cmd->add_option("--count", ping_args.request.count, "Number of packets")
      ->capture_default_str();
  ping_cmd->add_option("--size", ping_args.request.size_bytes, "Payload size in bytes")
      ->capture_default_str();
  ping_cmd->add_option("--offline", ping_args.offline,
                       "Replay a recorded trace (one delay in ms per line) instead of probing");
  ping_cmd->add_flag("--json", ping_args.json, "Emit JSON");

  RouteArgs route_args;
  auto* route_cmd = app.add_subcommand("route-select", "Choose between two routes");
  route_cmd->add_option("metrics", route_args.positional, "RXJ TXJ RTT PC PL");
  route_cmd->add_option("--rxj", route_args.rxj, "Reception jitter (ms)");
  route_cmd->add_option("--txj", route_args.txj, "Transmission jitter (ms)");
  route_cmd->add_option("--rtt", route_args.rtt, "Round trip time (ms)");
  route_cmd->add_option("--pc", route_args.pc, "Router processing consumption (%)");
  route_cmd->add_option("--pl", route_args.pl, "Packet loss (%)");
  route_cmd->add_option("--ftc", route_args.ftc, "Control factor in [0,1] (default 0.5)");
  route_cmd->add_option("--calibration", route_args.calibration, "Normalization constants")
      ->check(CLI::IsMember({"published", "consistent"}))
      ->capture_default_str();
  route_cmd->add_flag("--json", route_args.json, "Emit JSON");

  GraphArgs graph_args;
  auto* graph_cmd = app.add_subcommand("graph", "Evaluate a PAN network description (JSON)");
  graph_cmd->add_option("--file", graph_args.file, "Graph description file")
      ->required()
      ->check(CLI::ExistingFile);
  graph_cmd->add_flag("--json", graph_args.json, "Emit JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(analyze_args, out);
    if (*classify_cmd) return cmd_classify(classify_args, out);
    if (*extract_cmd) return cmd_extract(extract_args, in, out);
    if (*ping_cmd) return cmd_ping_estimate(ping_args, out);
    if (*route_cmd) return cmd_route_select(route_args, out);
    if (*graph_cmd) return cmd_graph(graph_args, out);
  } catch (const ProbeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitProbe;
  } catch (const std::exception& e) {
    // Usage, parse, domain and configuration errors.
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace pal2v::cli
