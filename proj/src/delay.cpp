#include "pal2v/delay.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <string_view>

#include <fmt/format.h>

namespace pal2v {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::vector<double> read_trace(std::istream& in) {
  std::vector<double> values;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    double value = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size() || !std::isfinite(value)) {
      throw ParseError(fmt::format("line {}: expected a number, got '{}'", line_no, text));
    }
    values.push_back(value);
  }
  return values;
}

ReplayProber ReplayProber::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(fmt::format("cannot open trace file '{}'", path.string()));
  return ReplayProber(read_trace(in));
}

DelayProbeReport ReplayProber::probe(const ProbeRequest& request) {
  DelayProbeReport report;
  report.host = request.host;
  report.sent = static_cast<int>(delays_ms_.size());
  report.received = report.sent;
  report.delays_ms = delays_ms_;
  report.packet_size = request.size_bytes;
  return report;
}

DelayProbeReport probe_delays(const ProbeRequest& request, DelayProber& prober) {
  if (request.count < 1) throw DomainError("count must be at least 1");
  if (request.size_bytes < 0) throw DomainError("packet size must not be negative");
  DelayProbeReport report = prober.probe(request);
  if (report.delays_ms.empty()) throw ProbeError("No ping successful!");
  return report;
}

DelayEstimate estimate_delay(std::span<const double> delays_ms) {
  DelayEstimate estimate{normalize_dataset(delays_ms), 0.0, 0.0, 0.0};
  estimate.real_evidence = reduce(estimate.normalized.values);
  estimate.estimate_ms =
      denormalize(estimate.real_evidence, estimate.normalized.min_raw, estimate.normalized.max_raw);
  estimate.mean_ms = std::accumulate(delays_ms.begin(), delays_ms.end(), 0.0) /
                     static_cast<double>(delays_ms.size());
  return estimate;
}

DelayEstimate estimate_delay(const DelayProbeReport& report) {
  return estimate_delay(std::span<const double>(report.delays_ms));
}

}  // namespace pal2v
