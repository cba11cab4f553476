#pragma once

// Network delay estimation: probe a host, then extract contradictions from
// the reply delays instead of taking their arithmetic mean.

#include <chrono>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "pal2v/paraextr.hpp"

namespace pal2v {

/// Malformed numeric input (trace or value list).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Probing failed: unreachable host, or no successful reply.
class ProbeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The live prober cannot run here (missing privilege, unsupported platform).
class ProberUnavailable : public ProbeError {
 public:
  using ProbeError::ProbeError;
};

struct ProbeRequest {
  std::string host = "www.google.com";
  int count = 10;
  int size_bytes = 500;
};

struct DelayProbeReport {
  std::string host;
  int sent = 0;
  int received = 0;
  std::vector<double> delays_ms;  // successful replies only
  int packet_size = 0;
};

class DelayProber {
 public:
  virtual ~DelayProber() = default;
  virtual DelayProbeReport probe(const ProbeRequest& request) = 0;
};

/// Replays a recorded trace: one delay in milliseconds per line, '#' starts a
/// comment line, blank lines are skipped. Every recorded reply is returned;
/// the requested count does not truncate the trace.
class ReplayProber final : public DelayProber {
 public:
  explicit ReplayProber(std::vector<double> delays_ms) : delays_ms_(std::move(delays_ms)) {}
  static ReplayProber from_file(const std::filesystem::path& path);

  DelayProbeReport probe(const ProbeRequest& request) override;

 private:
  std::vector<double> delays_ms_;
};

/// ICMP echo over an unprivileged datagram socket (Linux). Requests are sent
/// one at a time with no gap; each waits up to `timeout` for its reply.
class IcmpProber final : public DelayProber {
 public:
  explicit IcmpProber(std::chrono::milliseconds timeout = std::chrono::seconds(2))
      : timeout_(timeout) {}

  DelayProbeReport probe(const ProbeRequest& request) override;

 private:
  std::chrono::milliseconds timeout_;
};

/// Reads the trace format described on ReplayProber. Throws ParseError.
std::vector<double> read_trace(std::istream& in);

/// Validates the request, probes, and rejects a report with no replies.
DelayProbeReport probe_delays(const ProbeRequest& request, DelayProber& prober);

struct DelayEstimate {
  NormalizedDataset normalized;
  double real_evidence;  // reduced muER
  double estimate_ms;
  double mean_ms;
};

DelayEstimate estimate_delay(const DelayProbeReport& report);
DelayEstimate estimate_delay(std::span<const double> delays_ms);

}  // namespace pal2v
