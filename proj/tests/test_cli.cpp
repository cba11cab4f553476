#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "fixture_io.hpp"
#include "json.hpp"
#include "pal2v/report.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "pal2v");
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = pal2v::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kFixtures = PAL2V_FIXTURES;

}  // namespace

TEST_CASE("analyze") {
  const auto r = run_cli({"analyze", "--mu", "0.70", "--lam", "0.60"});
  CHECK(r.code == 0);
  CHECK(r.out == read_fixture("fig6_analyze.txt"));
  CHECK(r.out.find("muER: 0.5257") != std::string::npos);
  CHECK(r.out.find("label: QT-t") != std::string::npos);

  const auto center = run_cli({"analyze", "--mu", "0.5", "--lam", "0.5"});
  CHECK(center.out.find("decision_output: 0.5000") != std::string::npos);

  const auto via_mu2 = run_cli({"analyze", "--mu", "0.70", "--mu2", "0.40"});
  CHECK(via_mu2.code == 0);
  CHECK(via_mu2.out.find("lam: 0.6000") != std::string::npos);
}

TEST_CASE("analyze rejects out-of-range flags with exit 2") {
  const auto r = run_cli({"analyze", "--mu", "1.2", "--lam", "0.3"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--mu must be in [0,1]") != std::string::npos);

  CHECK(run_cli({"analyze", "--mu", "0.2", "--lam", "-1"}).code == 2);
  CHECK(run_cli({"analyze", "--mu", "0.2", "--lam", "0.1", "--ftc", "3"}).code == 2);
  CHECK(run_cli({"analyze", "--mu", "abc", "--lam", "0.3"}).code == 2);
  CHECK(run_cli({"analyze", "--mu", "0.2"}).code == 2);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("analyze JSON re-renders to the text transcript") {
  const auto json_run = run_cli({"analyze", "--mu", "0.31", "--lam", "0.77", "--ftc", "0.4", "--json"});
  const auto text_run = run_cli({"analyze", "--mu", "0.31", "--lam", "0.77", "--ftc", "0.4"});
  REQUIRE(json_run.code == 0);
  const auto doc = pal2v::document_from_json(nlohmann::json::parse(json_run.out));
  CHECK(pal2v::render_text(doc) == text_run.out);
}

TEST_CASE("FtC default can come from the environment") {
  ::setenv(pal2v::cli::kFtcEnvVar, "0.6", 1);
  const auto r = run_cli({"analyze", "--mu", "0.70", "--lam", "0.60"});
  CHECK(r.out.find("FtC: 0.6000") != std::string::npos);
  CHECK(r.out.find("decision_output: 0.0000") != std::string::npos);
  const auto flag = run_cli({"analyze", "--mu", "0.70", "--lam", "0.60", "--ftc", "0.5"});
  CHECK(flag.out.find("FtC: 0.5000") != std::string::npos);
  ::setenv(pal2v::cli::kFtcEnvVar, "bogus", 1);
  CHECK(run_cli({"analyze", "--mu", "0.70", "--lam", "0.60"}).code == 2);
  ::unsetenv(pal2v::cli::kFtcEnvVar);
}

TEST_CASE("classify") {
  const auto r = run_cli({"classify", "--dc", "0.1", "--dct", "0.3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("label: QT-t") != std::string::npos);
  const auto j = run_cli({"classify", "--dc", "-0.7", "--dct", "0.1", "--json"});
  CHECK(nlohmann::json::parse(j.out)["label"] == "f");
  CHECK(run_cli({"classify", "--dc", "1.5", "--dct", "0"}).code == 2);
}

TEST_CASE("extract") {
  const auto r = run_cli({"extract", "--input", kFixtures + "/fig7.trace"});
  CHECK(r.code == 0);
  CHECK(r.out == read_fixture("fig7_extract.txt"));
  CHECK(r.out.find("ParaExtrCTX μER (congestion) = 0.2857") != std::string::npos);

  const auto from_stdin = run_cli({"extract"}, "7.0\n");
  CHECK(from_stdin.code == 0);
  CHECK(from_stdin.out.find("Estimated ParaExtrCTX (msec) = 7.000") != std::string::npos);

  CHECK(run_cli({"extract"}, "").code == 2);
  CHECK(run_cli({"extract"}, "1.0\nfoo\n").code == 2);
  CHECK(run_cli({"extract", "--input", "/nonexistent/file"}).code == 2);

  const auto j = run_cli({"extract", "--json"}, "5\n5\n5\n");
  CHECK(nlohmann::json::parse(j.out)["estimate_ms"] == 5.0);
}

TEST_CASE("ping-estimate in replay mode") {
  const auto r = run_cli({"ping-estimate", "--host", "1.1.1.1", "--count", "12", "--size", "1000",
                          "--offline", kFixtures + "/fig7.trace"});
  CHECK(r.code == 0);
  CHECK(r.out == read_fixture("fig7_ping.txt"));

  const auto defaults = run_cli({"ping-estimate", "--offline", kFixtures + "/fig7.trace", "--json"});
  const auto json = nlohmann::json::parse(defaults.out);
  CHECK(json["host"] == "www.google.com");
  CHECK(json["packet_size"] == 500);
  CHECK(std::abs(json["estimate_ms"].get<double>() - 11.151) <= 1e-3);
}

TEST_CASE("ping-estimate errors") {
  // Comment-only trace: no replies.
  const auto empty = run_cli({"ping-estimate", "--offline", kFixtures + "/empty.trace"});
  CHECK(empty.code == 3);
  CHECK(empty.err.find("No ping successful!") != std::string::npos);
  CHECK(run_cli({"ping-estimate", "--count", "0", "--offline", kFixtures + "/fig7.trace"}).code == 2);
  const auto unresolvable = run_cli({"ping-estimate", "--host", "no-such-host.invalid", "--count", "1"});
  CHECK(unresolvable.code == 3);
}

TEST_CASE("route-select") {
  CHECK(run_cli({"route-select", "40", "60", "50", "70", "20"}).out ==
        read_fixture("fig9_route_a.txt"));
  const auto keep = run_cli({"route-select", "10", "20", "20", "95", "20"});
  CHECK(keep.out.find("keep current (undefined analysis)") != std::string::npos);
  const auto flags = run_cli({"route-select", "--rxj", "20", "--txj", "30", "--rtt", "40", "--pc",
                              "60", "--pl", "40"});
  CHECK(flags.out == read_fixture("fig9_route_b.txt"));

  // Prompts' fallbacks: 10, 10, 10, 50, 10.
  const auto defaults = run_cli({"route-select", "--json"});
  CHECK(nlohmann::json::parse(defaults.out)["metrics"]["pc_pct"] == 50.0);

  CHECK(run_cli({"route-select", "1", "2", "3"}).code == 2);
  CHECK(run_cli({"route-select", "--pc", "120"}).code == 2);
  CHECK(run_cli({"route-select", "--calibration", "other"}).code == 2);
  CHECK(run_cli({"route-select", "40", "60", "50", "70", "20", "--calibration", "consistent"}).code ==
        0);
}

TEST_CASE("graph") {
  const auto r = run_cli({"graph", "--file", kFixtures + "/route_pannet.json"});
  CHECK(r.code == 0);
  CHECK(r.out.find("Result of the PANnet (PAN4) = 0.5556") != std::string::npos);

  const auto j = run_cli({"graph", "--file", kFixtures + "/route_pannet.json", "--json"});
  const auto json = nlohmann::json::parse(j.out);
  CHECK(json["output"] == "PAN4");
  CHECK(std::abs(json["muER"].get<double>() - 0.556) <= 5e-4);

  const auto cyclic = run_cli({"graph", "--file", kFixtures + "/cyclic.json"});
  CHECK(cyclic.code == 2);
  CHECK(cyclic.err.find("cycle detected") != std::string::npos);
  CHECK(run_cli({"graph", "--file", kFixtures + "/unbound.json"}).code == 2);
  CHECK(run_cli({"graph", "--file", kFixtures + "/fig7.trace"}).code == 2);
}
