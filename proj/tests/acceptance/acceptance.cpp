// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any fails.
//
// usage: acceptance <path-to-pal2v-cli> <fixtures-dir>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <fmt/format.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "pal2v/core.hpp"
#include "pal2v/delay.hpp"
#include "pal2v/paraextr.hpp"
#include "pal2v/report.hpp"
#include "pal2v/route.hpp"

namespace fs = std::filesystem;
using namespace pal2v;

namespace {

std::string g_cli;
fs::path g_fixtures;

// Collects failed checks for one criterion.
class Checker {
 public:
  void near(const std::string& what, double got, double want, double tol) {
    if (!(std::abs(got - want) <= tol)) {
      failures_.push_back(fmt::format("{}: got {:.10g}, want {} +/- {}", what, got, want, tol));
    }
  }
  void that(const std::string& what, bool ok) {
    if (!ok) failures_.push_back(what);
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void fig6_golden(Checker& c) {
  const AnalysisResult r = analyze(EvidencePair(0.70, 0.60), ControlFactor(0.5));
  constexpr double tol = 5e-5;
  c.near("dc", r.point.certainty(), 0.1000, tol);
  c.near("dct", r.point.contradiction(), 0.3000, tol);
  c.near("d", r.segment, 0.9487, tol);
  c.near("dcr", r.real_certainty, 0.0513, tol);
  c.near("muE", r.evidence, 0.5500, tol);
  c.near("muECT", r.contradiction_evidence, 0.6500, tol);
  c.near("muER", r.real_evidence, 0.5257, tol);
  c.near("phiE", r.real_certainty_interval, 0.7000, tol);
  c.that("decision_output == 1.0", decision_value(r.decision) == 1.0);
  c.that("label == Q⊤→t", r.label == RegionLabel::kQuasiInconsistentToTrue);
  c.that("exactly one region flag", r.regions.count() == 1 && r.regions[r.label]);
}

void fig7_golden(Checker& c) {
  ReplayProber prober = ReplayProber::from_file(g_fixtures / "fig7.trace");
  const DelayProbeReport report = probe_delays({"1.1.1.1", 12, 1000}, prober);
  c.that("12 delays replayed", report.delays_ms.size() == 12);
  const DelayEstimate e = estimate_delay(report);
  c.near("muER", e.real_evidence, 0.2857, 5e-5);
  c.near("estimate_ms", e.estimate_ms, 11.151, 1e-3);
  c.near("mean_ms", e.mean_ms, 11.147, 1e-3);
  const std::vector<double> printed = {0.4595, 1.0,    0.1622, 0.2027, 0.0676, 0.0,
                                       0.0405, 0.1622, 0.2838, 0.7162, 0.027,  0.2297};
  c.that("normalized vector length", e.normalized.values.size() == printed.size());
  for (std::size_t i = 0; i < std::min(printed.size(), e.normalized.values.size()); ++i) {
    c.near(fmt::format("normalized[{}]", i), e.normalized.values[i], printed[i], 5e-5);
  }
  c.that("printed vector matches to 4 decimals",
         render_rounded_vector(e.normalized.values, 4) ==
             "[0.4595 1. 0.1622 0.2027 0.0676 0. 0.0405 0.1622 0.2838 0.7162 0.027 0.2297]");
}

void fig9_goldens(Checker& c) {
  struct Case {
    RouteMetrics metrics;
    double printed;
    Route route;
  };
  const std::vector<Case> cases = {
      {{40, 60, 50, 70, 20}, 0.556, Route::kA},
      {{10, 20, 20, 95, 20}, 0.500, Route::kKeepCurrent},
      {{20, 30, 40, 60, 40}, 0.454, Route::kB},
  };
  for (const auto& k : cases) {
    const RouteDecision d = select_route(k.metrics);
    const std::string name = fmt::format("({}, {}, {}, {}, {})", k.metrics.rx_jitter_ms,
                                         k.metrics.tx_jitter_ms, k.metrics.round_trip_ms,
                                         k.metrics.processing_pct, k.metrics.packet_loss_pct);
    c.near(name + " muER", d.real_evidence, k.printed, 5e-4);
    c.that(name + " route " + std::string(route_name(k.route)), d.route == k.route);
  }
}

void property_suite(Checker& c) {
  constexpr double eps = 1e-12;
  std::size_t violations = 0;
  auto check_pair = [&](const EvidencePair& pair) {
    const AnalysisResult r = analyze(pair);
    const double dc = r.point.certainty(), dct = r.point.contradiction();
    bool ok = std::abs(dc) + std::abs(dct) <= 1.0 + eps;
    ok = ok && std::abs(r.certainty_interval - r.real_certainty_interval) <= eps;
    for (double v : {r.evidence, r.contradiction_evidence, r.real_evidence,
                     r.real_certainty_interval, r.certainty_interval, r.segment_clamped}) {
      ok = ok && v >= 0.0 && v <= 1.0;
    }
    const AnalysisResult s = analyze(EvidencePair(pair.lam(), pair.mu()));
    ok = ok && std::abs(s.real_evidence - (1.0 - r.real_evidence)) <= eps;
    for (double ftc : {0.3, 0.5, 0.7}) {
      const RegionFlags flags = region_flags(r.point, ControlFactor(ftc));
      ok = ok && flags.count() == 1 && flags[classify(r.point, ControlFactor(ftc))];
    }
    if (!ok) ++violations;
  };

  testing::Gen gen(20260101);
  for (int i = 0; i < 10000; ++i) check_pair(gen.pair());
  testing::for_each_grid_pair(201, check_pair);
  c.that(fmt::format("{} pairs violated a lattice/range/swap/partition property", violations),
         violations == 0);

  std::map<double, std::map<RegionLabel, int>> area;
  testing::for_each_grid_pair(201, [&](const EvidencePair& p) {
    for (double ftc : {0.3, 0.5, 0.7}) ++area[ftc][classify(lattice_map(p), ControlFactor(ftc))];
  });
  auto cells = [&](double ftc, RegionLabel l) { return area[ftc][l]; };
  c.that("t area non-increasing in FtC",
         cells(0.3, RegionLabel::kTrue) >= cells(0.5, RegionLabel::kTrue) &&
             cells(0.5, RegionLabel::kTrue) >= cells(0.7, RegionLabel::kTrue));
  c.that("f area non-increasing in FtC",
         cells(0.3, RegionLabel::kFalse) >= cells(0.5, RegionLabel::kFalse) &&
             cells(0.5, RegionLabel::kFalse) >= cells(0.7, RegionLabel::kFalse));
  c.that("⊤ area shrinks for FtC below 0.5",
         cells(0.3, RegionLabel::kInconsistent) <= cells(0.5, RegionLabel::kInconsistent));
  c.that("⊥ area shrinks for FtC below 0.5",
         cells(0.3, RegionLabel::kParacomplete) <= cells(0.5, RegionLabel::kParacomplete));
}

void oracle_equivalence(Checker& c) {
  testing::Gen gen(777);
  int mismatches = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto values = gen.unit_list(1, 8);
    if (std::abs(reduce(values) - oracle::reduce_by_steps(values)) > 1e-12) ++mismatches;
  }
  c.that(fmt::format("{} of 1000 lists differ from the step-list oracle", mismatches),
         mismatches == 0);

  int unstable = 0;
  for (int i = 0; i < 20; ++i) {
    auto values = gen.unit_list(2, 16);
    const double expected = reduce(values);
    for (int p = 0; p < 100; ++p) {
      std::shuffle(values.begin(), values.end(), gen.engine());
      if (reduce(values) != expected) ++unstable;
    }
  }
  c.that(fmt::format("{} of 2000 permutations changed the result", unstable), unstable == 0);
}

void cli_transcripts(Checker& c) {
  const fs::path scratch = fs::temp_directory_path() / fmt::format("pal2v-acceptance-{}", ::getpid());
  fs::create_directories(scratch);
  struct Run {
    std::string args;
    std::string fixture;
  };
  const std::vector<Run> runs = {
      {"analyze --mu 0.70 --lam 0.60 --ftc 0.5", "fig6_analyze.txt"},
      {"route-select 40 60 50 70 20", "fig9_route_a.txt"},
      {"route-select 10 20 20 95 20", "fig9_route_keep.txt"},
      {"route-select 20 30 40 60 40", "fig9_route_b.txt"},
  };
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const fs::path out = scratch / fmt::format("run{}.txt", i);
    const std::string command = fmt::format("env -u PAL2V_FTC \"{}\" {} > \"{}\"", g_cli,
                                            runs[i].args, out.string());
    const int status = std::system(command.c_str());
    c.that(fmt::format("'{}' exited with status {}", runs[i].args, status), status == 0);
    c.that(fmt::format("'{}' differs from {}", runs[i].args, runs[i].fixture),
           slurp(out) == slurp(g_fixtures / runs[i].fixture));
  }
  fs::remove_all(scratch);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <pal2v-cli> <fixtures-dir>\n";
    return 2;
  }
  g_cli = argv[1];
  g_fixtures = argv[2];

  const std::vector<std::pair<std::string, std::function<void(Checker&)>>> criteria = {
      {"Fig. 6 golden analysis (mu=0.70, lam=0.60)", fig6_golden},
      {"Fig. 7 golden delay extraction", fig7_golden},
      {"Fig. 9 golden route selections", fig9_goldens},
      {"Property suite (10,000 random pairs + 201x201 grid)", property_suite},
      {"Reduce oracle equivalence and permutation invariance", oracle_equivalence},
      {"CLI transcripts diff against fixtures", cli_transcripts},
  };

  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Checker checker;
    try {
      run(checker);
    } catch (const std::exception& e) {
      checker.that(std::string("exception: ") + e.what(), false);
    }
    const bool ok = checker.failures().empty();
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << '\n';
    for (const auto& failure : checker.failures()) std::cout << "       " << failure << '\n';
    if (!ok) ++failed;
  }
  std::cout << fmt::format("{} of {} criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
