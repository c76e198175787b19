#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pmsched/engine.hpp"
#include "pmsched/graph.hpp"
#include "pmsched/rational.hpp"

namespace pmsched {

enum class TrafficKind { bernoulli, batch, periodic, starvation };

struct SchedulerChoice {
  std::string name;  // label used in CSV output
  SchedulerSpec spec;
  bool online = false;
};

struct SweepPoint {
  std::string label;            // value shown in the CSV sweep column
  std::vector<Rational> rates;  // exact per-link rates
};

/// A full experiment: one topology, an arrival model, a grid of rate
/// vectors, and a set of schedulers to compare on identical arrival streams.
struct ScenarioConfig {
  std::string name = "scenario";
  TopologySpec topology;
  InterferenceGraph graph;  // materialized from `topology`
  TrafficKind traffic = TrafficKind::bernoulli;
  int batch_limit = 1;
  std::vector<std::vector<int>> periodic_pattern;
  Rational starvation_epsilon = Rational(1, 10);
  std::vector<SweepPoint> sweep;
  std::vector<SchedulerChoice> schedulers;
  long long horizon = 100000;
  long long frame_length = 100;
  int runs = 30;
  std::uint64_t seed = 1;
  std::string out_dir = ".";
  /// Rate vectors whose region memberships `analyze` reports.
  std::vector<std::vector<Rational>> analyze_rates;
};

std::vector<std::string> builtin_scenario_names();

/// One of the embedded experiments: "two-clique" (11 links, bottleneck rate
/// sweep at 99% clique load), "star" (8 peripherals, hub-highest vs
/// hub-lowest priority, uniform rate sweep) or "random8" (seeded guard-zone
/// placement, uniform sweep, max-weight benchmark included).  Throws
/// ValidationError for unknown names.
ScenarioConfig builtin_scenario(const std::string& name);

/// Parses a JSON config document.  Malformed JSON, missing/mistyped fields
/// throw ParseError; structurally sound configs with bad values (rates
/// outside [0,1], wrong dimensions, invalid priorities) throw
/// ValidationError.
ScenarioConfig parse_scenario_json(const std::string& text);

/// Loads `source` as a file path when such a file exists, otherwise as a
/// builtin scenario name.  Throws ParseError when it is neither.
ScenarioConfig load_scenario(const std::string& source);

struct ScenarioOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<int> runs;
  std::optional<long long> horizon;
  std::optional<std::string> out_dir;
  std::optional<std::string> scheduler;  // keep only the scheduler with this name
};

void apply_overrides(ScenarioConfig& cfg, const ScenarioOverrides& o);

struct ScenarioOutput {
  std::string metrics_csv;
  std::string priority_csv;  // empty when no scheduler runs online
};

/// Replicates every (sweep point, scheduler) cell and writes
/// <name>_metrics.csv (columns scenario,sweep,scheduler,metric,mean,ci95,runs)
/// plus <name>_priority_history.csv (scenario,sweep,scheduler,run,frame,link,
/// value) when any scheduler is online.  Output is byte-identical across
/// invocations with the same config.  `log` receives one progress line per
/// cell.
ScenarioOutput run_scenario(const ScenarioConfig& cfg, std::ostream& log);

struct AnalysisOutput {
  std::string csv_path;
};

/// Reports topology metrics (conflict counts, acyclicity, interference
/// degrees with witness priority) and, for each configured analysis rate
/// vector, region memberships with violated links, in exact arithmetic.
/// Text goes to `log`; machine-readable rows (metric,link,value) go to
/// <name>_analysis.csv.  Metrics beyond the exact-search size limits are
/// skipped and noted in the text output.
AnalysisOutput analyze_scenario(const ScenarioConfig& cfg, std::ostream& log);

}  // namespace pmsched
