#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "pmsched/graph.hpp"
#include "pmsched/priority.hpp"
#include "pmsched/sched.hpp"
#include "pmsched/traffic.hpp"

namespace pmsched {

/// Greedy maximal scheduler scanning links by fixed priority value.
struct PriorityMaximalScheduler {
  PriorityVector priority;
};

/// Greedy maximal scheduler scanning links in a fixed id permutation.
struct FixedOrderScheduler {
  std::vector<int> order;
};

/// Longest-queue-first greedy maximal scheduler.
struct LqfScheduler {};

/// Exact maximum-weight (queue-length-weighted) scheduler.
struct MaxWeightScheduler {};

using SchedulerSpec =
    std::variant<PriorityMaximalScheduler, FixedOrderScheduler, LqfScheduler, MaxWeightScheduler>;

struct SimConfig {
  InterferenceGraph graph;
  SchedulerSpec scheduler;
  ArrivalProcessSpec arrivals;
  long long horizon = 1;
  long long frame_length = 100;
  /// Re-estimate arrival rates at each frame boundary and reassign priorities
  /// whenever the estimate leaves the region guaranteed by the current
  /// vector.  Requires a PriorityMaximalScheduler (its priority is the
  /// first-frame vector).
  bool online = false;
  QueueState initial_queues;  // empty means all zero
  std::uint64_t seed = 0;
  /// Check per-slot schedule invariants (independence, backlogged-only,
  /// maximality, scan-order coverage).  Slow; for tests.
  bool validate_slots = false;
};

struct PriorityChange {
  long long frame = 1;
  PriorityVector priority;
  bool operator==(const PriorityChange&) const = default;
};

struct SimResult {
  long long horizon = 0;
  QueueState final_queues;
  QueueState max_queues;  // per-link peak backlog over all slots
  std::vector<long long> arrivals_total;
  std::vector<long long> departures_total;
  /// |arrivals/horizon - departures/horizon| per link.
  std::vector<double> stability_gaps;
  /// Decimated trajectory: queue/arrival/departure snapshots at sample_slots,
  /// taken after the slot completes (arrivals included).
  std::vector<long long> sample_slots;
  std::vector<QueueState> queue_samples;
  std::vector<std::vector<long long>> arrival_samples;
  std::vector<std::vector<long long>> departure_samples;
  /// First entry is (frame 1, initial priority); later entries only when the
  /// vector actually changed.  Empty for non-priority schedulers.
  std::vector<PriorityChange> priority_history;
};

/// Runs the slotted loop: per slot, (a) schedule from current queues,
/// (b) scheduled links each depart one packet, (c) arrivals land at the end
/// of the slot, (d) on frame boundaries with online enabled, the priority
/// vector for the next frame is chosen from the cumulative rate estimate.
/// Deterministic: identical config (seed included) gives identical results.
SimResult run_simulation(const SimConfig& cfg);

/// Keeps `current` when the cumulative estimate lies in its guaranteed
/// region; otherwise runs the greedy assignment on the estimate.  `counters`
/// must be a snapshot at the end of frame `frame - 1`.
PriorityVector online_priority_update(const InterferenceGraph& g, const PriorityVector& current,
                                      const CumulativeCounters& counters, long long frame,
                                      long long frame_length);

/// |A_i(h)/h - D_i(h)/h| per link.
std::vector<double> rate_stability_gaps(const SimResult& r);

struct MetricStats {
  double mean = 0.0;
  double ci95 = 0.0;  // 95% confidence half-width (t quantile below 30 runs)
  double min = 0.0;
  double max = 0.0;
};

/// Mean, 95% normal/t confidence half-width, min, max of a sample.
MetricStats summarize(const std::vector<double>& xs);

struct ReplicationReport {
  int runs = 0;
  MetricStats max_queue;       // per-run max over links and slots
  MetricStats final_queue;     // per-run max over links at horizon
  MetricStats stability_gap;   // per-run max over links
  std::vector<MetricStats> max_queue_per_link;
  std::vector<MetricStats> final_queue_per_link;
  std::vector<MetricStats> gap_per_link;
  /// Per run: frame of the last priority change (1 when the vector never
  /// changed).  Empty for non-priority schedulers.
  std::vector<long long> last_priority_change_frame;
  std::vector<PriorityVector> final_priority;                   // per run
  std::vector<std::vector<PriorityChange>> priority_histories;  // per run
};

/// `runs` independent simulations with seeds cfg.seed ^ run_index
/// (0-based).  Runs may execute on up to max_threads worker threads
/// (0 = hardware concurrency); aggregation is by run index, so the report
/// does not depend on thread timing.  Throws ValidationError when runs < 2.
ReplicationReport replicate(const SimConfig& cfg, int runs, int max_threads = 0);

}  // namespace pmsched
