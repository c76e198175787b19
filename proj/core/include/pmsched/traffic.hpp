#pragma once

#include <variant>
#include <vector>

#include "pmsched/graph.hpp"
#include "pmsched/priority.hpp"
#include "pmsched/regions.hpp"
#include "pmsched/rng.hpp"

namespace pmsched {

/// Independent Bernoulli arrivals: one packet with probability rate[i], per
/// link per slot.
struct BernoulliArrivals {
  std::vector<double> rates;
};

/// Independent bounded batches: Binomial(batch_limit, rate/batch_limit) per
/// link per slot, so the mean is exactly the configured rate and no slot
/// brings more than batch_limit packets.
struct BatchArrivals {
  std::vector<double> rates;
  int batch_limit = 1;
};

/// Deterministic cyclic pattern: slot t (1-based) delivers
/// pattern[(t - 1) % pattern.size()][link] packets.
struct PeriodicArrivals {
  std::vector<std::vector<int>> pattern;
};

/// Starvation traffic against a fixed priority vector: two conflict-free
/// higher-priority neighbors of `target` alternate one packet each (odd
/// slots feed odd_feeder, even slots feed even_feeder), keeping the target
/// permanently blocked while it receives Bernoulli(epsilon) packets itself.
struct StarvationArrivals {
  int n_links = 0;
  int target = 0;
  int odd_feeder = 0;
  int even_feeder = 0;
  double epsilon = 0.1;
};

using ArrivalProcessSpec =
    std::variant<BernoulliArrivals, BatchArrivals, PeriodicArrivals, StarvationArrivals>;

/// Throws ValidationError unless the spec fits an n_links-link network:
/// rate vectors of the right length with entries in [0, 1], positive batch
/// limit, nonempty pattern with nonnegative entries, feeder/target ids in
/// range and distinct, epsilon in [0, 1].
void validate_arrivals(const ArrivalProcessSpec& spec, int n_links);

/// Largest number of packets a single slot can bring to one link.
int max_batch(const ArrivalProcessSpec& spec);

/// Arrival counts for slot t (1-based).  Arrivals land at the end of the
/// slot: packets arriving in slot t can first be served in slot t + 1.
std::vector<int> next_arrivals(const ArrivalProcessSpec& spec, long long t, Rng& rng);

/// Builds StarvationArrivals from the lowest-id link that has two
/// conflict-free strictly higher-priority neighbors (feeders chosen as the
/// lexicographically first such pair).  Throws ValidationError when no link
/// qualifies; in that case no fixed-priority maximal schedule can be starved
/// this way and prioritized scheduling is throughput-optimal on this graph.
StarvationArrivals make_starvation_arrivals(const InterferenceGraph& g, const PriorityVector& p,
                                            double epsilon = 0.1);

/// Long-run average rates of the process (exact means).
RateVector mean_rates(const ArrivalProcessSpec& spec);

struct CumulativeCounters {
  std::vector<long long> arrivals;    // A(t), per link
  std::vector<long long> departures;  // D(t), per link
  long long t = 0;
};

/// Empirical rate estimate at the start of frame l (l >= 2): cumulative
/// arrivals divided by elapsed slots.  The counters must be a snapshot taken
/// exactly at t = (l-1) * frame_length; throws ValidationError otherwise.
RateVector estimate_rates(const CumulativeCounters& counters, long long frame,
                          long long frame_length);

}  // namespace pmsched
