#include "pmsched/traffic.hpp"

#include <algorithm>
#include <string>

#include "pmsched/errors.hpp"

namespace pmsched {

namespace {

void check_rate_vector(const std::vector<double>& rates, int n_links) {
  if (static_cast<int>(rates.size()) != n_links)
    throw ValidationError("arrival rates: expected " + std::to_string(n_links) + " entries, got " +
                          std::to_string(rates.size()));
  for (std::size_t i = 0; i < rates.size(); ++i) {
    if (!(rates[i] >= 0.0) || rates[i] > 1.0)
      throw ValidationError("arrival rate for link " + std::to_string(i) + " outside [0, 1]");
  }
}

}  // namespace

void validate_arrivals(const ArrivalProcessSpec& spec, int n_links) {
  if (const auto* b = std::get_if<BernoulliArrivals>(&spec)) {
    check_rate_vector(b->rates, n_links);
    return;
  }
  if (const auto* b = std::get_if<BatchArrivals>(&spec)) {
    check_rate_vector(b->rates, n_links);
    if (b->batch_limit < 1) throw ValidationError("batch limit must be at least 1");
    return;
  }
  if (const auto* p = std::get_if<PeriodicArrivals>(&spec)) {
    if (p->pattern.empty()) throw ValidationError("periodic pattern must have at least one slot");
    for (const auto& row : p->pattern) {
      if (static_cast<int>(row.size()) != n_links)
        throw ValidationError("periodic pattern row length does not match link count");
      for (int v : row)
        if (v < 0) throw ValidationError("periodic pattern entries must be nonnegative");
    }
    return;
  }
  const auto& s = std::get<StarvationArrivals>(spec);
  if (s.n_links != n_links) throw ValidationError("starvation traffic built for a different network size");
  for (int id : {s.target, s.odd_feeder, s.even_feeder})
    if (id < 0 || id >= n_links) throw ValidationError("starvation traffic link id out of range");
  if (s.target == s.odd_feeder || s.target == s.even_feeder || s.odd_feeder == s.even_feeder)
    throw ValidationError("starvation traffic needs three distinct links");
  if (!(s.epsilon >= 0.0) || s.epsilon > 1.0)
    throw ValidationError("starvation epsilon outside [0, 1]");
}

int max_batch(const ArrivalProcessSpec& spec) {
  if (std::holds_alternative<BernoulliArrivals>(spec)) return 1;
  if (const auto* b = std::get_if<BatchArrivals>(&spec)) return b->batch_limit;
  if (const auto* p = std::get_if<PeriodicArrivals>(&spec)) {
    int m = 0;
    for (const auto& row : p->pattern)
      for (int v : row) m = std::max(m, v);
    return m;
  }
  return 1;
}

std::vector<int> next_arrivals(const ArrivalProcessSpec& spec, long long t, Rng& rng) {
  if (const auto* b = std::get_if<BernoulliArrivals>(&spec)) {
    std::vector<int> a(b->rates.size(), 0);
    for (std::size_t i = 0; i < b->rates.size(); ++i) a[i] = rng.bernoulli(b->rates[i]) ? 1 : 0;
    return a;
  }
  if (const auto* b = std::get_if<BatchArrivals>(&spec)) {
    std::vector<int> a(b->rates.size(), 0);
    for (std::size_t i = 0; i < b->rates.size(); ++i) {
      const double q = b->rates[i] / b->batch_limit;
      int count = 0;
      for (int k = 0; k < b->batch_limit; ++k) count += rng.bernoulli(q) ? 1 : 0;
      a[i] = count;
    }
    return a;
  }
  if (const auto* p = std::get_if<PeriodicArrivals>(&spec)) {
    const auto period = static_cast<long long>(p->pattern.size());
    return p->pattern[static_cast<std::size_t>((t - 1) % period)];
  }
  const auto& s = std::get<StarvationArrivals>(spec);
  std::vector<int> a(s.n_links, 0);
  a[t % 2 == 1 ? s.odd_feeder : s.even_feeder] = 1;
  if (rng.bernoulli(s.epsilon)) a[s.target] += 1;
  return a;
}

StarvationArrivals make_starvation_arrivals(const InterferenceGraph& g, const PriorityVector& p,
                                            double epsilon) {
  validate_priorities(g, p);
  for (int i = 0; i < g.n_links(); ++i) {
    const std::vector<int> stronger = higher_priority_neighbors(g, p, i).ids();
    for (std::size_t a = 0; a < stronger.size(); ++a) {
      for (std::size_t b = a + 1; b < stronger.size(); ++b) {
        if (!g.adjacent(stronger[a], stronger[b])) {
          StarvationArrivals s;
          s.n_links = g.n_links();
          s.target = i;
          s.odd_feeder = stronger[a];
          s.even_feeder = stronger[b];
          s.epsilon = epsilon;
          return s;
        }
      }
    }
  }
  throw ValidationError(
      "no link has two conflict-free higher-priority neighbors; "
      "this priority assignment cannot be starved by alternating feeders");
}

RateVector mean_rates(const ArrivalProcessSpec& spec) {
  if (const auto* b = std::get_if<BernoulliArrivals>(&spec)) return b->rates;
  if (const auto* b = std::get_if<BatchArrivals>(&spec)) return b->rates;
  if (const auto* p = std::get_if<PeriodicArrivals>(&spec)) {
    RateVector mean(p->pattern.front().size(), 0.0);
    for (const auto& row : p->pattern)
      for (std::size_t i = 0; i < row.size(); ++i) mean[i] += row[i];
    for (double& v : mean) v /= static_cast<double>(p->pattern.size());
    return mean;
  }
  const auto& s = std::get<StarvationArrivals>(spec);
  RateVector mean(s.n_links, 0.0);
  mean[s.odd_feeder] = 0.5;
  mean[s.even_feeder] = 0.5;
  mean[s.target] = s.epsilon;
  return mean;
}

RateVector estimate_rates(const CumulativeCounters& counters, long long frame,
                          long long frame_length) {
  if (frame < 2) throw ValidationError("rate estimates exist only from the second frame on");
  if (frame_length < 1) throw ValidationError("frame length must be positive");
  const long long expected = (frame - 1) * frame_length;
  if (counters.t != expected)
    throw ValidationError("counter snapshot at t=" + std::to_string(counters.t) +
                          " does not match start of frame " + std::to_string(frame) + " (t=" +
                          std::to_string(expected) + ")");
  RateVector est(counters.arrivals.size(), 0.0);
  for (std::size_t i = 0; i < est.size(); ++i)
    est[i] = static_cast<double>(counters.arrivals[i]) / static_cast<double>(counters.t);
  return est;
}

}  // namespace pmsched
