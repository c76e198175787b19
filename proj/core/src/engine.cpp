#include "pmsched/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

#include "pmsched/errors.hpp"
#include "pmsched/regions.hpp"
#include "pmsched/rng.hpp"

namespace pmsched {

namespace {

// Two-sided 95% Student t quantiles for df = 1..29; beyond that the normal
// quantile is close enough.
constexpr double kT95[29] = {12.706, 4.303, 3.182, 2.776, 2.571, 2.447, 2.365, 2.306,
                             2.262,  2.228, 2.201, 2.179, 2.160, 2.145, 2.131, 2.120,
                             2.110,  2.101, 2.093, 2.086, 2.080, 2.074, 2.069, 2.064,
                             2.060,  2.056, 2.052, 2.048, 2.045};
constexpr double kZ95 = 1.959964;

void check_slot_invariants(const InterferenceGraph& g, const Schedule& s, const QueueState& q,
                           const std::vector<int>* order, long long t) {
  const int n = g.n_links();
  for (int i = 0; i < n; ++i) {
    if (!s.contains(i)) continue;
    if (q[static_cast<std::size_t>(i)] <= 0)
      throw std::logic_error("slot " + std::to_string(t) + ": empty link " + std::to_string(i) +
                             " scheduled");
    for (int j : g.adj(i)) {
      if (j > i && s.contains(j))
        throw std::logic_error("slot " + std::to_string(t) + ": conflicting links " +
                               std::to_string(i) + "," + std::to_string(j) + " both scheduled");
    }
  }
  for (int i = 0; i < n; ++i) {
    if (s.contains(i) || q[static_cast<std::size_t>(i)] <= 0) continue;
    bool blocked = false;
    for (int j : g.adj(i)) {
      if (s.contains(j)) {
        blocked = true;
        break;
      }
    }
    if (!blocked)
      throw std::logic_error("slot " + std::to_string(t) + ": schedule not maximal at link " +
                             std::to_string(i));
  }
  if (order && !covers_backlogged(g, *order, q, s))
    throw std::logic_error("slot " + std::to_string(t) +
                           ": backlogged link with no earlier-scanned scheduled neighbor");
}

}  // namespace

PriorityVector online_priority_update(const InterferenceGraph& g, const PriorityVector& current,
                                      const CumulativeCounters& counters, long long frame,
                                      long long frame_length) {
  const RateVector est = estimate_rates(counters, frame, frame_length);
  if (in_priority_region(g, current, est).member) return current;
  return assign_priorities(g, est).priority;
}

SimResult run_simulation(const SimConfig& cfg) {
  const InterferenceGraph& g = cfg.graph;
  const int n = g.n_links();
  if (cfg.horizon < 1) throw ValidationError("horizon must be at least 1 slot");
  validate_arrivals(cfg.arrivals, n);

  const auto* priority_sched = std::get_if<PriorityMaximalScheduler>(&cfg.scheduler);
  if (priority_sched) {
    validate_priorities(g, priority_sched->priority);
  } else if (cfg.online) {
    throw ValidationError("online priority updates require the priority-based scheduler");
  }
  if (cfg.online && cfg.frame_length < 1) throw ValidationError("frame length must be positive");
  if (std::holds_alternative<MaxWeightScheduler>(cfg.scheduler) && n > kExactSearchLimit)
    throw SizeLimitError("max-weight scheduling limited to " + std::to_string(kExactSearchLimit) +
                         " links, got " + std::to_string(n));

  QueueState q(static_cast<std::size_t>(n), 0);
  if (!cfg.initial_queues.empty()) {
    if (static_cast<int>(cfg.initial_queues.size()) != n)
      throw ValidationError("initial queue vector size does not match link count");
    for (long long v : cfg.initial_queues)
      if (v < 0) throw ValidationError("negative initial queue");
    q = cfg.initial_queues;
  }
  const QueueState q0 = q;

  SimResult res;
  res.horizon = cfg.horizon;
  res.max_queues = q;
  res.arrivals_total.assign(static_cast<std::size_t>(n), 0);
  res.departures_total.assign(static_cast<std::size_t>(n), 0);

  PriorityVector p;
  if (priority_sched) {
    p = priority_sched->priority;
    res.priority_history.push_back({1, p});
  }
  const auto* fixed_sched = std::get_if<FixedOrderScheduler>(&cfg.scheduler);

  std::vector<int> scan;  // current scan order, for invariant checks only
  if (cfg.validate_slots) {
    if (priority_sched) scan = priority_scan_order(p);
    if (fixed_sched) scan = fixed_sched->order;
  }

  const long long stride = std::max<long long>(1, (cfg.horizon + 9999) / 10000);
  const std::size_t approx_samples = static_cast<std::size_t>(cfg.horizon / stride + 2);
  res.sample_slots.reserve(approx_samples);
  res.queue_samples.reserve(approx_samples);
  res.arrival_samples.reserve(approx_samples);
  res.departure_samples.reserve(approx_samples);

  Rng rng(cfg.seed);
  for (long long t = 1; t <= cfg.horizon; ++t) {
    Schedule s = std::visit(
        [&](const auto& sched) -> Schedule {
          using T = std::decay_t<decltype(sched)>;
          if constexpr (std::is_same_v<T, PriorityMaximalScheduler>)
            return schedule_priority_maximal(g, p, q);
          else if constexpr (std::is_same_v<T, FixedOrderScheduler>)
            return schedule_fixed_maximal(g, sched.order, q);
          else if constexpr (std::is_same_v<T, LqfScheduler>)
            return schedule_lqf(g, q);
          else
            return schedule_max_weight(g, q);
        },
        cfg.scheduler);

    if (cfg.validate_slots) {
      std::vector<int> lqf_order;
      const std::vector<int>* order = nullptr;
      if (priority_sched || fixed_sched) {
        order = &scan;
      } else if (std::holds_alternative<LqfScheduler>(cfg.scheduler)) {
        lqf_order = lqf_scan_order(q);
        order = &lqf_order;
      }
      check_slot_invariants(g, s, q, order, t);
    }

    for (int i = 0; i < n; ++i) {
      if (s.contains(i)) {
        --q[static_cast<std::size_t>(i)];
        ++res.departures_total[static_cast<std::size_t>(i)];
      }
    }
    const std::vector<int> a = next_arrivals(cfg.arrivals, t, rng);
    for (int i = 0; i < n; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      q[idx] += a[idx];
      res.arrivals_total[idx] += a[idx];
      if (q[idx] > res.max_queues[idx]) res.max_queues[idx] = q[idx];
    }

    if (cfg.validate_slots) {
      for (int i = 0; i < n; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        if (q[idx] != q0[idx] + res.arrivals_total[idx] - res.departures_total[idx])
          throw std::logic_error("slot " + std::to_string(t) + ": queue conservation broken");
      }
    }

    if (t % stride == 0 || t == cfg.horizon) {
      res.sample_slots.push_back(t);
      res.queue_samples.push_back(q);
      res.arrival_samples.push_back(res.arrivals_total);
      res.departure_samples.push_back(res.departures_total);
    }

    if (cfg.online && t % cfg.frame_length == 0) {
      const long long frame = t / cfg.frame_length + 1;
      CumulativeCounters counters{res.arrivals_total, res.departures_total, t};
      PriorityVector next = online_priority_update(g, p, counters, frame, cfg.frame_length);
      if (!(next == p)) {
        p = std::move(next);
        if (cfg.validate_slots) scan = priority_scan_order(p);
        res.priority_history.push_back({frame, p});
      }
    }
  }

  res.final_queues = q;
  res.stability_gaps = rate_stability_gaps(res);
  return res;
}

std::vector<double> rate_stability_gaps(const SimResult& r) {
  std::vector<double> gaps(r.arrivals_total.size(), 0.0);
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    gaps[i] = std::abs(static_cast<double>(r.arrivals_total[i] - r.departures_total[i])) /
              static_cast<double>(r.horizon);
  }
  return gaps;
}

MetricStats summarize(const std::vector<double>& xs) {
  MetricStats m;
  if (xs.empty()) return m;
  const auto n = static_cast<int>(xs.size());
  m.min = *std::min_element(xs.begin(), xs.end());
  m.max = *std::max_element(xs.begin(), xs.end());
  m.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  if (n < 2) return m;
  double ss = 0.0;
  for (double x : xs) ss += (x - m.mean) * (x - m.mean);
  const double sd = std::sqrt(ss / (n - 1));
  const double quantile = n < 30 ? kT95[static_cast<std::size_t>(n - 2)] : kZ95;
  m.ci95 = quantile * sd / std::sqrt(static_cast<double>(n));
  return m;
}

ReplicationReport replicate(const SimConfig& cfg, int runs, int max_threads) {
  if (runs < 2) throw ValidationError("confidence intervals need at least 2 runs");
  std::vector<SimResult> results(static_cast<std::size_t>(runs));
  std::atomic<int> next{0};
  std::exception_ptr err;
  std::mutex err_mu;

  auto work = [&] {
    for (;;) {
      const int r = next.fetch_add(1);
      if (r >= runs) return;
      try {
        SimConfig run_cfg = cfg;
        run_cfg.seed = cfg.seed ^ static_cast<std::uint64_t>(r);
        SimResult out = run_simulation(run_cfg);
        // The report never reads trajectories; drop them to bound memory.
        out.sample_slots.clear();
        out.sample_slots.shrink_to_fit();
        out.queue_samples.clear();
        out.queue_samples.shrink_to_fit();
        out.arrival_samples.clear();
        out.arrival_samples.shrink_to_fit();
        out.departure_samples.clear();
        out.departure_samples.shrink_to_fit();
        results[static_cast<std::size_t>(r)] = std::move(out);
      } catch (...) {
        {
          std::lock_guard<std::mutex> lk(err_mu);
          if (!err) err = std::current_exception();
        }
        next.store(runs);  // stop the other workers
        return;
      }
    }
  };

  const unsigned hw = std::thread::hardware_concurrency();
  int workers = max_threads > 0 ? max_threads : static_cast<int>(hw ? hw : 1);
  workers = std::min(workers, runs);
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (err) std::rethrow_exception(err);

  const int n = cfg.graph.n_links();
  ReplicationReport rep;
  rep.runs = runs;

  std::vector<double> max_q(static_cast<std::size_t>(runs));
  std::vector<double> final_q(static_cast<std::size_t>(runs));
  std::vector<double> gap(static_cast<std::size_t>(runs));
  for (int r = 0; r < runs; ++r) {
    const SimResult& s = results[static_cast<std::size_t>(r)];
    long long mq = 0, fq = 0;
    double gp = 0.0;
    for (int i = 0; i < n; ++i) {
      mq = std::max(mq, s.max_queues[static_cast<std::size_t>(i)]);
      fq = std::max(fq, s.final_queues[static_cast<std::size_t>(i)]);
      gp = std::max(gp, s.stability_gaps[static_cast<std::size_t>(i)]);
    }
    max_q[static_cast<std::size_t>(r)] = static_cast<double>(mq);
    final_q[static_cast<std::size_t>(r)] = static_cast<double>(fq);
    gap[static_cast<std::size_t>(r)] = gp;
  }
  rep.max_queue = summarize(max_q);
  rep.final_queue = summarize(final_q);
  rep.stability_gap = summarize(gap);

  std::vector<double> col(static_cast<std::size_t>(runs));
  for (int i = 0; i < n; ++i) {
    for (int r = 0; r < runs; ++r)
      col[static_cast<std::size_t>(r)] =
          static_cast<double>(results[static_cast<std::size_t>(r)].max_queues[static_cast<std::size_t>(i)]);
    rep.max_queue_per_link.push_back(summarize(col));
    for (int r = 0; r < runs; ++r)
      col[static_cast<std::size_t>(r)] =
          static_cast<double>(results[static_cast<std::size_t>(r)].final_queues[static_cast<std::size_t>(i)]);
    rep.final_queue_per_link.push_back(summarize(col));
    for (int r = 0; r < runs; ++r)
      col[static_cast<std::size_t>(r)] =
          results[static_cast<std::size_t>(r)].stability_gaps[static_cast<std::size_t>(i)];
    rep.gap_per_link.push_back(summarize(col));
  }

  if (std::holds_alternative<PriorityMaximalScheduler>(cfg.scheduler)) {
    for (int r = 0; r < runs; ++r) {
      auto& hist = results[static_cast<std::size_t>(r)].priority_history;
      rep.last_priority_change_frame.push_back(hist.back().frame);
      rep.final_priority.push_back(hist.back().priority);
      rep.priority_histories.push_back(std::move(hist));
    }
  }
  return rep;
}

}  // namespace pmsched
