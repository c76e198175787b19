// Microbenchmarks for the hot paths: per-slot schedulers, the exact searches,
// the greedy assignment, and end-to-end simulation throughput.
#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "pmsched/engine.hpp"
#include "pmsched/graph.hpp"
#include "pmsched/priority.hpp"
#include "pmsched/regions.hpp"
#include "pmsched/rng.hpp"
#include "pmsched/sched.hpp"
#include "pmsched/traffic.hpp"

using namespace pmsched;

namespace {

InterferenceGraph guard_zone(int n, std::uint64_t seed) {
  return generate_topology(GuardZoneTopology{n, 1.0, 1.0, 0.35, seed});
}

QueueState random_queues(const InterferenceGraph& g, std::uint64_t seed) {
  Rng rng(seed);
  QueueState q(static_cast<std::size_t>(g.n_links()));
  for (auto& v : q) v = rng.uniform_int(12);
  return q;
}

void bm_priority_schedule(benchmark::State& state) {
  const InterferenceGraph g = guard_zone(static_cast<int>(state.range(0)), 11);
  const PriorityVector p = identity_priorities(g.n_links());
  const QueueState q = random_queues(g, 13);
  for (auto _ : state) {
    benchmark::DoNotOptimize(schedule_priority_maximal(g, p, q));
  }
}

void bm_lqf_schedule(benchmark::State& state) {
  const InterferenceGraph g = guard_zone(static_cast<int>(state.range(0)), 11);
  const QueueState q = random_queues(g, 13);
  for (auto _ : state) {
    benchmark::DoNotOptimize(schedule_lqf(g, q));
  }
}

void bm_max_weight_schedule(benchmark::State& state) {
  const InterferenceGraph g = guard_zone(static_cast<int>(state.range(0)), 11);
  const QueueState q = random_queues(g, 13);
  for (auto _ : state) {
    benchmark::DoNotOptimize(schedule_max_weight(g, q));
  }
}

void bm_max_independent_set(benchmark::State& state) {
  const InterferenceGraph g = guard_zone(static_cast<int>(state.range(0)), 17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_independent_set_size(g));
  }
}

void bm_min_prioritized_degree(benchmark::State& state) {
  const InterferenceGraph g = guard_zone(static_cast<int>(state.range(0)), 19);
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_prioritized_interference_degree(g));
  }
}

void bm_assign_priorities(benchmark::State& state) {
  const InterferenceGraph g = guard_zone(static_cast<int>(state.range(0)), 23);
  Rng rng(29);
  std::vector<double> rates(static_cast<std::size_t>(g.n_links()));
  for (auto& r : rates) r = 0.2 * rng.uniform01();
  for (auto _ : state) {
    benchmark::DoNotOptimize(assign_priorities(g, rates));
  }
}

void bm_simulation_throughput(benchmark::State& state) {
  SimConfig cfg;
  cfg.graph = generate_topology(CliqueIntersectionTopology{2, 6});
  cfg.scheduler = PriorityMaximalScheduler{identity_priorities(cfg.graph.n_links())};
  std::vector<double> rates(static_cast<std::size_t>(cfg.graph.n_links()), 0.08);
  rates[0] = 0.5;
  cfg.arrivals = BernoulliArrivals{std::move(rates)};
  cfg.horizon = state.range(0);
  cfg.seed = 31;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_simulation(cfg));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bm_online_simulation_throughput(benchmark::State& state) {
  SimConfig cfg;
  cfg.graph = generate_topology(CliqueIntersectionTopology{2, 6});
  cfg.scheduler = PriorityMaximalScheduler{identity_priorities(cfg.graph.n_links())};
  std::vector<double> rates(static_cast<std::size_t>(cfg.graph.n_links()), 0.08);
  rates[0] = 0.5;
  cfg.arrivals = BernoulliArrivals{std::move(rates)};
  cfg.horizon = state.range(0);
  cfg.frame_length = 100;
  cfg.online = true;
  cfg.seed = 31;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_simulation(cfg));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(bm_priority_schedule)->Arg(11)->Arg(16)->Arg(24);
BENCHMARK(bm_lqf_schedule)->Arg(11)->Arg(16)->Arg(24);
BENCHMARK(bm_max_weight_schedule)->Arg(11)->Arg(16)->Arg(24);
BENCHMARK(bm_max_independent_set)->Arg(12)->Arg(18)->Arg(24);
BENCHMARK(bm_min_prioritized_degree)->Arg(8)->Arg(10)->Arg(12);
BENCHMARK(bm_assign_priorities)->Arg(12)->Arg(24);
BENCHMARK(bm_simulation_throughput)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_online_simulation_throughput)->Arg(10000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
