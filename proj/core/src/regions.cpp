#include "pmsched/regions.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

namespace pmsched {

DegreeReport interference_degree(const InterferenceGraph& g) {
  DegreeReport rep;
  rep.per_link.resize(static_cast<std::size_t>(g.n_links()));
  for (int i = 0; i < g.n_links(); ++i) {
    LinkSet closed = g.neighbors(i);
    closed.insert(i);
    auto sub = induced_subgraph(g, closed);
    int d = max_independent_set_size(sub.graph);
    rep.per_link[static_cast<std::size_t>(i)] = d;
    rep.overall = std::max(rep.overall, d);
  }
  return rep;
}

DegreeReport prioritized_interference_degree(const InterferenceGraph& g, const PriorityVector& p) {
  if (p.size() != g.n_links()) throw ValidationError("priority vector size mismatch");
  DegreeReport rep;
  rep.per_link.resize(static_cast<std::size_t>(g.n_links()));
  for (int i = 0; i < g.n_links(); ++i) {
    LinkSet closed = higher_priority_neighbors(g, p, i);
    closed.insert(i);
    auto sub = induced_subgraph(g, closed);
    int d = max_independent_set_size(sub.graph);
    rep.per_link[static_cast<std::size_t>(i)] = d;
    rep.overall = std::max(rep.overall, d);
  }
  return rep;
}

namespace {

// exact max independent set size restricted to `cand`, masks precomputed;
// branches only on vertices that still conflict inside cand
int mis_within(const std::vector<std::uint32_t>& nbr, std::uint32_t cand) {
  std::uint32_t scan = cand;
  while (scan != 0) {
    int v = std::countr_zero(scan);
    std::uint32_t bit = std::uint32_t{1} << v;
    scan &= ~bit;
    if ((nbr[static_cast<std::size_t>(v)] & cand) == 0) continue;  // isolated inside cand
    int with = 1 + mis_within(nbr, cand & ~(nbr[static_cast<std::size_t>(v)] | bit));
    int without = mis_within(nbr, cand & ~bit);
    return std::max(with, without);
  }
  return std::popcount(cand);  // cand is independent
}

std::vector<std::uint32_t> masks_of(const InterferenceGraph& g) {
  std::vector<std::uint32_t> nbr(static_cast<std::size_t>(g.n_links()), 0);
  for (int i = 0; i < g.n_links(); ++i) {
    for (int j : g.adj(i)) nbr[static_cast<std::size_t>(i)] |= std::uint32_t{1} << j;
  }
  return nbr;
}

PriorityVector priorities_from_elimination(std::span<const int> order) {
  const int n = static_cast<int>(order.size());
  PriorityVector p{std::vector<int>(static_cast<std::size_t>(n), 0)};
  for (int t = 0; t < n; ++t) {
    p.values[static_cast<std::size_t>(order[static_cast<std::size_t>(t)])] = n - t;
  }
  return p;
}

}  // namespace

DegreeSearchResult min_prioritized_interference_degree(const InterferenceGraph& g) {
  const int n = g.n_links();
  if (n > kEliminationSearchLimit) {
    throw SizeLimitError("elimination search limited to " + std::to_string(kEliminationSearchLimit) +
                         " links, got " + std::to_string(n));
  }
  if (n == 0) return {0, PriorityVector{}};
  auto nbr = masks_of(g);
  const std::size_t table = std::size_t{1} << n;
  // best[S] = min over elimination orders of S of the worst step degree,
  // where removing i from S costs the independent-set size of i's closed
  // neighborhood inside S.  Subsets come before their supersets numerically.
  std::vector<std::int8_t> best(table, 0);
  std::vector<std::int8_t> choice(table, -1);
  for (std::uint32_t s = 1; s < table; ++s) {
    int best_val = n + 1;
    int best_i = -1;
    for (int i = 0; i < n; ++i) {
      std::uint32_t bit = std::uint32_t{1} << i;
      if (!(s & bit)) continue;
      std::uint32_t closed = (nbr[static_cast<std::size_t>(i)] & s) | bit;
      int step = mis_within(nbr, closed);
      int rest = best[s & ~bit];
      int val = std::max(step, rest);
      if (val < best_val) {
        best_val = val;
        best_i = i;
      }
    }
    best[s] = static_cast<std::int8_t>(best_val);
    choice[s] = static_cast<std::int8_t>(best_i);
  }
  std::uint32_t all = static_cast<std::uint32_t>(table - 1);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  for (std::uint32_t s = all; s != 0;) {
    int i = choice[s];
    order.push_back(i);
    s &= ~(std::uint32_t{1} << i);
  }
  return {best[all], priorities_from_elimination(order)};
}

DegreeSearchResult min_prioritized_interference_degree_greedy(const InterferenceGraph& g) {
  const int n = g.n_links();
  if (n > kExactSearchLimit) {
    throw SizeLimitError("greedy elimination limited to " + std::to_string(kExactSearchLimit) +
                         " links, got " + std::to_string(n));
  }
  if (n == 0) return {0, PriorityVector{}};
  auto nbr = masks_of(g);
  std::uint32_t remaining = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
  std::vector<int> order;
  int worst = 0;
  while (remaining != 0) {
    int pick = -1;
    int pick_step = n + 1;
    for (int i = 0; i < n; ++i) {
      std::uint32_t bit = std::uint32_t{1} << i;
      if (!(remaining & bit)) continue;
      std::uint32_t closed = (nbr[static_cast<std::size_t>(i)] & remaining) | bit;
      int step = mis_within(nbr, closed);
      if (step < pick_step) {
        pick_step = step;
        pick = i;
      }
    }
    worst = std::max(worst, pick_step);
    order.push_back(pick);
    remaining &= ~(std::uint32_t{1} << pick);
  }
  return {worst, priorities_from_elimination(order)};
}

RateVector mix_independent_sets(const InterferenceGraph& g, std::span<const LinkSet> sets,
                                std::span<const double> weights, double scale) {
  if (sets.size() != weights.size()) throw ValidationError("sets/weights size mismatch");
  if (!(scale > 0.0) || scale > 1.0) throw ValidationError("scale must be in (0, 1]");
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) throw ValidationError("negative mix weight");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) throw ValidationError("mix weights must sum to 1");
  RateVector rates(static_cast<std::size_t>(g.n_links()), 0.0);
  for (std::size_t k = 0; k < sets.size(); ++k) {
    if (!is_independent(g, sets[k])) throw ValidationError("mix set is not independent");
    for (int i : sets[k]) rates[static_cast<std::size_t>(i)] += weights[k];
  }
  for (double& r : rates) r *= scale;
  return rates;
}

RateVector sample_capacity_region(const InterferenceGraph& g, Rng& rng, double scale) {
  if (!(scale > 0.0) || scale > 1.0) throw ValidationError("scale must be in (0, 1]");
  auto sets = maximal_independent_sets(g);
  if (sets.empty()) return RateVector(static_cast<std::size_t>(g.n_links()), 0.0);
  int k = 1 + rng.uniform_int(static_cast<int>(std::min<std::size_t>(sets.size(), 4)));
  // draw k distinct set indices, then exponential weights normalized to 1
  std::vector<int> idx(sets.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  for (int i = 0; i < k; ++i) {
    int j = i + rng.uniform_int(static_cast<int>(idx.size()) - i);
    std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
  }
  std::vector<double> w(static_cast<std::size_t>(k));
  double total = 0.0;
  for (double& wi : w) {
    wi = -std::log(1.0 - rng.uniform01());
    total += wi;
  }
  RateVector rates(static_cast<std::size_t>(g.n_links()), 0.0);
  for (int i = 0; i < k; ++i) {
    double wi = w[static_cast<std::size_t>(i)] / total;
    for (int link : sets[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])]) {
      rates[static_cast<std::size_t>(link)] += wi;
    }
  }
  for (double& r : rates) r *= scale;
  return rates;
}

}  // namespace pmsched
