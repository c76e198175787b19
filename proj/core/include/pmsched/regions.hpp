#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pmsched/errors.hpp"
#include "pmsched/graph.hpp"
#include "pmsched/priority.hpp"
#include "pmsched/rational.hpp"
#include "pmsched/rng.hpp"

namespace pmsched {

/// Per-link arrival rates in packets per slot (unit link capacity).
using RateVector = std::vector<double>;

/// Floating-point membership checks accept sums up to 1 + this slack; exact
/// rational checks use plain <= 1.
inline constexpr double kRateTolerance = 1e-12;

inline bool rate_le_one(double v) { return v <= 1.0 + kRateTolerance; }
inline bool rate_le_one(const Rational& v) { return v <= Rational(1); }

struct RegionCheck {
  bool member = false;
  std::vector<int> violated;  // links whose constraint fails, ascending
  explicit operator bool() const { return member; }
};

/// Worst-case guaranteed region of maximal scheduling: every link's own rate
/// plus the sum over all its neighbors stays within one packet per slot.
/// Sufficient for rate stability under any maximal schedule, any priorities.
template <class Rate>
RegionCheck in_worst_case_region(const InterferenceGraph& g, const std::vector<Rate>& rates);

/// Region guaranteed under a fixed priority vector: each link's own rate plus
/// the sum over strictly higher-priority neighbors stays within one packet
/// per slot.  Equal-value (necessarily non-adjacent by construction, but also
/// any equal-value) neighbors contribute nothing.
template <class Rate>
RegionCheck in_priority_region(const InterferenceGraph& g, const PriorityVector& p,
                               const std::vector<Rate>& rates);

struct DegreeReport {
  std::vector<int> per_link;
  int overall = 0;  // max over links
};

/// Per link: the maximum number of conflict-free links inside its closed
/// neighborhood (itself plus all neighbors).  Exact search.
DegreeReport interference_degree(const InterferenceGraph& g);

/// Same, but the neighborhood is restricted to strictly higher-priority
/// neighbors.  Never exceeds interference_degree per link.
DegreeReport prioritized_interference_degree(const InterferenceGraph& g, const PriorityVector& p);

inline constexpr int kEliminationSearchLimit = 12;

struct DegreeSearchResult {
  int value = 0;
  PriorityVector witness;  // attains `value` as its prioritized degree
};

/// Minimum over all priority assignments of the overall prioritized
/// interference degree.  Exact subset-DP over elimination orders (the link
/// removed first takes the lowest priority); deterministic witness.  Throws
/// SizeLimitError above kEliminationSearchLimit.
DegreeSearchResult min_prioritized_interference_degree(const InterferenceGraph& g);

/// Greedy elimination (argmin step degree, ties to the lowest id).  Upper
/// bound only; can exceed the exact minimum.
DegreeSearchResult min_prioritized_interference_degree_greedy(const InterferenceGraph& g);

/// scale times a random convex combination of independent-set indicator
/// vectors; member of the scaled achievable-rate region by construction.
/// scale must lie in (0, 1].
RateVector sample_capacity_region(const InterferenceGraph& g, Rng& rng, double scale);

/// Deterministic variant: explicit sets and convex weights (must sum to 1
/// within 1e-9; every set must be independent).
RateVector mix_independent_sets(const InterferenceGraph& g, std::span<const LinkSet> sets,
                                std::span<const double> weights, double scale);

struct AnyPriorityMembership {
  bool member = false;
  std::optional<PriorityVector> witness;  // a priority vector accepting the rates
};

/// Decides whether some priority vector's region contains the rates, by
/// complete backtracking over elimination orders: the link removed first
/// takes the lowest priority, and a prefix survives only while each removed
/// link's rate plus the rate sum of its still-remaining neighbors stays
/// within one packet per slot.  Failed remainder sets are memoized, so the
/// search is exhaustive but never revisits a dead subset.  Throws
/// SizeLimitError above kEliminationSearchLimit.
template <class Rate>
AnyPriorityMembership in_any_priority_region(const InterferenceGraph& g,
                                             const std::vector<Rate>& rates);

// --- template definitions ----------------------------------------------------

template <class Rate>
RegionCheck in_worst_case_region(const InterferenceGraph& g, const std::vector<Rate>& rates) {
  check_rates(g, rates);
  RegionCheck out;
  out.member = true;
  for (int i = 0; i < g.n_links(); ++i) {
    Rate s = rates[static_cast<std::size_t>(i)];
    for (int j : g.adj(i)) s += rates[static_cast<std::size_t>(j)];
    if (!rate_le_one(s)) {
      out.member = false;
      out.violated.push_back(i);
    }
  }
  return out;
}

template <class Rate>
RegionCheck in_priority_region(const InterferenceGraph& g, const PriorityVector& p,
                               const std::vector<Rate>& rates) {
  check_rates(g, rates);
  if (p.size() != g.n_links()) throw ValidationError("priority vector size mismatch");
  RegionCheck out;
  out.member = true;
  for (int i = 0; i < g.n_links(); ++i) {
    Rate s = rates[static_cast<std::size_t>(i)];
    for (int j : g.adj(i)) {
      if (p.outranks(j, i)) s += rates[static_cast<std::size_t>(j)];
    }
    if (!rate_le_one(s)) {
      out.member = false;
      out.violated.push_back(i);
    }
  }
  return out;
}

namespace detail {

template <class Rate>
bool elimination_search(const InterferenceGraph& g, const std::vector<Rate>& rates,
                        std::uint32_t remaining, std::vector<char>& dead,
                        std::vector<int>& order) {
  if (remaining == 0) return true;
  if (dead[remaining]) return false;
  for (int i = 0; i < g.n_links(); ++i) {
    if (!(remaining & (std::uint32_t{1} << i))) continue;
    Rate s = rates[static_cast<std::size_t>(i)];
    for (int j : g.adj(i)) {
      if (remaining & (std::uint32_t{1} << j)) s += rates[static_cast<std::size_t>(j)];
    }
    if (!rate_le_one(s)) continue;
    order.push_back(i);
    if (elimination_search(g, rates, remaining & ~(std::uint32_t{1} << i), dead, order)) {
      return true;
    }
    order.pop_back();
  }
  dead[remaining] = 1;
  return false;
}

}  // namespace detail

template <class Rate>
AnyPriorityMembership in_any_priority_region(const InterferenceGraph& g,
                                             const std::vector<Rate>& rates) {
  check_rates(g, rates);
  const int n = g.n_links();
  if (n > kEliminationSearchLimit) {
    throw SizeLimitError("priority-region search limited to " +
                         std::to_string(kEliminationSearchLimit) + " links, got " +
                         std::to_string(n));
  }
  AnyPriorityMembership out;
  if (n == 0) {
    out.member = true;
    out.witness = PriorityVector{};
    return out;
  }
  std::vector<char> dead(std::size_t{1} << n, 0);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  std::uint32_t all = (std::uint32_t{1} << n) - 1;
  if (!detail::elimination_search(g, rates, all, dead, order)) return out;
  out.member = true;
  PriorityVector p{std::vector<int>(static_cast<std::size_t>(n), 0)};
  for (int t = 0; t < n; ++t) {
    p.values[static_cast<std::size_t>(order[static_cast<std::size_t>(t)])] = n - t;
  }
  out.witness = std::move(p);
  return out;
}

}  // namespace pmsched
