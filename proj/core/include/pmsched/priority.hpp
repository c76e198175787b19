#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pmsched/errors.hpp"
#include "pmsched/graph.hpp"
#include "pmsched/rational.hpp"

namespace pmsched {

/// Per-link priority values; a smaller value means higher priority.  Values
/// lie in [1, n_links] and may repeat, but never across an edge: adjacent
/// links always have distinct values so the scheduler scan order between
/// conflicting links is well defined.
struct PriorityVector {
  std::vector<int> values;

  int size() const { return static_cast<int>(values.size()); }
  bool outranks(int i, int j) const {
    return values[static_cast<std::size_t>(i)] < values[static_cast<std::size_t>(j)];
  }
  bool operator==(const PriorityVector&) const = default;
};

/// Throws ValidationError unless values are in [1, n_links] and no edge
/// joins two links with the same value.
void validate_priorities(const InterferenceGraph& g, const PriorityVector& p);

/// Link i gets value i + 1.
PriorityVector identity_priorities(int n_links);

/// Neighbors of `link` with a strictly smaller priority value.
LinkSet higher_priority_neighbors(const InterferenceGraph& g, const PriorityVector& p, int link);

template <class Rate>
void check_rates(const InterferenceGraph& g, const std::vector<Rate>& rates) {
  if (static_cast<int>(rates.size()) != g.n_links()) {
    throw ValidationError("rate vector has " + std::to_string(rates.size()) + " entries for " +
                          std::to_string(g.n_links()) + " links");
  }
  for (const Rate& r : rates) {
    if (r < Rate(0)) throw ValidationError("negative rate");
  }
}

struct AssignmentTrace {
  std::vector<int> removal_order;    // first entry removed first
  std::vector<double> argmin_scores; // the winning score at each step
  std::vector<int> assigned_values;  // priority value given at each step
};

struct AssignmentResult {
  PriorityVector priority;
  AssignmentTrace trace;
};

/// Greedy local assignment.  Repeatedly removes, from the remaining graph,
/// the link minimizing (own rate + sum of remaining-neighbor rates), ties to
/// the lowest id.  The removed link takes value n_links when none of its
/// neighbors has been removed yet, otherwise (smallest value among removed
/// neighbors) - 1, so each link ends up outranking every neighbor removed
/// before it.  The result minimizes, over all priority assignments, the
/// worst per-link value of (own rate + sum over higher-priority neighbors).
template <class Rate>
AssignmentResult assign_priorities(const InterferenceGraph& g, const std::vector<Rate>& est_rates);

/// max over links of (own rate + sum of rates of strictly higher-priority
/// neighbors); the quantity assign_priorities minimizes.
template <class Rate>
Rate minmax_objective(const InterferenceGraph& g, const PriorityVector& p,
                      const std::vector<Rate>& rates);

inline constexpr int kPriorityBruteForceLimit = 9;

template <class Rate>
struct OptimalPriority {
  PriorityVector priority;
  Rate value{};
};

/// Exhaustive minimum of minmax_objective over every permutation of values
/// 1..n_links; ties resolved to the lexicographically smallest value vector.
/// Throws SizeLimitError above kPriorityBruteForceLimit.
template <class Rate>
OptimalPriority<Rate> brute_force_optimal_priority(const InterferenceGraph& g,
                                                   const std::vector<Rate>& rates);

/// For forests only (throws ValidationError otherwise): roots each component
/// at its max-degree link (ties to the lowest id) and assigns value =
/// depth + 1, so every link has at most one higher-priority neighbor (its
/// parent) and the prioritized interference degree is 1.
PriorityVector tree_priority(const InterferenceGraph& g);

// --- template definitions ----------------------------------------------------

template <class Rate>
AssignmentResult assign_priorities(const InterferenceGraph& g, const std::vector<Rate>& est_rates) {
  check_rates(g, est_rates);
  const int n = g.n_links();
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  PriorityVector p{std::vector<int>(static_cast<std::size_t>(n), 0)};
  AssignmentTrace trace;
  trace.removal_order.reserve(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    int k = -1;
    Rate best{};
    for (int i = 0; i < n; ++i) {
      if (removed[static_cast<std::size_t>(i)]) continue;
      // Sum own rate + remaining-neighbor rates in ascending id order so
      // symmetric links get bit-identical scores and the id tie-break is
      // deterministic even in floating point.
      Rate s{};
      bool own_added = false;
      for (int j : g.adj(i)) {
        if (!own_added && i < j) {
          s += est_rates[static_cast<std::size_t>(i)];
          own_added = true;
        }
        if (!removed[static_cast<std::size_t>(j)]) s += est_rates[static_cast<std::size_t>(j)];
      }
      if (!own_added) s += est_rates[static_cast<std::size_t>(i)];
      if (k < 0 || s < best) {
        k = i;
        best = s;
      }
    }
    bool any_removed_neighbor = false;
    int beta = 0;
    for (int j : g.adj(k)) {
      if (removed[static_cast<std::size_t>(j)]) {
        int v = p.values[static_cast<std::size_t>(j)];
        beta = any_removed_neighbor ? std::min(beta, v) : v;
        any_removed_neighbor = true;
      }
    }
    p.values[static_cast<std::size_t>(k)] = any_removed_neighbor ? beta - 1 : n;
    removed[static_cast<std::size_t>(k)] = 1;
    trace.removal_order.push_back(k);
    trace.argmin_scores.push_back(to_double(best));
    trace.assigned_values.push_back(p.values[static_cast<std::size_t>(k)]);
  }
  return {std::move(p), std::move(trace)};
}

namespace detail {

template <class Rate>
Rate minmax_over_values(const InterferenceGraph& g, std::span<const int> values,
                        const std::vector<Rate>& rates) {
  Rate best{};
  for (int i = 0; i < g.n_links(); ++i) {
    Rate s = rates[static_cast<std::size_t>(i)];
    for (int j : g.adj(i)) {
      if (values[static_cast<std::size_t>(j)] < values[static_cast<std::size_t>(i)]) {
        s += rates[static_cast<std::size_t>(j)];
      }
    }
    if (i == 0 || best < s) best = s;
  }
  return best;
}

}  // namespace detail

template <class Rate>
Rate minmax_objective(const InterferenceGraph& g, const PriorityVector& p,
                      const std::vector<Rate>& rates) {
  check_rates(g, rates);
  if (p.size() != g.n_links()) throw ValidationError("priority vector size mismatch");
  return detail::minmax_over_values<Rate>(g, p.values, rates);
}

template <class Rate>
OptimalPriority<Rate> brute_force_optimal_priority(const InterferenceGraph& g,
                                                   const std::vector<Rate>& rates) {
  check_rates(g, rates);
  const int n = g.n_links();
  if (n > kPriorityBruteForceLimit) {
    throw SizeLimitError("exhaustive priority search limited to " +
                         std::to_string(kPriorityBruteForceLimit) + " links, got " +
                         std::to_string(n));
  }
  if (n == 0) return {PriorityVector{}, Rate{}};
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
  std::vector<int> best_perm = perm;
  Rate best_val = detail::minmax_over_values<Rate>(g, perm, rates);
  while (std::next_permutation(perm.begin(), perm.end())) {
    Rate v = detail::minmax_over_values<Rate>(g, perm, rates);
    if (v < best_val) {
      best_val = v;
      best_perm = perm;
    }
  }
  return {PriorityVector{std::move(best_perm)}, best_val};
}

}  // namespace pmsched
