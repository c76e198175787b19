#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pmsched/graph.hpp"
#include "pmsched/priority.hpp"

namespace pmsched {

/// Per-link queue lengths in whole packets.
using QueueState = std::vector<long long>;

/// One slot's transmission set: independent, only backlogged links, and
/// maximal for the greedy family (no backlogged link could be added).
struct Schedule {
  std::vector<std::uint8_t> selected;

  bool contains(int i) const { return selected[static_cast<std::size_t>(i)] != 0; }
  LinkSet members() const;
  bool operator==(const Schedule&) const = default;
};

/// Scan order realizing a priority vector: ascending value, ties by id.
std::vector<int> priority_scan_order(const PriorityVector& p);

/// Scan order of longest-queue-first: descending queue length, ties by id.
std::vector<int> lqf_scan_order(const QueueState& q);

/// Greedy maximal schedule: walk links in priority order and pick every
/// backlogged link with no already-selected neighbor.  Among links sharing a
/// value (never adjacent in a valid priority vector) the outcome is
/// id-order independent.
Schedule schedule_priority_maximal(const InterferenceGraph& g, const PriorityVector& p,
                                   const QueueState& q);

/// Greedy maximal schedule scanning longest queues first.
Schedule schedule_lqf(const InterferenceGraph& g, const QueueState& q);

/// Greedy maximal schedule over an arbitrary fixed permutation of all links.
Schedule schedule_fixed_maximal(const InterferenceGraph& g, std::span<const int> order,
                                const QueueState& q);

/// Exact maximum-weight independent set with queue lengths as weights; links
/// with empty queues are excluded.  Ties resolve to the lexicographically
/// smallest indicator vector.  Throws SizeLimitError above kExactSearchLimit.
Schedule schedule_max_weight(const InterferenceGraph& g, const QueueState& q);

/// Per-slot service guarantee of greedy maximal scheduling: every backlogged
/// link is selected itself or has a selected neighbor that precedes it in
/// the scan order.  `order` must be the scan order the schedule was built
/// with.
bool covers_backlogged(const InterferenceGraph& g, std::span<const int> order, const QueueState& q,
                       const Schedule& s);

}  // namespace pmsched
