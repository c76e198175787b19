#include "pmsched/sched.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "pmsched/errors.hpp"

namespace pmsched {

LinkSet Schedule::members() const {
  std::vector<int> ids;
  for (std::size_t i = 0; i < selected.size(); ++i) {
    if (selected[i]) ids.push_back(static_cast<int>(i));
  }
  return LinkSet(std::move(ids));
}

namespace {

void check_queues(const InterferenceGraph& g, const QueueState& q) {
  if (static_cast<int>(q.size()) != g.n_links()) {
    throw ValidationError("queue state has " + std::to_string(q.size()) + " entries for " +
                          std::to_string(g.n_links()) + " links");
  }
  for (long long v : q) {
    if (v < 0) throw ValidationError("negative queue length");
  }
}

Schedule greedy_maximal(const InterferenceGraph& g, std::span<const int> order,
                        const QueueState& q) {
  Schedule s;
  s.selected.assign(static_cast<std::size_t>(g.n_links()), 0);
  for (int i : order) {
    if (q[static_cast<std::size_t>(i)] <= 0) continue;
    bool blocked = false;
    for (int j : g.adj(i)) {
      if (s.selected[static_cast<std::size_t>(j)]) {
        blocked = true;
        break;
      }
    }
    if (!blocked) s.selected[static_cast<std::size_t>(i)] = 1;
  }
  return s;
}

}  // namespace

std::vector<int> priority_scan_order(const PriorityVector& p) {
  std::vector<int> order(p.values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int va = p.values[static_cast<std::size_t>(a)];
    int vb = p.values[static_cast<std::size_t>(b)];
    return va != vb ? va < vb : a < b;
  });
  return order;
}

std::vector<int> lqf_scan_order(const QueueState& q) {
  std::vector<int> order(q.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    long long qa = q[static_cast<std::size_t>(a)];
    long long qb = q[static_cast<std::size_t>(b)];
    return qa != qb ? qa > qb : a < b;
  });
  return order;
}

Schedule schedule_priority_maximal(const InterferenceGraph& g, const PriorityVector& p,
                                   const QueueState& q) {
  check_queues(g, q);
  if (p.size() != g.n_links()) throw ValidationError("priority vector size mismatch");
  return greedy_maximal(g, priority_scan_order(p), q);
}

Schedule schedule_lqf(const InterferenceGraph& g, const QueueState& q) {
  check_queues(g, q);
  return greedy_maximal(g, lqf_scan_order(q), q);
}

Schedule schedule_fixed_maximal(const InterferenceGraph& g, std::span<const int> order,
                                const QueueState& q) {
  check_queues(g, q);
  if (static_cast<int>(order.size()) != g.n_links()) {
    throw ValidationError("scan order must list every link exactly once");
  }
  std::vector<char> seen(static_cast<std::size_t>(g.n_links()), 0);
  for (int i : order) {
    if (i < 0 || i >= g.n_links() || seen[static_cast<std::size_t>(i)]) {
      throw ValidationError("scan order must be a permutation of all link ids");
    }
    seen[static_cast<std::size_t>(i)] = 1;
  }
  return greedy_maximal(g, order, q);
}

Schedule schedule_max_weight(const InterferenceGraph& g, const QueueState& q) {
  check_queues(g, q);
  const int n = g.n_links();
  if (n > kExactSearchLimit) {
    throw SizeLimitError("max-weight search limited to " + std::to_string(kExactSearchLimit) +
                         " links, got " + std::to_string(n));
  }
  Schedule best;
  best.selected.assign(static_cast<std::size_t>(n), 0);
  if (n == 0) return best;

  // depth-first over indicator vectors in lexicographic order (exclude branch
  // first), so the first set reaching a given weight is the lexicographically
  // smallest and pruning on <= incumbent weight preserves the tie rule
  std::vector<long long> suffix_weight(static_cast<std::size_t>(n) + 1, 0);
  for (int i = n - 1; i >= 0; --i) {
    long long w = std::max<long long>(q[static_cast<std::size_t>(i)], 0);
    suffix_weight[static_cast<std::size_t>(i)] = suffix_weight[static_cast<std::size_t>(i) + 1] + w;
  }
  std::vector<std::uint8_t> current(static_cast<std::size_t>(n), 0);
  long long best_weight = -1;
  auto rec = [&](auto&& self, int i, long long weight) -> void {
    if (best_weight >= 0 && weight + suffix_weight[static_cast<std::size_t>(i)] <= best_weight) {
      return;
    }
    if (i == n) {
      best_weight = weight;
      best.selected = current;
      return;
    }
    self(self, i + 1, weight);  // exclude first: lexicographically smaller
    if (q[static_cast<std::size_t>(i)] <= 0) return;
    for (int j : g.adj(i)) {
      if (j < i && current[static_cast<std::size_t>(j)]) return;
    }
    current[static_cast<std::size_t>(i)] = 1;
    self(self, i + 1, weight + q[static_cast<std::size_t>(i)]);
    current[static_cast<std::size_t>(i)] = 0;
  };
  rec(rec, 0, 0);
  return best;
}

bool covers_backlogged(const InterferenceGraph& g, std::span<const int> order, const QueueState& q,
                       const Schedule& s) {
  std::vector<int> pos(static_cast<std::size_t>(g.n_links()), 0);
  for (std::size_t k = 0; k < order.size(); ++k) {
    pos[static_cast<std::size_t>(order[k])] = static_cast<int>(k);
  }
  for (int i = 0; i < g.n_links(); ++i) {
    if (q[static_cast<std::size_t>(i)] <= 0 || s.contains(i)) continue;
    bool served_ahead = false;
    for (int j : g.adj(i)) {
      if (s.contains(j) && pos[static_cast<std::size_t>(j)] < pos[static_cast<std::size_t>(i)]) {
        served_ahead = true;
        break;
      }
    }
    if (!served_ahead) return false;
  }
  return true;
}

}  // namespace pmsched
