#pragma once

// Reference implementations and instance generators shared by the tests.
// Everything here is deliberately naive (subset enumeration, factorial
// search) and independent of the library's optimized code paths, so the two
// can disagree only when one of them is wrong.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "pmsched/graph.hpp"
#include "pmsched/priority.hpp"
#include "pmsched/rational.hpp"
#include "pmsched/regions.hpp"
#include "pmsched/rng.hpp"
#include "pmsched/sched.hpp"

namespace checks {

using pmsched::InterferenceGraph;
using pmsched::PriorityVector;
using pmsched::QueueState;
using pmsched::Rational;
using pmsched::Rng;
using pmsched::Schedule;

// Largest independent set by trying every subset.  Keep n small-ish.
inline int mis_size_by_enumeration(const InterferenceGraph& g) {
  const int n = g.n_links();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (!(mask & (std::uint32_t{1} << i))) continue;
      for (int j : g.adj(i)) {
        if (j > i && (mask & (std::uint32_t{1} << j))) {
          ok = false;
          break;
        }
      }
    }
    if (ok) best = std::max(best, std::popcount(mask));
  }
  return best;
}

inline bool mask_independent(const InterferenceGraph& g, std::uint32_t mask) {
  for (int i = 0; i < g.n_links(); ++i) {
    if (!(mask & (std::uint32_t{1} << i))) continue;
    for (int j : g.adj(i)) {
      if (j > i && (mask & (std::uint32_t{1} << j))) return false;
    }
  }
  return true;
}

// Count of maximal independent sets by enumeration.
inline int maximal_set_count_by_enumeration(const InterferenceGraph& g) {
  const int n = g.n_links();
  int count = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    if (!mask_independent(g, mask)) continue;
    bool maximal = true;
    for (int i = 0; i < n && maximal; ++i) {
      if (mask & (std::uint32_t{1} << i)) continue;
      bool blocked = false;
      for (int j : g.adj(i)) {
        if (mask & (std::uint32_t{1} << j)) {
          blocked = true;
          break;
        }
      }
      if (!blocked) maximal = false;
    }
    if (maximal) ++count;
  }
  return count;
}

// Heaviest independent set weight by enumeration (weights = queue lengths).
inline long long max_weight_by_enumeration(const InterferenceGraph& g, const QueueState& q) {
  const int n = g.n_links();
  long long best = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    if (!mask_independent(g, mask)) continue;
    long long w = 0;
    for (int i = 0; i < n; ++i) {
      if (mask & (std::uint32_t{1} << i)) w += q[static_cast<std::size_t>(i)];
    }
    best = std::max(best, w);
  }
  return best;
}

// Membership in some priority region by trying every value permutation.
template <class Rate>
bool any_priority_accepts_by_permutation(const InterferenceGraph& g,
                                         const std::vector<Rate>& rates) {
  const int n = g.n_links();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    if (pmsched::in_priority_region(g, PriorityVector{perm}, rates).member) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Best achievable overall prioritized degree by trying every permutation.
inline int min_prioritized_degree_by_permutation(const InterferenceGraph& g) {
  const int n = g.n_links();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  int best = n > 0 ? n : 0;
  do {
    best = std::min(best,
                    pmsched::prioritized_interference_degree(g, PriorityVector{perm}).overall);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline InterferenceGraph random_graph(Rng& rng, int n, double edge_prob) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.bernoulli(edge_prob)) edges.push_back({i, j});
    }
  }
  return InterferenceGraph(n, edges);
}

inline std::vector<int> random_id_order(Rng& rng, int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(rng.uniform_int(i + 1))]);
  }
  return v;
}

inline PriorityVector random_permutation_priority(Rng& rng, int n) {
  std::vector<int> v = random_id_order(rng, n);
  for (int& x : v) ++x;
  return PriorityVector{std::move(v)};
}

inline QueueState random_queues(Rng& rng, int n, int max_len) {
  QueueState q(static_cast<std::size_t>(n));
  for (auto& v : q) v = rng.uniform_int(max_len + 1);
  return q;
}

inline std::vector<Rational> random_rational_rates(Rng& rng, int n) {
  static constexpr int dens[] = {2, 3, 4, 5, 7, 8, 10, 20, 100};
  std::vector<Rational> r(static_cast<std::size_t>(n));
  for (auto& v : r) {
    const int d = dens[rng.uniform_int(static_cast<int>(std::size(dens)))];
    v = Rational(rng.uniform_int(d + 1), d);
  }
  return r;
}

inline std::vector<double> to_doubles(const std::vector<Rational>& rs) {
  std::vector<double> out;
  out.reserve(rs.size());
  for (const Rational& r : rs) out.push_back(r.to_double());
  return out;
}

// A random exact member of the achievable-rate region: rational convex
// combination of maximal independent sets, scaled by num16/16.
inline std::vector<Rational> random_rational_capacity_point(const InterferenceGraph& g, Rng& rng,
                                                            int scale_num16) {
  const auto sets = pmsched::maximal_independent_sets(g);
  const int n = g.n_links();
  std::vector<Rational> lambda(static_cast<std::size_t>(n), Rational(0));
  const int picks = std::min<int>(4, static_cast<int>(sets.size()));
  std::vector<long long> weight_num(static_cast<std::size_t>(picks));
  long long total = 0;
  for (auto& w : weight_num) {
    w = rng.uniform_int(16);
    total += w;
  }
  if (total == 0) return lambda;
  const Rational scale(scale_num16, 16);
  for (int k = 0; k < picks; ++k) {
    const auto& s = sets[static_cast<std::size_t>(rng.uniform_int(static_cast<int>(sets.size())))];
    const Rational w = Rational(weight_num[static_cast<std::size_t>(k)], total) * scale;
    for (int i : s) lambda[static_cast<std::size_t>(i)] += w;
  }
  return lambda;
}

// Selected links must be backlogged and pairwise conflict-free.
inline bool selection_valid(const InterferenceGraph& g, const QueueState& q, const Schedule& s) {
  for (int i = 0; i < g.n_links(); ++i) {
    if (!s.contains(i)) continue;
    if (q[static_cast<std::size_t>(i)] <= 0) return false;
    for (int j : g.adj(i)) {
      if (j > i && s.contains(j)) return false;
    }
  }
  return true;
}

// No backlogged link could still be added.
inline bool selection_maximal(const InterferenceGraph& g, const QueueState& q, const Schedule& s) {
  for (int i = 0; i < g.n_links(); ++i) {
    if (s.contains(i) || q[static_cast<std::size_t>(i)] <= 0) continue;
    bool blocked = false;
    for (int j : g.adj(i)) {
      if (s.contains(j)) {
        blocked = true;
        break;
      }
    }
    if (!blocked) return false;
  }
  return true;
}

// Per-slot service guarantee under a priority vector: every backlogged link
// is served itself or sees a served strictly higher-priority neighbor.
inline bool priority_coverage_holds(const InterferenceGraph& g, const PriorityVector& p,
                                    const QueueState& q, const Schedule& s) {
  for (int i = 0; i < g.n_links(); ++i) {
    if (q[static_cast<std::size_t>(i)] <= 0 || s.contains(i)) continue;
    bool covered = false;
    for (int j : g.adj(i)) {
      if (p.outranks(j, i) && s.contains(j)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

}  // namespace checks
