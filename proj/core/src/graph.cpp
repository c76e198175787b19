#include "pmsched/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "pmsched/errors.hpp"
#include "pmsched/rng.hpp"

namespace pmsched {

LinkSet::LinkSet(std::vector<int> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool LinkSet::contains(int id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

void LinkSet::insert(int id) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) ids_.insert(it, id);
}

InterferenceGraph::InterferenceGraph(int n_links, const std::vector<std::pair<int, int>>& edges) {
  if (n_links < 0) throw ValidationError("graph: negative link count");
  n_ = n_links;
  adj_.assign(static_cast<std::size_t>(n_), {});
  for (auto [a, b] : edges) {
    if (a < 0 || a >= n_ || b < 0 || b >= n_) {
      throw ValidationError("graph: edge (" + std::to_string(a) + "," + std::to_string(b) +
                            ") out of range for " + std::to_string(n_) + " links");
    }
    if (a == b) throw ValidationError("graph: self-loop on link " + std::to_string(a));
    adj_[static_cast<std::size_t>(a)].push_back(b);
    adj_[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    edges_ += static_cast<int>(nb.size());
  }
  edges_ /= 2;
}

bool InterferenceGraph::adjacent(int i, int j) const {
  const auto& nb = adj(i);
  if (j < 0 || j >= n_) throw ValidationError("graph: link id " + std::to_string(j) + " out of range");
  return std::binary_search(nb.begin(), nb.end(), j);
}

const std::vector<int>& InterferenceGraph::adj(int i) const {
  if (i < 0 || i >= n_) throw ValidationError("graph: link id " + std::to_string(i) + " out of range");
  return adj_[static_cast<std::size_t>(i)];
}

bool is_independent(const InterferenceGraph& g, const LinkSet& links) {
  for (int i : links) {
    for (int j : g.adj(i)) {
      if (j > i && links.contains(j)) return false;
    }
  }
  return true;
}

namespace {

std::vector<std::uint32_t> neighbor_masks(const InterferenceGraph& g) {
  std::vector<std::uint32_t> nbr(static_cast<std::size_t>(g.n_links()), 0);
  for (int i = 0; i < g.n_links(); ++i) {
    for (int j : g.adj(i)) nbr[static_cast<std::size_t>(i)] |= std::uint32_t{1} << j;
  }
  return nbr;
}

void mis_search(const std::vector<std::uint32_t>& nbr, std::uint32_t cand, std::uint32_t chosen,
                int& best_size, std::uint32_t& best_set) {
  if (cand == 0) {
    int size = std::popcount(chosen);
    if (size > best_size) {
      best_size = size;
      best_set = chosen;
    }
    return;
  }
  if (std::popcount(chosen) + std::popcount(cand) <= best_size) return;
  int v = std::countr_zero(cand);
  std::uint32_t bit = std::uint32_t{1} << v;
  mis_search(nbr, cand & ~(nbr[static_cast<std::size_t>(v)] | bit), chosen | bit, best_size, best_set);
  mis_search(nbr, cand & ~bit, chosen, best_size, best_set);
}

std::uint32_t mis_mask(const InterferenceGraph& g) {
  if (g.n_links() > kExactSearchLimit) {
    throw SizeLimitError("independent set search limited to " + std::to_string(kExactSearchLimit) +
                         " links, got " + std::to_string(g.n_links()));
  }
  auto nbr = neighbor_masks(g);
  // greedy incumbent by ascending degree tightens the bound up front
  std::vector<int> order(static_cast<std::size_t>(g.n_links()));
  for (int i = 0; i < g.n_links(); ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int da = g.degree(a), db = g.degree(b);
    return da != db ? da < db : a < b;
  });
  std::uint32_t greedy = 0;
  for (int v : order) {
    if ((greedy & nbr[static_cast<std::size_t>(v)]) == 0) greedy |= std::uint32_t{1} << v;
  }
  int best_size = std::popcount(greedy);
  std::uint32_t best_set = greedy;
  std::uint32_t all = g.n_links() == 32 ? ~std::uint32_t{0}
                                        : (std::uint32_t{1} << g.n_links()) - 1;
  mis_search(nbr, all, 0, best_size, best_set);
  return best_set;
}

}  // namespace

int max_independent_set_size(const InterferenceGraph& g) {
  return std::popcount(mis_mask(g));
}

LinkSet max_independent_set(const InterferenceGraph& g) {
  std::uint32_t m = mis_mask(g);
  std::vector<int> ids;
  for (int i = 0; i < g.n_links(); ++i) {
    if (m & (std::uint32_t{1} << i)) ids.push_back(i);
  }
  return LinkSet(std::move(ids));
}

namespace {

// Bron-Kerbosch over the complement: maximal independent sets of g are
// exactly the maximal cliques of its complement.
void enumerate_maximal(const std::vector<std::uint32_t>& comp, std::uint32_t r, std::uint32_t p,
                       std::uint32_t x, std::vector<std::uint32_t>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  std::uint32_t pivot_candidates = p | x;
  int pivot = std::countr_zero(pivot_candidates);
  std::uint32_t ext = p & ~comp[static_cast<std::size_t>(pivot)];
  while (ext != 0) {
    int v = std::countr_zero(ext);
    std::uint32_t bit = std::uint32_t{1} << v;
    ext &= ~bit;
    enumerate_maximal(comp, r | bit, p & comp[static_cast<std::size_t>(v)],
                      x & comp[static_cast<std::size_t>(v)], out);
    p &= ~bit;
    x |= bit;
  }
}

}  // namespace

std::vector<LinkSet> maximal_independent_sets(const InterferenceGraph& g) {
  if (g.n_links() > kExactSearchLimit) {
    throw SizeLimitError("maximal set enumeration limited to " + std::to_string(kExactSearchLimit) +
                         " links, got " + std::to_string(g.n_links()));
  }
  if (g.n_links() == 0) return {};
  auto nbr = neighbor_masks(g);
  std::uint32_t all = g.n_links() == 32 ? ~std::uint32_t{0}
                                        : (std::uint32_t{1} << g.n_links()) - 1;
  std::vector<std::uint32_t> comp(nbr.size());
  for (std::size_t v = 0; v < nbr.size(); ++v) {
    comp[v] = all & ~(nbr[v] | (std::uint32_t{1} << v));
  }
  std::vector<std::uint32_t> raw;
  enumerate_maximal(comp, 0, all, 0, raw);
  std::sort(raw.begin(), raw.end());
  std::vector<LinkSet> out;
  out.reserve(raw.size());
  for (std::uint32_t m : raw) {
    std::vector<int> ids;
    for (int i = 0; i < g.n_links(); ++i) {
      if (m & (std::uint32_t{1} << i)) ids.push_back(i);
    }
    out.emplace_back(std::move(ids));
  }
  return out;
}

InducedSubgraph induced_subgraph(const InterferenceGraph& g, const LinkSet& links) {
  std::vector<int> to_new(static_cast<std::size_t>(g.n_links()), -1);
  std::vector<int> to_original = links.ids();
  for (std::size_t k = 0; k < to_original.size(); ++k) {
    int id = to_original[k];
    if (id < 0 || id >= g.n_links()) {
      throw ValidationError("induced_subgraph: link id " + std::to_string(id) + " out of range");
    }
    to_new[static_cast<std::size_t>(id)] = static_cast<int>(k);
  }
  std::vector<std::pair<int, int>> edges;
  for (int old_i : to_original) {
    for (int old_j : g.adj(old_i)) {
      if (old_j > old_i && to_new[static_cast<std::size_t>(old_j)] >= 0) {
        edges.emplace_back(to_new[static_cast<std::size_t>(old_i)],
                           to_new[static_cast<std::size_t>(old_j)]);
      }
    }
  }
  return {InterferenceGraph(links.size(), edges), std::move(to_original)};
}

bool is_acyclic(const InterferenceGraph& g) {
  // iterative DFS, cycle = edge to a visited vertex that is not the parent
  std::vector<int> state(static_cast<std::size_t>(g.n_links()), 0);
  std::vector<std::pair<int, int>> stack;  // (vertex, parent)
  for (int start = 0; start < g.n_links(); ++start) {
    if (state[static_cast<std::size_t>(start)] != 0) continue;
    stack.emplace_back(start, -1);
    while (!stack.empty()) {
      auto [v, parent] = stack.back();
      stack.pop_back();
      if (state[static_cast<std::size_t>(v)] != 0) return false;  // reached twice
      state[static_cast<std::size_t>(v)] = 1;
      bool skipped_parent = false;
      for (int w : g.adj(v)) {
        if (w == parent && !skipped_parent) {
          skipped_parent = true;  // skip the tree edge once; a parallel path still counts
          continue;
        }
        if (state[static_cast<std::size_t>(w)] != 0) return false;
        stack.emplace_back(w, v);
      }
    }
  }
  return true;
}

namespace {

InterferenceGraph make_star(const StarTopology& t) {
  if (t.peripherals < 1) throw ValidationError("star: need at least 1 peripheral link");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < t.peripherals; ++i) edges.emplace_back(i, t.peripherals);
  return InterferenceGraph(t.peripherals + 1, edges);
}

InterferenceGraph make_clique_intersection(const CliqueIntersectionTopology& t) {
  if (t.cliques < 1) throw ValidationError("clique_intersection: need at least 1 clique");
  if (t.clique_size < 2) throw ValidationError("clique_intersection: clique size must be >= 2");
  int per = t.clique_size - 1;
  int n = 1 + t.cliques * per;
  std::vector<std::pair<int, int>> edges;
  for (int c = 0; c < t.cliques; ++c) {
    std::vector<int> members{0};
    for (int k = 0; k < per; ++k) members.push_back(1 + c * per + k);
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        edges.emplace_back(members[a], members[b]);
      }
    }
  }
  return InterferenceGraph(n, edges);
}

InterferenceGraph make_random_tree(const RandomTreeTopology& t) {
  if (t.n_links < 1) throw ValidationError("random_tree: need at least 1 link");
  int n = t.n_links;
  if (n == 1) return InterferenceGraph(1, {});
  if (n == 2) return InterferenceGraph(2, {{0, 1}});
  Rng rng(t.seed);
  std::vector<int> pruefer(static_cast<std::size_t>(n - 2));
  for (auto& v : pruefer) v = rng.uniform_int(n);
  std::vector<int> deg(static_cast<std::size_t>(n), 1);
  for (int v : pruefer) ++deg[static_cast<std::size_t>(v)];
  std::vector<std::pair<int, int>> edges;
  // classic decode: repeatedly join the smallest leaf to the next code entry
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  int leaf_scan = 0;
  int leaf = -1;
  auto next_leaf = [&]() {
    while (deg[static_cast<std::size_t>(leaf_scan)] != 1 || used[static_cast<std::size_t>(leaf_scan)]) {
      ++leaf_scan;
    }
    return leaf_scan;
  };
  leaf = next_leaf();
  for (int v : pruefer) {
    edges.emplace_back(leaf, v);
    used[static_cast<std::size_t>(leaf)] = true;
    if (--deg[static_cast<std::size_t>(v)] == 1 && v < leaf_scan) {
      leaf = v;  // v became a leaf below the scan pointer, take it immediately
    } else {
      leaf = next_leaf();
    }
  }
  // two unused vertices remain; connect them
  int a = -1, b = -1;
  for (int v = 0; v < n; ++v) {
    if (!used[static_cast<std::size_t>(v)] && deg[static_cast<std::size_t>(v)] == 1) {
      (a < 0 ? a : b) = v;
    }
  }
  edges.emplace_back(a, b);
  return InterferenceGraph(n, edges);
}

InterferenceGraph make_guard_zone(const GuardZoneTopology& t) {
  if (t.n_links < 1) throw ValidationError("guard_zone: need at least 1 link");
  if (t.width <= 0 || t.height <= 0) throw ValidationError("guard_zone: area must be positive");
  if (t.radius <= 0) throw ValidationError("guard_zone: radius must be positive");
  Rng rng(t.seed);
  std::size_t n = static_cast<std::size_t>(t.n_links);
  std::vector<double> tx_x(n), tx_y(n), rx_x(n), rx_y(n);
  for (std::size_t i = 0; i < n; ++i) {
    tx_x[i] = rng.uniform01() * t.width;
    tx_y[i] = rng.uniform01() * t.height;
    rx_x[i] = rng.uniform01() * t.width;
    rx_y[i] = rng.uniform01() * t.height;
  }
  auto within = [&](std::size_t a, std::size_t b) {
    double dx = tx_x[a] - rx_x[b];
    double dy = tx_y[a] - rx_y[b];
    return dx * dx + dy * dy <= t.radius * t.radius;
  };
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (within(i, j) || within(j, i)) {
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return InterferenceGraph(t.n_links, edges);
}

}  // namespace

InterferenceGraph generate_topology(const TopologySpec& spec) {
  return std::visit(
      [](const auto& t) -> InterferenceGraph {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, StarTopology>) return make_star(t);
        if constexpr (std::is_same_v<T, CliqueIntersectionTopology>) return make_clique_intersection(t);
        if constexpr (std::is_same_v<T, RandomTreeTopology>) return make_random_tree(t);
        if constexpr (std::is_same_v<T, GuardZoneTopology>) return make_guard_zone(t);
        if constexpr (std::is_same_v<T, ExplicitTopology>) {
          return InterferenceGraph(t.n_links, t.edges);
        }
      },
      spec);
}

}  // namespace pmsched
