#include "pmsched/priority.hpp"

#include <deque>
#include <string>

namespace pmsched {

void validate_priorities(const InterferenceGraph& g, const PriorityVector& p) {
  if (p.size() != g.n_links()) {
    throw ValidationError("priority vector has " + std::to_string(p.size()) + " entries for " +
                          std::to_string(g.n_links()) + " links");
  }
  for (int i = 0; i < g.n_links(); ++i) {
    int v = p.values[static_cast<std::size_t>(i)];
    if (v < 1 || v > g.n_links()) {
      throw ValidationError("priority value " + std::to_string(v) + " on link " + std::to_string(i) +
                            " outside [1, " + std::to_string(g.n_links()) + "]");
    }
  }
  for (int i = 0; i < g.n_links(); ++i) {
    for (int j : g.adj(i)) {
      if (j > i && p.values[static_cast<std::size_t>(i)] == p.values[static_cast<std::size_t>(j)]) {
        throw ValidationError("adjacent links " + std::to_string(i) + " and " + std::to_string(j) +
                              " share priority value " +
                              std::to_string(p.values[static_cast<std::size_t>(i)]));
      }
    }
  }
}

PriorityVector identity_priorities(int n_links) {
  PriorityVector p;
  p.values.resize(static_cast<std::size_t>(n_links));
  for (int i = 0; i < n_links; ++i) p.values[static_cast<std::size_t>(i)] = i + 1;
  return p;
}

LinkSet higher_priority_neighbors(const InterferenceGraph& g, const PriorityVector& p, int link) {
  if (p.size() != g.n_links()) throw ValidationError("priority vector size mismatch");
  std::vector<int> ids;
  for (int j : g.adj(link)) {
    if (p.outranks(j, link)) ids.push_back(j);
  }
  return LinkSet(std::move(ids));
}

PriorityVector tree_priority(const InterferenceGraph& g) {
  if (!is_acyclic(g)) throw ValidationError("tree_priority: graph has a cycle");
  const int n = g.n_links();
  PriorityVector p{std::vector<int>(static_cast<std::size_t>(n), 0)};
  std::vector<int> depth(static_cast<std::size_t>(n), -1);
  std::vector<int> component;
  std::deque<int> queue;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int start = 0; start < n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    component.clear();
    queue.push_back(start);
    seen[static_cast<std::size_t>(start)] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      component.push_back(v);
      for (int w : g.adj(v)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          queue.push_back(w);
        }
      }
    }
    int root = component.front();
    for (int v : component) {
      if (g.degree(v) > g.degree(root) || (g.degree(v) == g.degree(root) && v < root)) root = v;
    }
    depth[static_cast<std::size_t>(root)] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      p.values[static_cast<std::size_t>(v)] = depth[static_cast<std::size_t>(v)] + 1;
      for (int w : g.adj(v)) {
        if (depth[static_cast<std::size_t>(w)] < 0) {
          depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return p;
}

}  // namespace pmsched
