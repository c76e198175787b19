#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <variant>
#include <vector>

namespace pmsched {

/// Sorted, duplicate-free set of link ids.
class LinkSet {
public:
  LinkSet() = default;
  explicit LinkSet(std::vector<int> ids);
  LinkSet(std::initializer_list<int> ids) : LinkSet(std::vector<int>(ids)) {}

  bool contains(int id) const;
  void insert(int id);
  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  const std::vector<int>& ids() const { return ids_; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  bool operator==(const LinkSet&) const = default;

private:
  std::vector<int> ids_;  // ascending, unique
};

/// Undirected conflict graph over links 0..n_links-1.  Two adjacent links
/// cannot transmit in the same slot.  Symmetric, no self-loops, immutable
/// after construction.  Duplicate input edges collapse; an out-of-range id
/// or a self-loop throws ValidationError.
class InterferenceGraph {
public:
  InterferenceGraph() = default;
  InterferenceGraph(int n_links, const std::vector<std::pair<int, int>>& edges);

  int n_links() const { return n_; }
  int edge_count() const { return edges_; }
  bool adjacent(int i, int j) const;

  /// Sorted neighbor ids; throws ValidationError on an out-of-range id.
  const std::vector<int>& adj(int i) const;
  LinkSet neighbors(int i) const { return LinkSet(adj(i)); }
  int degree(int i) const { return static_cast<int>(adj(i).size()); }

private:
  int n_ = 0;
  int edges_ = 0;
  std::vector<std::vector<int>> adj_;
};

/// Largest instance the exact independent-set searches accept.
inline constexpr int kExactSearchLimit = 24;

/// True iff no two members are adjacent.  Members must be valid ids.
bool is_independent(const InterferenceGraph& g, const LinkSet& links);

/// Exact maximum independent set size (branch and bound, greedy incumbent).
/// Throws SizeLimitError above kExactSearchLimit.
int max_independent_set_size(const InterferenceGraph& g);

/// One maximum independent set (deterministic witness for the size above).
LinkSet max_independent_set(const InterferenceGraph& g);

/// Every maximal independent set, deterministic order.
std::vector<LinkSet> maximal_independent_sets(const InterferenceGraph& g);

struct InducedSubgraph {
  InterferenceGraph graph;
  std::vector<int> to_original;  // new id -> original id, ascending
};

/// Subgraph induced by `links`, relabeled to dense 0-based ids.
InducedSubgraph induced_subgraph(const InterferenceGraph& g, const LinkSet& links);

/// True iff the graph is a forest (no cycle in any component).
bool is_acyclic(const InterferenceGraph& g);

// --- topology generators ---------------------------------------------------

/// k peripheral links (ids 0..k-1), all conflicting only with the hub, which
/// takes id k.
struct StarTopology {
  int peripherals = 1;
};

/// `cliques` cliques of `clique_size` links each, all sharing link 0.
/// Clique j additionally owns links 1+j*(clique_size-1) .. (j+1)*(clique_size-1).
struct CliqueIntersectionTopology {
  int cliques = 2;
  int clique_size = 2;
};

/// Uniform random labeled tree on n_links vertices (decoded from a random
/// Pruefer sequence).
struct RandomTreeTopology {
  int n_links = 1;
  std::uint64_t seed = 0;
};

/// Each link gets a transmitter and a receiver placed uniformly in the
/// width x height rectangle; links i and j conflict iff either transmitter
/// lies within `radius` of the other link's receiver.
struct GuardZoneTopology {
  int n_links = 1;
  double width = 1.0;
  double height = 1.0;
  double radius = 0.35;
  std::uint64_t seed = 0;
};

struct ExplicitTopology {
  int n_links = 0;
  std::vector<std::pair<int, int>> edges;
};

using TopologySpec = std::variant<StarTopology, CliqueIntersectionTopology, RandomTreeTopology,
                                  GuardZoneTopology, ExplicitTopology>;

/// Deterministic for identical specs (seeds included in the spec).
/// Throws ValidationError on invalid sizes.
InterferenceGraph generate_topology(const TopologySpec& spec);

}  // namespace pmsched
