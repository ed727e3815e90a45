#pragma once

#include <span>
#include <vector>

#include "domino/arrival_sequence.hpp"

namespace domino {

/// The final graph of an arrival sequence together with prefix access.
/// Prefix adjacency is answered by filtering on index: neighbor lists are
/// sorted, so the neighbors of v among v_1..v_i form a prefix of v's list.
/// Immutable after construction; safe to share across threads.
class Graph {
 public:
  Graph() = default;
  static Graph from_sequence(const ArrivalSequence& seq);

  int size() const { return n_; }
  long long edge_count() const { return edges_; }

  /// All neighbors of v in the final graph, ascending.
  std::span<const int> neighbors(int v) const;
  /// Neighbors of v among v_1..v_i (the prefix graph G_i), ascending.
  std::span<const int> neighbors_in_prefix(int v, int i) const;

  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  int degree_in_prefix(int v, int i) const {
    return static_cast<int>(neighbors_in_prefix(v, i).size());
  }
  int max_degree() const;

  bool adjacent(int u, int v) const;

 private:
  int n_ = 0;
  long long edges_ = 0;
  std::vector<std::vector<int>> adj_;  // 1-based, sorted ascending
};

/// Component ids (1-based, in discovery order from the lowest vertex) for
/// the prefix graph G_i. Index 0 is unused; ids are assigned for 1..i.
std::vector<int> prefix_component_ids(const Graph& g, int i);
int prefix_component_count(const Graph& g, int i);
bool prefix_connected(const Graph& g, int i);

struct GraphClassReport {
  int n = 0;
  int max_degree = 0;
  bool always_connected = false;
  bool bipartite = false;
  std::vector<int> coloring;  // 2-coloring witness (0/1 per vertex) when bipartite
  bool is_tree = false;
};

/// Class properties of the final graph; always_connected is the only field
/// that depends on the arrival order.
GraphClassReport classify(const ArrivalSequence& seq);

struct LayerAssignment {
  std::vector<int> layer;        // 1-based, layer[0] unused
  std::vector<int> layer_sizes;  // l_0, l_1, ...

  int layer_count() const { return static_cast<int>(layer_sizes.size()); }
};

/// Layer numbers: L(v_1) = 0 and L(v_i) = 1 + min layer among the earlier
/// neighbors of v_i. Requires an always-connected sequence; throws
/// PreconditionError("not always-connected") otherwise.
LayerAssignment compute_layers(const ArrivalSequence& seq);

}  // namespace domino
