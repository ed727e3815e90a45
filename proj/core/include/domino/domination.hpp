#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "domino/graph.hpp"

namespace domino {

/// The four problem variants. Drives all feasibility predicates.
enum class Variant { DS, CDS, TDS, IDS };

std::string to_string(Variant v);
Variant variant_from_string(const std::string& s);  // "ds" | "cds" | "tds" | "ids"

/// A set of vertices over a fixed universe {1..n}.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::initializer_list<int> members);
  static VertexSet from_indices(int universe, const std::vector<int>& members);

  int universe() const { return n_; }
  bool contains(int v) const;
  void insert(int v);
  void erase(int v);
  int size() const;
  bool empty() const { return size() == 0; }
  std::vector<int> to_vector() const;  // ascending

  bool operator==(const VertexSet& other) const = default;

  /// True when the members, read as an ascending list, compare
  /// lexicographically before `other`'s.
  bool lex_less(const VertexSet& other) const;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Feasibility of `set` for `variant` on the prefix graph G_i.
///   DS:  every vertex of {1..i} is in the set or adjacent to a member.
///   CDS: DS holds and the members induce a connected subgraph within each
///        connected component of G_i.
///   TDS: every non-isolated vertex of G_i has a neighbor in the set;
///        isolated vertices are exempt.
///   IDS: DS holds and no two members are adjacent.
bool is_feasible(Variant variant, const Graph& g, int prefix, const VertexSet& set);
bool is_feasible(Variant variant, const Graph& g, const VertexSet& set);  // prefix = n

/// Number of connected components of the subgraph of G_i induced by `set`;
/// 0 for the empty set.
int components_of(const Graph& g, int prefix, const VertexSet& set);
int components_of(const Graph& g, const VertexSet& set);  // prefix = n

/// A monotone per-step selection D_1 <= ... <= D_n: added_at[v] is the step
/// at which v entered the solution (0 = never). Selections are irrevocable,
/// and a vertex may only be added once it has arrived: added_at[v] >= v.
struct SolutionChain {
  std::vector<int> added_at;  // 1-based, index 0 unused

  SolutionChain() = default;
  explicit SolutionChain(int n) : added_at(static_cast<size_t>(n) + 1, 0) {}

  int n() const { return static_cast<int>(added_at.size()) - 1; }
  int step_added(int v) const { return added_at[static_cast<size_t>(v)]; }
  void add(int v, int step) { added_at[static_cast<size_t>(v)] = step; }
  bool selected(int v) const { return step_added(v) != 0; }

  /// D_i = {v : 0 < added_at[v] <= i}
  VertexSet set_at(int i) const;
  VertexSet final_set() const { return set_at(n()); }
  int size() const;
  std::vector<int> members() const { return final_set().to_vector(); }
};

/// True iff the chain is structurally sound (0 <= added_at[v] <= n and
/// added_at[v] >= v when selected) and D_i is feasible for `variant` on G_i
/// at every step i.
bool is_valid_chain(Variant variant, const ArrivalSequence& seq, const SolutionChain& chain);

}  // namespace domino
