#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "domino/domination.hpp"

namespace domino {

class OnlineRun;

/// What a step policy may observe when vertex `step` arrives: the prefix
/// graph built so far (including the new vertex), the current selection, and
/// layer numbers of arrived vertices. Nothing about future vertices.
struct StepContext {
  int step;                        // i, 1-based
  std::span<const int> neighbors;  // earlier neighbors of v_i
  const OnlineRun& run;

  bool selected(int v) const;
  /// Layer of an arrived vertex. First vertices of components are layer 0.
  int layer(int v) const;
  std::span<const int> arrived_neighbors(int v) const;
};

/// A deterministic step policy. `act` is called once per arriving vertex and
/// returns the vertices to add (each must have arrived already). Adversaries
/// rely on determinism; policies must not carry hidden randomness.
struct Policy {
  std::string name;
  std::function<std::vector<int>(const StepContext&)> act;
};

Policy make_parent_policy();
Policy make_first_parent_policy(Variant variant);
Policy make_greedy_ids_policy();
Policy make_even_layer_policy(int parity);  // parity 0 or 1

/// Resolves the CLI names: parent, first-parent, greedy-ids,
/// even-layer:0, even-layer:1. Throws ConfigError on unknown names.
Policy policy_by_name(const std::string& name, Variant variant);
std::vector<std::string> known_policy_names();

/// Drives a policy one arrival at a time, enforcing the step contract and
/// per-prefix feasibility. Each run owns its state; runs are independent.
class OnlineRun {
 public:
  OnlineRun(Policy policy, Variant variant);

  /// Present the next vertex with its earlier neighbors. Applies the
  /// policy's response. Throws ContractViolation for impossible selections
  /// and FeasibilityViolation when D_i does not cover G_i.
  std::vector<int> feed(const std::vector<int>& neighbors);

  int steps() const { return static_cast<int>(seq_.arrivals.size()); }
  Variant variant() const { return variant_; }
  const std::string& policy_name() const { return policy_.name; }
  bool selected(int v) const { return chain_added_[static_cast<size_t>(v)] != 0; }
  int selected_count() const { return selected_count_; }
  int layer(int v) const { return layers_[static_cast<size_t>(v)]; }
  std::span<const int> arrived_neighbors(int v) const;
  const ArrivalSequence& sequence_so_far() const { return seq_; }

  SolutionChain chain() const;

 private:
  Policy policy_;
  Variant variant_;
  ArrivalSequence seq_;
  std::vector<std::vector<int>> adj_;  // arrived-only adjacency, 1-based
  std::vector<int> chain_added_;       // added_at, 1-based
  std::vector<int> layers_;            // generalized: 0 for component roots
  int selected_count_ = 0;

  void check_feasible(int step) const;
};

/// A finished run: the chain plus, on always-connected inputs, the number of
/// selected vertices per layer (s_i).
struct AlgorithmRun {
  std::string algorithm;
  Variant variant;
  SolutionChain chain;
  std::optional<std::vector<int>> per_layer_selected;

  int size() const { return chain.size(); }
};

/// Replays `seq` through `policy`, failing loudly if the policy ever leaves
/// a prefix infeasible for `variant`.
AlgorithmRun run_online(const Policy& policy, Variant variant, const ArrivalSequence& seq);

}  // namespace domino
