#pragma once

#include <string>
#include <vector>

#include "domino/online.hpp"

namespace domino {

/// Outcome of one adversary-vs-algorithm duel. Replaying `sequence` against
/// the same deterministic policy reproduces the same chain.
struct AdversaryTranscript {
  ArrivalSequence sequence;
  AlgorithmRun run;
  std::vector<std::string> rationale;  // one tag per step
};

/// Grows a tree one vertex at a time. While some arrived vertex is outside
/// the algorithm's selection, the next vertex attaches to it (there is at
/// most one such vertex at any time); otherwise it attaches to v_1. Forces a
/// chain of size >= n-1 for any feasible policy.
AdversaryTranscript tree_adversary(int n, const Policy& policy, Variant variant);

/// Emits a root, delta first-layer vertices, then delta-1 second-layer
/// vertices with strictly nested neighborhoods N(w_1) > ... > N(w_{delta-1}),
/// |N(w_i)| = delta-i+1, each chosen to contain as many currently unselected
/// first-layer vertices as possible (ties to lower index). Forces a chain of
/// size >= delta while the emitted graph has an incremental CDS of size 2.
AdversaryTranscript two_layer_adversary(int delta, const Policy& policy, Variant variant);

}  // namespace domino
