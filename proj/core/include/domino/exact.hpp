#pragma once

#include <cstdint>
#include <optional>

#include "domino/domination.hpp"

namespace domino {

enum class Baseline { Offline, Incremental };
std::string to_string(Baseline b);

/// Instance-size caps for the exact solvers. Chosen so that every stock
/// experiment finishes in seconds; raise explicitly for bigger instances.
struct SolverCaps {
  int off = 20;
  int inc = 14;
};

/// Applies the DOMINO_CAP_OVERRIDE environment variable (a single integer
/// overriding both caps) on top of `base`.
SolverCaps caps_from_env(SolverCaps base = {});

struct SolveResult {
  Variant variant;
  Baseline baseline;
  int size = 0;
  VertexSet witness_set;        // offline witness
  SolutionChain witness_chain;  // incremental witness
  std::uint64_t nodes_explored = 0;
};

/// Exact offline optimum on the final graph: pruned subset search in
/// lexicographic order by increasing cardinality, so the witness is the
/// lexicographically smallest optimum. Order-independent.
/// Throws CapExceeded when seq.n > caps.off.
SolveResult opt_off(Variant variant, const ArrivalSequence& seq, const SolverCaps& caps = {});

/// Exact incremental optimum: minimum |D_n| over all valid chains.
/// Depth-first over steps, branching on inclusion-minimal augmentations that
/// restore feasibility, deduplicating on (step, selection) states and pruning
/// by the best size found. Witness is the chain whose final set is
/// lexicographically smallest among optima.
/// Throws CapExceeded when seq.n > caps.inc.
SolveResult opt_inc(Variant variant, const ArrivalSequence& seq, const SolverCaps& caps = {});

}  // namespace domino
