#pragma once

#include "domino/domination.hpp"

namespace domino {

/// Size-bound certificate for the constructive transformations.
struct TransformCertificate {
  int input_size = 0;
  int input_components = 0;
  VertexSet output_set;         // connectify
  SolutionChain output_chain;   // the two chain transforms
  int output_size = 0;
  int bound_value = 0;
  bool bound_satisfied = false;
};

/// Turns a dominating set S of an always-connected sequence's final graph
/// into a connected dominating set S' with |S'| <= |S| + 2(c(S)-1):
/// repeatedly selects a connecting path of at most two unselected vertices
/// between two components of the current set (lexicographically smallest
/// candidate first).
TransformCertificate connectify(const ArrivalSequence& seq, const VertexSet& dominating);

/// Turns a valid DS chain R on an always-connected sequence into a valid CDS
/// chain R' with |R'| <= |R| + c(R) - 1. Replays the arrivals and, whenever
/// the selection splits into several pieces inside one prefix, adds the
/// lowest-index arrived vertex adjacent to two pieces.
TransformCertificate incremental_connectify(const ArrivalSequence& seq, const SolutionChain& ds_chain);

/// On a tree, turns a dominating set S into a valid DS chain R'' with
/// |R''| <= |S| + c(S): v_1 and all of S are selected at arrival, and any
/// arriving vertex not dominated by the current selection is selected too.
TransformCertificate tree_incremental_from_set(const ArrivalSequence& seq, const VertexSet& dominating);

}  // namespace domino
