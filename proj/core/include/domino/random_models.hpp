#pragma once

#include <cstdint>
#include <random>

#include "domino/arrival_sequence.hpp"

namespace domino {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi]. Hand-rolled so that seeded streams are
/// stable across standard library implementations.
int rng_between(Rng& rng, int lo, int hi);

/// Random tree via uniform attachment in arrival order (always-connected).
ArrivalSequence random_tree(int n, Rng& rng);

/// Each new vertex attaches to a nonempty random subset of the earlier
/// vertices (always-connected by construction).
ArrivalSequence random_always_connected(int n, Rng& rng);

/// Always-connected and bipartite: a 2-coloring is maintained and each new
/// vertex picks its neighbors from a single color class.
ArrivalSequence random_bipartite_always_connected(int n, Rng& rng);

}  // namespace domino
