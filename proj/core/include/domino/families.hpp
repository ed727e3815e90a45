#pragma once

#include <map>
#include <string>

#include "domino/arrival_sequence.hpp"

namespace domino {

/// Where the center of a star appears in the arrival order.
enum class CenterPos { First, Second, Last };

// Static adversarial families, each emitted in its defined adversarial
// order. All generators are pure functions of their parameters and validate
// their constraints (throwing PreconditionError naming the violated one).

/// P_n in the standard order: a leaf first, each vertex adjacent to the
/// previous one.
ArrivalSequence path_standard(int n);

/// Star K_{1,n-1}. center = Last yields n-1 isolated arrivals followed by
/// the center (not always-connected).
ArrivalSequence star(int n, CenterPos center);

/// `copies` disjoint stars on delta+1 vertices each, leaves before center
/// within each star, stars consecutive.
ArrivalSequence disjoint_stars(int copies, int delta);

/// Path P_delta plus an apex adjacent to every path vertex; path first
/// (standard order), apex last.
ArrivalSequence fan(int delta);

/// k fans of degree delta joined in a path-like manner: consecutive fans
/// share one path endpoint. n = k(delta+1) - (k-1).
ArrivalSequence alternating_fan(int k, int delta);

/// Path on k(delta-1) vertices in standard order followed by k chord
/// vertices; chord i is adjacent to the i-th section of delta-1 path
/// vertices, and chords are matched pairwise (u_{2i-1} -- u_{2i}). k even.
ArrivalSequence modular_bridge(int k, int delta);

/// modular_bridge(k, delta-1) with the extra edges u_{2i} -- u_{2i+1}
/// joining consecutive chord pairs. k even.
ArrivalSequence bridge(int k, int delta);

/// Star K_{1,delta} plus a perfect matching on the pendants. Pendants
/// arrive as matched pairs (every even prefix is a perfect matching), the
/// center last. delta even.
ArrivalSequence rotor(int delta);

/// Path on n-2 vertices plus two apexes, one adjacent to the even-numbered
/// path positions and one to the odd-numbered ones; the apexes are adjacent
/// to each other. Path first, then the two apexes.
ArrivalSequence two_sided_fan(int n);

/// Path P_m (m = 2 mod 6) with m pendant vertices distributed over the
/// hosts v_2, v_5, ..., v_m; pendants arrive after the path, grouped by
/// host in host order.
ArrivalSequence pendant_path(int m);

/// Path P_{n_path} with delta-2 pendant vertices attached to every
/// even-indexed path vertex; pendants arrive after the path, grouped by
/// host in host order.
ArrivalSequence ids_pendant_path(int n_path, int delta);

/// A family tag plus named integer parameters (center accepts
/// first|second|last). Used by the CLI and experiment configs.
struct FamilySpec {
  std::string family;
  std::map<std::string, std::string> params;
};

/// Dispatches on spec.family: path, star, disjoint-stars, fan,
/// alternating-fan, modular-bridge, bridge, rotor, two-sided-fan,
/// pendant-path, ids-pendant-path (underscores accepted).
ArrivalSequence generate(const FamilySpec& spec);

}  // namespace domino
