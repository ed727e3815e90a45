#pragma once

#include <string>
#include <vector>

namespace domino {

/// An ordered vertex-arrival stream. Vertices are 1-based and named by their
/// arrival position: entry i of `arrivals` lists the neighbors of v_i among
/// v_1..v_{i-1}. Neighbor lists are kept sorted ascending.
struct ArrivalSequence {
  int n = 0;
  std::vector<std::vector<int>> arrivals;  // arrivals[i-1] = earlier neighbors of v_i
  std::string name;

  ArrivalSequence() = default;
  ArrivalSequence(std::vector<std::vector<int>> entries, std::string label = "");

  /// Throws ValidationError unless every entry lists distinct earlier
  /// vertices only. Normalizes neighbor lists to sorted order.
  void validate();

  long long edge_count() const;
};

}  // namespace domino
