#include "domino/arrival_sequence.hpp"

#include <algorithm>
#include <string>

#include "domino/errors.hpp"

namespace domino {

ArrivalSequence::ArrivalSequence(std::vector<std::vector<int>> entries, std::string label)
    : n(static_cast<int>(entries.size())), arrivals(std::move(entries)), name(std::move(label)) {
  validate();
}

void ArrivalSequence::validate() {
  if (n != static_cast<int>(arrivals.size()))
    throw ValidationError("entry count " + std::to_string(arrivals.size()) +
                          " does not match n = " + std::to_string(n));
  for (int i = 1; i <= n; ++i) {
    auto& nbrs = arrivals[static_cast<size_t>(i - 1)];
    std::sort(nbrs.begin(), nbrs.end());
    for (size_t k = 0; k < nbrs.size(); ++k) {
      int j = nbrs[k];
      if (j < 1 || j >= i)
        throw ValidationError("entry " + std::to_string(i) + " lists neighbor " +
                              std::to_string(j) + ", which has not arrived before it");
      if (k > 0 && nbrs[k - 1] == j)
        throw ValidationError("entry " + std::to_string(i) + " lists neighbor " +
                              std::to_string(j) + " twice");
    }
  }
}

long long ArrivalSequence::edge_count() const {
  long long m = 0;
  for (const auto& nbrs : arrivals) m += static_cast<long long>(nbrs.size());
  return m;
}

}  // namespace domino
