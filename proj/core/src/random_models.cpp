#include "domino/random_models.hpp"

#include <string>
#include <vector>

#include "domino/errors.hpp"

namespace domino {

int rng_between(Rng& rng, int lo, int hi) {
  if (lo > hi) throw PreconditionError("rng_between: empty range");
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

ArrivalSequence random_tree(int n, Rng& rng) {
  if (n < 1) throw PreconditionError("random_tree: n >= 1");
  std::vector<std::vector<int>> entries(static_cast<size_t>(n));
  for (int i = 2; i <= n; ++i)
    entries[static_cast<size_t>(i - 1)] = {rng_between(rng, 1, i - 1)};
  return ArrivalSequence(std::move(entries), "rand-tree-" + std::to_string(n));
}

ArrivalSequence random_always_connected(int n, Rng& rng) {
  if (n < 1) throw PreconditionError("random_always_connected: n >= 1");
  std::vector<std::vector<int>> entries(static_cast<size_t>(n));
  for (int i = 2; i <= n; ++i) {
    std::vector<int> nbrs;
    for (int j = 1; j < i; ++j)
      if (rng() % 100 < 35) nbrs.push_back(j);
    if (nbrs.empty()) nbrs.push_back(rng_between(rng, 1, i - 1));
    entries[static_cast<size_t>(i - 1)] = std::move(nbrs);
  }
  return ArrivalSequence(std::move(entries), "rand-conn-" + std::to_string(n));
}

ArrivalSequence random_bipartite_always_connected(int n, Rng& rng) {
  if (n < 1) throw PreconditionError("random_bipartite_always_connected: n >= 1");
  std::vector<std::vector<int>> entries(static_cast<size_t>(n));
  std::vector<int> color(static_cast<size_t>(n) + 1, 0);
  for (int i = 2; i <= n; ++i) {
    // Pick a side whose opposite class is nonempty, then attach to a
    // nonempty subset of that class.
    std::vector<int> side0, side1;
    for (int j = 1; j < i; ++j) (color[static_cast<size_t>(j)] == 0 ? side0 : side1).push_back(j);
    int my_color;
    if (side1.empty()) my_color = 1;
    else my_color = static_cast<int>(rng() % 2);
    const std::vector<int>& pool = my_color == 1 ? side0 : side1;
    std::vector<int> nbrs;
    for (int j : pool)
      if (rng() % 100 < 45) nbrs.push_back(j);
    if (nbrs.empty()) nbrs.push_back(pool[static_cast<size_t>(rng() % pool.size())]);
    color[static_cast<size_t>(i)] = my_color;
    entries[static_cast<size_t>(i - 1)] = std::move(nbrs);
  }
  return ArrivalSequence(std::move(entries), "rand-bip-" + std::to_string(n));
}

}  // namespace domino
