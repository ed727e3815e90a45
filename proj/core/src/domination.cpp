#include "domino/domination.hpp"

#include <algorithm>
#include <bit>
#include <queue>

#include "domino/errors.hpp"

namespace domino {

std::string to_string(Variant v) {
  switch (v) {
    case Variant::DS: return "ds";
    case Variant::CDS: return "cds";
    case Variant::TDS: return "tds";
    case Variant::IDS: return "ids";
  }
  return "?";
}

Variant variant_from_string(const std::string& s) {
  if (s == "ds") return Variant::DS;
  if (s == "cds") return Variant::CDS;
  if (s == "tds") return Variant::TDS;
  if (s == "ids") return Variant::IDS;
  throw ConfigError("unknown variant `" + s + "` (expected ds|cds|tds|ids)");
}

VertexSet::VertexSet(int universe)
    : n_(universe), words_(static_cast<size_t>((universe + 63) / 64), 0) {}

VertexSet::VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
  for (int v : members) insert(v);
}

VertexSet VertexSet::from_indices(int universe, const std::vector<int>& members) {
  VertexSet s(universe);
  for (int v : members) s.insert(v);
  return s;
}

bool VertexSet::contains(int v) const {
  if (v < 1 || v > n_) return false;
  return (words_[static_cast<size_t>((v - 1) / 64)] >> ((v - 1) % 64)) & 1u;
}

void VertexSet::insert(int v) {
  if (v < 1 || v > n_)
    throw PreconditionError("vertex " + std::to_string(v) + " outside universe 1.." +
                            std::to_string(n_));
  words_[static_cast<size_t>((v - 1) / 64)] |= std::uint64_t{1} << ((v - 1) % 64);
}

void VertexSet::erase(int v) {
  if (v < 1 || v > n_) return;
  words_[static_cast<size_t>((v - 1) / 64)] &= ~(std::uint64_t{1} << ((v - 1) % 64));
}

int VertexSet::size() const {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(size()));
  for (int v = 1; v <= n_; ++v)
    if (contains(v)) out.push_back(v);
  return out;
}

bool VertexSet::lex_less(const VertexSet& other) const {
  auto a = to_vector();
  auto b = other.to_vector();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

bool ds_feasible(const Graph& g, int prefix, const VertexSet& set) {
  for (int v = 1; v <= prefix; ++v) {
    if (set.contains(v)) continue;
    bool covered = false;
    for (int w : g.neighbors_in_prefix(v, prefix)) {
      if (set.contains(w)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

bool tds_feasible(const Graph& g, int prefix, const VertexSet& set) {
  for (int v = 1; v <= prefix; ++v) {
    auto nbrs = g.neighbors_in_prefix(v, prefix);
    if (nbrs.empty()) continue;  // isolated vertices are exempt
    bool covered = false;
    for (int w : nbrs) {
      if (set.contains(w)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

bool independent(const Graph& g, int prefix, const VertexSet& set) {
  for (int v = 1; v <= prefix; ++v) {
    if (!set.contains(v)) continue;
    for (int w : g.neighbors_in_prefix(v, prefix)) {
      if (w > v) break;  // each edge once
      if (set.contains(w)) return false;
    }
  }
  return true;
}

// One connected piece of selected vertices per component of G_i.
bool per_component_connected(const Graph& g, int prefix, const VertexSet& set) {
  auto comp = prefix_component_ids(g, prefix);
  std::vector<int> seen_piece(static_cast<size_t>(prefix) + 1, 0);
  std::vector<char> visited(static_cast<size_t>(prefix) + 1, 0);
  for (int v = 1; v <= prefix; ++v) {
    if (!set.contains(v) || visited[static_cast<size_t>(v)]) continue;
    int c = comp[static_cast<size_t>(v)];
    if (seen_piece[static_cast<size_t>(c)]) return false;  // second piece in this component
    seen_piece[static_cast<size_t>(c)] = 1;
    std::queue<int> bfs;
    bfs.push(v);
    visited[static_cast<size_t>(v)] = 1;
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop();
      for (int w : g.neighbors_in_prefix(u, prefix)) {
        if (set.contains(w) && !visited[static_cast<size_t>(w)]) {
          visited[static_cast<size_t>(w)] = 1;
          bfs.push(w);
        }
      }
    }
  }
  return true;
}

}  // namespace

bool is_feasible(Variant variant, const Graph& g, int prefix, const VertexSet& set) {
  if (prefix < 0 || prefix > g.size())
    throw PreconditionError("prefix " + std::to_string(prefix) + " outside 0.." +
                            std::to_string(g.size()));
  if (set.universe() < prefix)
    throw PreconditionError("set universe smaller than prefix");
  switch (variant) {
    case Variant::DS:
      return ds_feasible(g, prefix, set);
    case Variant::TDS:
      return tds_feasible(g, prefix, set);
    case Variant::IDS:
      return ds_feasible(g, prefix, set) && independent(g, prefix, set);
    case Variant::CDS:
      return ds_feasible(g, prefix, set) && per_component_connected(g, prefix, set);
  }
  return false;
}

bool is_feasible(Variant variant, const Graph& g, const VertexSet& set) {
  return is_feasible(variant, g, g.size(), set);
}

int components_of(const Graph& g, int prefix, const VertexSet& set) {
  int count = 0;
  std::vector<char> visited(static_cast<size_t>(prefix) + 1, 0);
  for (int v = 1; v <= prefix; ++v) {
    if (!set.contains(v) || visited[static_cast<size_t>(v)]) continue;
    ++count;
    std::queue<int> bfs;
    bfs.push(v);
    visited[static_cast<size_t>(v)] = 1;
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop();
      for (int w : g.neighbors_in_prefix(u, prefix)) {
        if (set.contains(w) && !visited[static_cast<size_t>(w)]) {
          visited[static_cast<size_t>(w)] = 1;
          bfs.push(w);
        }
      }
    }
  }
  return count;
}

int components_of(const Graph& g, const VertexSet& set) {
  return components_of(g, g.size(), set);
}

VertexSet SolutionChain::set_at(int i) const {
  VertexSet s(n());
  for (int v = 1; v <= n(); ++v) {
    int t = step_added(v);
    if (t > 0 && t <= i) s.insert(v);
  }
  return s;
}

int SolutionChain::size() const {
  int total = 0;
  for (int v = 1; v <= n(); ++v)
    if (selected(v)) ++total;
  return total;
}

bool is_valid_chain(Variant variant, const ArrivalSequence& seq, const SolutionChain& chain) {
  if (chain.n() != seq.n) return false;
  for (int v = 1; v <= seq.n; ++v) {
    int t = chain.step_added(v);
    if (t < 0 || t > seq.n) return false;
    if (t != 0 && t < v) return false;  // only already-presented vertices may be selected
  }
  Graph g = Graph::from_sequence(seq);
  for (int i = 1; i <= seq.n; ++i) {
    if (!is_feasible(variant, g, i, chain.set_at(i))) return false;
  }
  return true;
}

}  // namespace domino
