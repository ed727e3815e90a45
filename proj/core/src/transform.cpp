#include "domino/transform.hpp"

#include <algorithm>
#include <vector>

#include "domino/errors.hpp"

namespace domino {
namespace {

void require_always_connected(const ArrivalSequence& seq) {
  for (int i = 2; i <= seq.n; ++i)
    if (seq.arrivals[static_cast<size_t>(i - 1)].empty())
      throw PreconditionError("sequence is not always-connected");
}

// Component id per selected vertex within the prefix graph, 0 for
// unselected; ids count pieces of the selection, not of the graph.
std::vector<int> selection_pieces(const Graph& g, int prefix, const VertexSet& set, int& pieces) {
  std::vector<int> piece(static_cast<size_t>(prefix) + 1, 0);
  pieces = 0;
  for (int v = 1; v <= prefix; ++v) {
    if (!set.contains(v) || piece[static_cast<size_t>(v)] != 0) continue;
    ++pieces;
    std::vector<int> stack{v};
    piece[static_cast<size_t>(v)] = pieces;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors_in_prefix(u, prefix)) {
        if (set.contains(w) && piece[static_cast<size_t>(w)] == 0) {
          piece[static_cast<size_t>(w)] = pieces;
          stack.push_back(w);
        }
      }
    }
  }
  return piece;
}

}  // namespace

TransformCertificate connectify(const ArrivalSequence& seq, const VertexSet& dominating) {
  ArrivalSequence checked = seq;
  checked.validate();
  require_always_connected(checked);
  Graph g = Graph::from_sequence(checked);
  if (!is_feasible(Variant::DS, g, dominating))
    throw PreconditionError("connectify: the given set does not dominate the final graph");

  TransformCertificate cert;
  cert.input_size = dominating.size();
  cert.input_components = components_of(g, dominating);
  cert.bound_value = cert.input_size + 2 * (cert.input_components - 1);

  VertexSet current = dominating;
  int merges = 0;
  while (components_of(g, current) > 1) {
    if (++merges > cert.input_components)
      throw PreconditionError("connectify: no merging path found");  // cannot happen on valid input

    int pieces = 0;
    auto piece = selection_pieces(g, g.size(), current, pieces);

    // Connecting paths of at most two unselected vertices, as sorted tuples;
    // the lexicographically smallest candidate wins.
    std::vector<std::vector<int>> candidates;
    auto pieces_adjacent = [&](int u) {
      std::vector<int> ids;
      for (int w : g.neighbors(u)) {
        int id = piece[static_cast<size_t>(w)];
        if (id != 0 && std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
      }
      return ids;
    };
    for (int u = 1; u <= g.size(); ++u) {
      if (current.contains(u)) continue;
      auto ids = pieces_adjacent(u);
      if (ids.size() >= 2) candidates.push_back({u});
    }
    for (int u = 1; u <= g.size(); ++u) {
      if (current.contains(u)) continue;
      auto ids_u = pieces_adjacent(u);
      for (int w : g.neighbors(u)) {
        if (w <= u || current.contains(w)) continue;
        auto ids_w = pieces_adjacent(w);
        bool joins = false;
        for (int a : ids_u) {
          for (int b : ids_w) {
            if (a != b) {
              joins = true;
              break;
            }
          }
          if (joins) break;
        }
        if (joins) candidates.push_back({u, w});
      }
    }
    if (candidates.empty())
      throw PreconditionError("connectify: no merging path of length <= 2 exists");
    auto best = *std::min_element(candidates.begin(), candidates.end());
    for (int v : best) current.insert(v);
  }

  cert.output_set = current;
  cert.output_size = current.size();
  cert.bound_satisfied = cert.output_size <= cert.bound_value &&
                         is_feasible(Variant::CDS, g, current);
  return cert;
}

TransformCertificate incremental_connectify(const ArrivalSequence& seq, const SolutionChain& chain) {
  ArrivalSequence checked = seq;
  checked.validate();
  require_always_connected(checked);
  if (!is_valid_chain(Variant::DS, checked, chain))
    throw PreconditionError("incremental_connectify: input is not a valid ds chain");
  Graph g = Graph::from_sequence(checked);

  TransformCertificate cert;
  cert.input_size = chain.size();
  cert.input_components = components_of(g, chain.final_set());
  cert.bound_value = cert.input_size + cert.input_components - 1;

  SolutionChain out(checked.n);
  VertexSet current(checked.n);
  for (int i = 1; i <= checked.n; ++i) {
    // Apply the input chain's additions scheduled for this step.
    for (int v = 1; v <= i; ++v) {
      if (chain.step_added(v) == i && !current.contains(v)) {
        current.insert(v);
        out.add(v, i);
      }
    }
    // The prefix is connected, so a split selection must be repaired. An
    // arrived unselected vertex adjacent to two pieces always exists: every
    // arrived vertex was dominated at its own arrival and therefore touches
    // the piece that dominated it.
    while (true) {
      int pieces = 0;
      auto piece = selection_pieces(g, i, current, pieces);
      if (pieces <= 1) break;
      int middle = 0;
      for (int u = 1; u <= i && middle == 0; ++u) {
        if (current.contains(u)) continue;
        int seen = 0;
        for (int w : g.neighbors_in_prefix(u, i)) {
          int id = piece[static_cast<size_t>(w)];
          if (id != 0) {
            if (seen == 0) seen = id;
            else if (seen != id) {
              middle = u;
              break;
            }
          }
        }
      }
      if (middle == 0)
        throw PreconditionError("incremental_connectify: no single-vertex reconnection exists");
      current.insert(middle);
      out.add(middle, i);
    }
  }

  cert.output_chain = out;
  cert.output_size = out.size();
  cert.bound_satisfied = cert.output_size <= cert.bound_value &&
                         is_valid_chain(Variant::CDS, checked, out);
  return cert;
}

TransformCertificate tree_incremental_from_set(const ArrivalSequence& seq, const VertexSet& dominating) {
  ArrivalSequence checked = seq;
  checked.validate();
  require_always_connected(checked);
  Graph g = Graph::from_sequence(checked);
  GraphClassReport cls = classify(checked);
  if (!cls.is_tree) throw PreconditionError("tree_incremental_from_set: final graph is not a tree");
  if (!is_feasible(Variant::DS, g, dominating))
    throw PreconditionError("tree_incremental_from_set: the given set does not dominate the tree");

  TransformCertificate cert;
  cert.input_size = dominating.size();
  cert.input_components = components_of(g, dominating);
  cert.bound_value = cert.input_size + cert.input_components;

  SolutionChain out(checked.n);
  for (int i = 1; i <= checked.n; ++i) {
    if (i == 1 || dominating.contains(i)) {
      out.add(i, i);
      continue;
    }
    bool covered = false;
    for (int w : g.neighbors_in_prefix(i, i)) {
      if (out.step_added(w) != 0) {
        covered = true;
        break;
      }
    }
    if (!covered) out.add(i, i);  // a bad vertex
  }

  cert.output_chain = out;
  cert.output_size = out.size();
  cert.bound_satisfied = cert.output_size <= cert.bound_value &&
                         is_valid_chain(Variant::DS, checked, out);
  return cert;
}

}  // namespace domino
