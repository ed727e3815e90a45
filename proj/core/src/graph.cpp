#include "domino/graph.hpp"

#include <algorithm>
#include <queue>

#include "domino/errors.hpp"

namespace domino {

Graph Graph::from_sequence(const ArrivalSequence& seq) {
  ArrivalSequence checked = seq;
  checked.validate();

  Graph g;
  g.n_ = checked.n;
  g.adj_.assign(static_cast<size_t>(checked.n) + 1, {});
  for (int i = 1; i <= checked.n; ++i) {
    for (int j : checked.arrivals[static_cast<size_t>(i - 1)]) {
      g.adj_[static_cast<size_t>(i)].push_back(j);
      g.adj_[static_cast<size_t>(j)].push_back(i);
      ++g.edges_;
    }
  }
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

std::span<const int> Graph::neighbors(int v) const {
  const auto& nbrs = adj_[static_cast<size_t>(v)];
  return {nbrs.data(), nbrs.size()};
}

std::span<const int> Graph::neighbors_in_prefix(int v, int i) const {
  const auto& nbrs = adj_[static_cast<size_t>(v)];
  auto end = std::upper_bound(nbrs.begin(), nbrs.end(), i);
  return {nbrs.data(), static_cast<size_t>(end - nbrs.begin())};
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 1; v <= n_; ++v) d = std::max(d, degree(v));
  return d;
}

bool Graph::adjacent(int u, int v) const {
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<int> prefix_component_ids(const Graph& g, int i) {
  std::vector<int> comp(static_cast<size_t>(i) + 1, 0);
  int next = 0;
  for (int start = 1; start <= i; ++start) {
    if (comp[static_cast<size_t>(start)] != 0) continue;
    comp[static_cast<size_t>(start)] = ++next;
    std::queue<int> bfs;
    bfs.push(start);
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop();
      for (int w : g.neighbors_in_prefix(v, i)) {
        if (comp[static_cast<size_t>(w)] == 0) {
          comp[static_cast<size_t>(w)] = next;
          bfs.push(w);
        }
      }
    }
  }
  return comp;
}

int prefix_component_count(const Graph& g, int i) {
  auto comp = prefix_component_ids(g, i);
  int count = 0;
  for (int v = 1; v <= i; ++v) count = std::max(count, comp[static_cast<size_t>(v)]);
  return count;
}

bool prefix_connected(const Graph& g, int i) {
  return i <= 1 || prefix_component_count(g, i) == 1;
}

GraphClassReport classify(const ArrivalSequence& seq) {
  Graph g = Graph::from_sequence(seq);
  GraphClassReport report;
  report.n = seq.n;
  report.max_degree = g.max_degree();

  // Edges arrive with their later endpoint, so every prefix is connected
  // exactly when each vertex after the first attaches to an earlier one.
  report.always_connected = true;
  for (int i = 2; i <= seq.n; ++i) {
    if (seq.arrivals[static_cast<size_t>(i - 1)].empty()) {
      report.always_connected = false;
      break;
    }
  }

  bool connected = prefix_connected(g, seq.n);
  report.is_tree = seq.n > 0 && connected && g.edge_count() == seq.n - 1;

  // BFS 2-coloring from v_1 (then the lowest unvisited vertex per component).
  report.coloring.assign(static_cast<size_t>(seq.n) + 1, -1);
  report.bipartite = true;
  for (int start = 1; start <= seq.n && report.bipartite; ++start) {
    if (report.coloring[static_cast<size_t>(start)] != -1) continue;
    report.coloring[static_cast<size_t>(start)] = 0;
    std::queue<int> bfs;
    bfs.push(start);
    while (!bfs.empty() && report.bipartite) {
      int v = bfs.front();
      bfs.pop();
      for (int w : g.neighbors(v)) {
        int& cw = report.coloring[static_cast<size_t>(w)];
        if (cw == -1) {
          cw = 1 - report.coloring[static_cast<size_t>(v)];
          bfs.push(w);
        } else if (cw == report.coloring[static_cast<size_t>(v)]) {
          report.bipartite = false;
          break;
        }
      }
    }
  }
  if (!report.bipartite) report.coloring.clear();
  return report;
}

LayerAssignment compute_layers(const ArrivalSequence& seq) {
  LayerAssignment out;
  out.layer.assign(static_cast<size_t>(seq.n) + 1, 0);
  for (int i = 2; i <= seq.n; ++i) {
    const auto& nbrs = seq.arrivals[static_cast<size_t>(i - 1)];
    if (nbrs.empty())
      throw PreconditionError("not always-connected: vertex " + std::to_string(i) +
                              " has no earlier neighbor");
    int best = out.layer[static_cast<size_t>(nbrs.front())];
    for (int j : nbrs) best = std::min(best, out.layer[static_cast<size_t>(j)]);
    out.layer[static_cast<size_t>(i)] = best + 1;
  }
  int top = 0;
  for (int v = 1; v <= seq.n; ++v) top = std::max(top, out.layer[static_cast<size_t>(v)]);
  out.layer_sizes.assign(static_cast<size_t>(seq.n > 0 ? top + 1 : 0), 0);
  for (int v = 1; v <= seq.n; ++v) ++out.layer_sizes[static_cast<size_t>(out.layer[static_cast<size_t>(v)])];
  return out;
}

}  // namespace domino
