#include "domino/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>
#include <unordered_set>
#include <vector>

#include "domino/errors.hpp"

namespace domino {

std::string to_string(Baseline b) {
  return b == Baseline::Offline ? "off" : "inc";
}

SolverCaps caps_from_env(SolverCaps base) {
  if (const char* raw = std::getenv("DOMINO_CAP_OVERRIDE")) {
    int v = std::atoi(raw);
    if (v > 0) {
      base.off = v;
      base.inc = v;
    }
  }
  return base;
}

namespace {

constexpr int kMaskLimit = 64;  // fixed-width bitset world

std::uint64_t bit(int v) { return std::uint64_t{1} << (v - 1); }

std::uint64_t arrived_mask(int i) {
  return i >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << i) - 1;
}

int lowest_vertex(std::uint64_t mask) { return std::countr_zero(mask) + 1; }

// Final-graph neighborhoods as bitmasks; prefix neighborhoods are obtained
// by intersecting with arrived_mask(i).
struct MaskGraph {
  int n = 0;
  std::vector<std::uint64_t> nbr;  // 1-based

  static MaskGraph build(const ArrivalSequence& seq) {
    MaskGraph mg;
    mg.n = seq.n;
    mg.nbr.assign(static_cast<size_t>(seq.n) + 1, 0);
    for (int i = 1; i <= seq.n; ++i) {
      for (int j : seq.arrivals[static_cast<size_t>(i - 1)]) {
        mg.nbr[static_cast<size_t>(i)] |= bit(j);
        mg.nbr[static_cast<size_t>(j)] |= bit(i);
      }
    }
    return mg;
  }

  std::uint64_t nbr_in(int v, int prefix) const {
    return nbr[static_cast<size_t>(v)] & arrived_mask(prefix);
  }
};

std::uint64_t coverage_closed(const MaskGraph& mg, int prefix, std::uint64_t mask) {
  std::uint64_t cov = mask;
  for (std::uint64_t rest = mask; rest;) {
    int v = lowest_vertex(rest);
    rest &= rest - 1;
    cov |= mg.nbr_in(v, prefix);
  }
  return cov;
}

std::uint64_t coverage_open(const MaskGraph& mg, int prefix, std::uint64_t mask) {
  std::uint64_t cov = 0;
  for (std::uint64_t rest = mask; rest;) {
    int v = lowest_vertex(rest);
    rest &= rest - 1;
    cov |= mg.nbr_in(v, prefix);
  }
  return cov;
}

std::uint64_t non_isolated(const MaskGraph& mg, int prefix) {
  std::uint64_t out = 0;
  for (int v = 1; v <= prefix; ++v)
    if (mg.nbr_in(v, prefix)) out |= bit(v);
  return out;
}

bool independent(const MaskGraph& mg, int prefix, std::uint64_t mask) {
  for (std::uint64_t rest = mask; rest;) {
    int v = lowest_vertex(rest);
    rest &= rest - 1;
    if (mg.nbr_in(v, prefix) & mask) return false;
  }
  return true;
}

// Component masks of the prefix graph G_i.
std::vector<std::uint64_t> prefix_components(const MaskGraph& mg, int prefix) {
  std::vector<std::uint64_t> comps;
  std::uint64_t left = arrived_mask(prefix);
  while (left) {
    std::uint64_t frontier = bit(lowest_vertex(left));
    std::uint64_t comp = 0;
    while (frontier) {
      comp |= frontier;
      std::uint64_t next = 0;
      for (std::uint64_t rest = frontier; rest;) {
        int v = lowest_vertex(rest);
        rest &= rest - 1;
        next |= mg.nbr_in(v, prefix);
      }
      frontier = next & ~comp;
    }
    comps.push_back(comp);
    left &= ~comp;
  }
  return comps;
}

// One connected blob of selected vertices within `within`.
bool blob_connected(const MaskGraph& mg, int prefix, std::uint64_t blob) {
  if (blob == 0) return true;
  std::uint64_t reached = bit(lowest_vertex(blob));
  std::uint64_t frontier = reached;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t rest = frontier; rest;) {
      int v = lowest_vertex(rest);
      rest &= rest - 1;
      next |= mg.nbr_in(v, prefix) & blob;
    }
    frontier = next & ~reached;
    reached |= frontier;
  }
  return reached == blob;
}

bool mask_feasible(const MaskGraph& mg, Variant variant, int prefix, std::uint64_t mask) {
  std::uint64_t arr = arrived_mask(prefix);
  switch (variant) {
    case Variant::DS:
      return (coverage_closed(mg, prefix, mask) & arr) == arr;
    case Variant::TDS: {
      std::uint64_t need = non_isolated(mg, prefix);
      return (coverage_open(mg, prefix, mask) & need) == need;
    }
    case Variant::IDS:
      return (coverage_closed(mg, prefix, mask) & arr) == arr && independent(mg, prefix, mask);
    case Variant::CDS: {
      if ((coverage_closed(mg, prefix, mask) & arr) != arr) return false;
      for (std::uint64_t comp : prefix_components(mg, prefix))
        if (!blob_connected(mg, prefix, mask & comp)) return false;
      return true;
    }
  }
  return false;
}

VertexSet mask_to_set(int n, std::uint64_t mask) {
  VertexSet s(n);
  for (std::uint64_t rest = mask; rest;) {
    int v = lowest_vertex(rest);
    rest &= rest - 1;
    s.insert(v);
  }
  return s;
}

// Members read as ascending lists; the set containing the lowest differing
// vertex is the smaller one.
bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
  std::uint64_t diff = a ^ b;
  if (diff == 0) return false;
  return a & (diff & ~(diff - 1));
}

// ---------------------------------------------------------------------------
// Offline optimum: combinations in lexicographic order by rising cardinality.

struct OffSearch {
  const MaskGraph& mg;
  Variant variant;
  int n;
  std::uint64_t target;      // vertices that must be covered
  int cover_cap;             // max new coverage per selected vertex
  std::uint64_t nodes = 0;
  std::uint64_t found = 0;

  bool rec(int next, int remaining, std::uint64_t chosen, std::uint64_t covered) {
    ++nodes;
    if (remaining == 0) {
      if ((covered & target) == target && mask_feasible(mg, variant, n, chosen)) {
        found = chosen;
        return true;
      }
      return false;
    }
    std::uint64_t uncovered = target & ~covered;
    if (std::popcount(uncovered) > remaining * cover_cap) return false;
    if (uncovered) {
      // The lowest uncovered vertex must still be dominatable by candidates >= next.
      int u = lowest_vertex(uncovered);
      std::uint64_t doms = mg.nbr_in(u, n);
      if (variant != Variant::TDS) doms |= bit(u);
      if ((doms & ~(arrived_mask(next - 1))) == 0) return false;
    }
    for (int v = next; v <= n - remaining + 1; ++v) {
      if (variant == Variant::IDS && (mg.nbr_in(v, n) & chosen)) continue;
      std::uint64_t gain = (variant == Variant::TDS) ? mg.nbr_in(v, n)
                                                     : (mg.nbr_in(v, n) | bit(v));
      if (rec(v + 1, remaining - 1, chosen | bit(v), covered | gain)) return true;
    }
    return false;
  }
};

// ---------------------------------------------------------------------------
// Incremental optimum: DFS over steps, inclusion-minimal augmentations only.
// Restricting branching to inclusion-minimal augmentations is complete for
// DS/TDS/CDS because feasibility is monotone above a feasible selection, so
// any optimal final set can be reached by adding, at each step, a minimal
// feasibility-restoring subset of it. The IDS augmentation is forced.

struct IncSearch {
  const MaskGraph& mg;
  Variant variant;
  int n;
  int best_size;
  std::uint64_t best_mask = ~std::uint64_t{0};
  std::vector<int> best_added_at;
  std::vector<int> added_at;
  std::vector<std::unordered_set<std::uint64_t>> visited;
  std::uint64_t nodes = 0;

  IncSearch(const MaskGraph& mg, Variant variant)
      : mg(mg),
        variant(variant),
        n(mg.n),
        best_size(mg.n + 1),
        added_at(static_cast<size_t>(mg.n) + 1, 0),
        visited(static_cast<size_t>(mg.n) + 2) {}

  std::vector<std::uint64_t> augmentations(int i, std::uint64_t mask) const {
    std::uint64_t ni = mg.nbr_in(i, i - 1);
    std::vector<std::uint64_t> out;
    switch (variant) {
      case Variant::DS: {
        if (ni & mask) {
          out.push_back(0);
        } else {
          for (std::uint64_t rest = ni & ~mask; rest; rest &= rest - 1)
            out.push_back(bit(lowest_vertex(rest)));
          out.push_back(bit(i));
        }
        break;
      }
      case Variant::IDS: {
        out.push_back((ni & mask) ? 0 : bit(i));
        break;
      }
      case Variant::TDS: {
        if (ni == 0) {
          out.push_back(0);
          break;
        }
        // Previously isolated neighbors now need v_i selected.
        std::uint64_t forced_by = 0;
        for (std::uint64_t rest = ni; rest; rest &= rest - 1) {
          int w = lowest_vertex(rest);
          if (mg.nbr_in(w, i - 1) == 0) forced_by |= bit(w);
        }
        bool dominated = (ni & mask) != 0;
        if (forced_by == 0) {
          if (dominated) {
            out.push_back(0);
          } else {
            for (std::uint64_t rest = ni & ~mask; rest; rest &= rest - 1)
              out.push_back(bit(lowest_vertex(rest)));
          }
        } else if (dominated) {
          out.push_back(bit(i));
        } else {
          for (std::uint64_t rest = ni & ~mask; rest; rest &= rest - 1)
            out.push_back(bit(i) | bit(lowest_vertex(rest)));
        }
        break;
      }
      case Variant::CDS: {
        if (ni == 0) {
          out.push_back(bit(i));
          break;
        }
        auto comps = prefix_components(mg, i - 1);
        std::vector<std::uint64_t> touched;
        for (std::uint64_t comp : comps)
          if (comp & ni) touched.push_back(comp);
        if (touched.size() == 1) {
          if (ni & mask) {
            out.push_back(0);
          } else {
            for (std::uint64_t rest = ni & ~mask; rest; rest &= rest - 1)
              out.push_back(bit(lowest_vertex(rest)));
          }
        } else {
          // v_i merges several components: it joins the selection, plus one
          // bridge into every component whose selected part it cannot reach
          // directly.
          std::vector<std::uint64_t> bridge_sets;
          for (std::uint64_t comp : touched) {
            if (ni & mask & comp) continue;  // adjacent to this blob already
            bridge_sets.push_back(ni & comp & ~mask);
          }
          std::vector<std::uint64_t> partial{bit(i)};
          for (std::uint64_t options : bridge_sets) {
            std::vector<std::uint64_t> next;
            for (std::uint64_t base : partial)
              for (std::uint64_t rest = options; rest; rest &= rest - 1)
                next.push_back(base | bit(lowest_vertex(rest)));
            partial = std::move(next);
          }
          out = std::move(partial);
        }
        break;
      }
    }
    return out;
  }

  void dfs(int i, std::uint64_t mask) {
    ++nodes;
    if (std::popcount(mask) > best_size) return;
    if (i > n) {
      int size = std::popcount(mask);
      if (size < best_size || (size == best_size && mask_lex_less(mask, best_mask))) {
        best_size = size;
        best_mask = mask;
        best_added_at = added_at;
      }
      return;
    }
    if (!visited[static_cast<size_t>(i)].insert(mask).second) return;

    auto augs = augmentations(i, mask);
    std::sort(augs.begin(), augs.end(), [](std::uint64_t a, std::uint64_t b) {
      int pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa < pb : a < b;
    });
    for (std::uint64_t a : augs) {
      if (!mask_feasible(mg, variant, i, mask | a)) continue;
      for (std::uint64_t rest = a; rest; rest &= rest - 1)
        added_at[static_cast<size_t>(lowest_vertex(rest))] = i;
      dfs(i + 1, mask | a);
      for (std::uint64_t rest = a; rest; rest &= rest - 1)
        added_at[static_cast<size_t>(lowest_vertex(rest))] = 0;
    }
  }
};

}  // namespace

SolveResult opt_off(Variant variant, const ArrivalSequence& seq, const SolverCaps& caps) {
  if (seq.n > caps.off)
    throw CapExceeded("opt_off refused: n = " + std::to_string(seq.n) + " exceeds cap " +
                      std::to_string(caps.off) +
                      " (raise --cap-off or DOMINO_CAP_OVERRIDE)");
  if (seq.n > kMaskLimit)
    throw CapExceeded("exact solvers support at most 64 vertices");
  ArrivalSequence checked = seq;
  checked.validate();
  MaskGraph mg = MaskGraph::build(checked);

  int max_deg = 0;
  for (int v = 1; v <= mg.n; ++v)
    max_deg = std::max(max_deg, std::popcount(mg.nbr_in(v, mg.n)));

  OffSearch search{mg, variant, mg.n,
                   variant == Variant::TDS ? non_isolated(mg, mg.n) : arrived_mask(mg.n),
                   variant == Variant::TDS ? std::max(max_deg, 1) : max_deg + 1};
  SolveResult result;
  result.variant = variant;
  result.baseline = Baseline::Offline;
  for (int k = 0; k <= mg.n; ++k) {
    if (search.rec(1, k, 0, 0)) {
      result.size = k;
      result.witness_set = mask_to_set(mg.n, search.found);
      result.nodes_explored = search.nodes;
      return result;
    }
  }
  throw PreconditionError("no feasible " + to_string(variant) + " set exists");
}

SolveResult opt_inc(Variant variant, const ArrivalSequence& seq, const SolverCaps& caps) {
  if (seq.n > caps.inc)
    throw CapExceeded("opt_inc refused: n = " + std::to_string(seq.n) + " exceeds cap " +
                      std::to_string(caps.inc) +
                      " (raise --cap-inc or DOMINO_CAP_OVERRIDE)");
  if (seq.n > kMaskLimit)
    throw CapExceeded("exact solvers support at most 64 vertices");
  ArrivalSequence checked = seq;
  checked.validate();
  MaskGraph mg = MaskGraph::build(checked);

  IncSearch search(mg, variant);
  search.dfs(1, 0);
  if (search.best_size > mg.n)
    throw PreconditionError("no valid " + to_string(variant) + " chain exists");

  SolveResult result;
  result.variant = variant;
  result.baseline = Baseline::Incremental;
  result.size = search.best_size;
  result.witness_chain = SolutionChain(mg.n);
  for (int v = 1; v <= mg.n; ++v)
    result.witness_chain.add(v, search.best_added_at[static_cast<size_t>(v)]);
  result.witness_set = result.witness_chain.final_set();
  result.nodes_explored = search.nodes;
  return result;
}

}  // namespace domino
