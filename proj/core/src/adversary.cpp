#include "domino/adversary.hpp"

#include <algorithm>

#include "domino/errors.hpp"
#include "domino/graph.hpp"

namespace domino {
namespace {

AlgorithmRun finish(const OnlineRun& run, const Policy& policy, Variant variant) {
  AlgorithmRun out{policy.name, variant, run.chain(), std::nullopt};
  const ArrivalSequence& seq = run.sequence_so_far();
  bool always_connected = true;
  for (int i = 2; i <= seq.n; ++i)
    if (seq.arrivals[static_cast<size_t>(i - 1)].empty()) always_connected = false;
  if (always_connected && seq.n > 0) {
    LayerAssignment layers = compute_layers(seq);
    std::vector<int> per_layer(layers.layer_sizes.size(), 0);
    for (int v = 1; v <= seq.n; ++v)
      if (out.chain.selected(v)) ++per_layer[static_cast<size_t>(layers.layer[static_cast<size_t>(v)])];
    out.per_layer_selected = std::move(per_layer);
  }
  return out;
}

}  // namespace

AdversaryTranscript tree_adversary(int n, const Policy& policy, Variant variant) {
  if (n < 1) throw PreconditionError("tree adversary: n >= 1");
  OnlineRun run(policy, variant);
  std::vector<std::string> rationale;
  for (int i = 1; i <= n; ++i) {
    if (i == 1) {
      run.feed({});
      rationale.push_back("root");
      continue;
    }
    int unselected = 0;
    for (int v = 1; v < i; ++v) {
      if (!run.selected(v)) {
        unselected = v;
        break;
      }
    }
    if (unselected == 0) {
      run.feed({1});
      rationale.push_back("attach-arbitrary");
    } else {
      run.feed({unselected});
      rationale.push_back("attach-unselected:" + std::to_string(unselected));
    }
  }
  ArrivalSequence seq = run.sequence_so_far();
  seq.name = "tree-adv-n" + std::to_string(n) + "-vs-" + policy.name;
  AdversaryTranscript transcript{seq, finish(run, policy, variant), std::move(rationale)};
  return transcript;
}

AdversaryTranscript two_layer_adversary(int delta, const Policy& policy, Variant variant) {
  if (delta < 2) throw PreconditionError("two-layer adversary: delta >= 2");
  OnlineRun run(policy, variant);
  std::vector<std::string> rationale;

  run.feed({});
  rationale.push_back("root");
  std::vector<int> first_layer;
  for (int j = 0; j < delta; ++j) {
    run.feed({1});
    first_layer.push_back(run.steps());
    rationale.push_back("first-layer");
  }

  // Strictly nested second-layer neighborhoods, each keeping as many
  // currently unselected first-layer vertices as possible (ties to lower
  // index).
  std::vector<int> current = first_layer;
  for (int i = 1; i <= delta - 1; ++i) {
    int want = delta - i + 1;
    std::stable_sort(current.begin(), current.end(), [&](int a, int b) {
      bool sa = run.selected(a), sb = run.selected(b);
      return sa != sb ? !sa : a < b;
    });
    current.resize(static_cast<size_t>(want));
    std::sort(current.begin(), current.end());
    run.feed(current);
    rationale.push_back("second-layer");
  }

  ArrivalSequence seq = run.sequence_so_far();
  seq.name = "two-layer-adv-d" + std::to_string(delta) + "-vs-" + policy.name;
  AdversaryTranscript transcript{seq, finish(run, policy, variant), std::move(rationale)};
  return transcript;
}

}  // namespace domino
