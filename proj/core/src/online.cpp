#include "domino/online.hpp"

#include <algorithm>

#include "domino/errors.hpp"

namespace domino {

bool StepContext::selected(int v) const { return run.selected(v); }
int StepContext::layer(int v) const { return run.layer(v); }
std::span<const int> StepContext::arrived_neighbors(int v) const {
  return run.arrived_neighbors(v);
}

namespace {

bool dominated(const StepContext& ctx, int v) {
  if (ctx.selected(v)) return true;
  for (int w : ctx.arrived_neighbors(v))
    if (ctx.selected(w)) return true;
  return false;
}

// No selected neighbor; containment does not count for TDS.
bool totally_dominated(const StepContext& ctx, int v) {
  for (int w : ctx.arrived_neighbors(v))
    if (ctx.selected(w)) return true;
  return false;
}

}  // namespace

Policy make_parent_policy() {
  return Policy{
      "parent",
      [](const StepContext& ctx) -> std::vector<int> {
        if (ctx.step == 1) return {1};
        if (dominated(ctx, ctx.step)) return {};
        if (ctx.neighbors.empty()) return {ctx.step};  // no parent available
        return {ctx.neighbors.front()};                // lowest index
      },
  };
}

Policy make_first_parent_policy(Variant variant) {
  return Policy{
      "first-parent",
      [variant](const StepContext& ctx) -> std::vector<int> {
        const int i = ctx.step;
        if (variant == Variant::TDS) {
          if (ctx.neighbors.empty()) return {};  // isolated vertices stay out
          // v_i closing a component of size 2: select both endpoints.
          if (ctx.neighbors.size() == 1) {
            int j = ctx.neighbors.front();
            bool j_was_isolated = true;
            for (int w : ctx.arrived_neighbors(j)) {
              if (w != i) {
                j_was_isolated = false;
                break;
              }
            }
            if (j_was_isolated) {
              std::vector<int> add;
              if (!ctx.selected(j)) add.push_back(j);
              add.push_back(i);
              return add;
            }
          }
          if (totally_dominated(ctx, i)) return {};
        } else {
          if (i == 1) return {1};
          if (dominated(ctx, i)) return {};
          if (ctx.neighbors.empty()) return {i};
        }
        // Neighbor with the smallest layer number; ties to the lowest index.
        int best = ctx.neighbors.front();
        for (int w : ctx.neighbors)
          if (ctx.layer(w) < ctx.layer(best)) best = w;
        return {best};
      },
  };
}

Policy make_greedy_ids_policy() {
  return Policy{
      "greedy-ids",
      [](const StepContext& ctx) -> std::vector<int> {
        if (!dominated(ctx, ctx.step)) return {ctx.step};
        return {};
      },
  };
}

Policy make_even_layer_policy(int parity) {
  if (parity != 0 && parity != 1) throw ConfigError("even-layer parity must be 0 or 1");
  return Policy{
      "even-layer:" + std::to_string(parity),
      [parity](const StepContext& ctx) -> std::vector<int> {
        if (ctx.step > 1 && ctx.neighbors.empty())
          throw PreconditionError("even-layer policies need an always-connected input");
        if (ctx.step == 1) return {1};  // layer 0 matches parity 0; parity 1 selects v_1 anyway
        if (ctx.layer(ctx.step) % 2 == parity) return {ctx.step};
        return {};
      },
  };
}

Policy policy_by_name(const std::string& name, Variant variant) {
  if (name == "parent") return make_parent_policy();
  if (name == "first-parent") return make_first_parent_policy(variant);
  if (name == "greedy-ids") return make_greedy_ids_policy();
  if (name == "even-layer:0") return make_even_layer_policy(0);
  if (name == "even-layer:1") return make_even_layer_policy(1);
  throw ConfigError("unknown algorithm `" + name + "`");
}

std::vector<std::string> known_policy_names() {
  return {"parent", "first-parent", "greedy-ids", "even-layer:0", "even-layer:1"};
}

OnlineRun::OnlineRun(Policy policy, Variant variant)
    : policy_(std::move(policy)), variant_(variant) {
  adj_.emplace_back();         // index 0 unused
  chain_added_.push_back(0);
  layers_.push_back(0);
}

std::span<const int> OnlineRun::arrived_neighbors(int v) const {
  const auto& nbrs = adj_[static_cast<size_t>(v)];
  return {nbrs.data(), nbrs.size()};
}

std::vector<int> OnlineRun::feed(const std::vector<int>& neighbors) {
  const int i = steps() + 1;
  for (int j : neighbors) {
    if (j < 1 || j >= i)
      throw ValidationError("arrival " + std::to_string(i) + " lists neighbor " +
                            std::to_string(j) + ", which has not arrived before it");
  }
  seq_.arrivals.push_back(neighbors);
  std::sort(seq_.arrivals.back().begin(), seq_.arrivals.back().end());
  seq_.n = i;

  adj_.emplace_back(seq_.arrivals.back());
  for (int j : neighbors) adj_[static_cast<size_t>(j)].push_back(i);
  chain_added_.push_back(0);

  int lay = 0;
  if (!neighbors.empty()) {
    lay = layers_[static_cast<size_t>(neighbors.front())];
    for (int j : neighbors) lay = std::min(lay, layers_[static_cast<size_t>(j)]);
    ++lay;
  }
  layers_.push_back(lay);

  StepContext ctx{i, {seq_.arrivals.back().data(), seq_.arrivals.back().size()}, *this};
  std::vector<int> response = policy_.act(ctx);
  for (int v : response) {
    if (v < 1 || v > i)
      throw ContractViolation("policy `" + policy_.name + "` selected vertex " +
                              std::to_string(v) + " at step " + std::to_string(i) +
                              ", which has not arrived");
    if (chain_added_[static_cast<size_t>(v)] == 0) {
      chain_added_[static_cast<size_t>(v)] = i;
      ++selected_count_;
    }
  }
  check_feasible(i);
  return response;
}

void OnlineRun::check_feasible(int step) const {
  Graph g = Graph::from_sequence(seq_);
  VertexSet d(step);
  for (int v = 1; v <= step; ++v)
    if (selected(v)) d.insert(v);
  if (!is_feasible(variant_, g, step, d))
    throw FeasibilityViolation(step, "policy `" + policy_.name + "` left an infeasible " +
                                         to_string(variant_) + " selection at step " +
                                         std::to_string(step));
}

SolutionChain OnlineRun::chain() const {
  SolutionChain chain(steps());
  for (int v = 1; v <= steps(); ++v) chain.add(v, chain_added_[static_cast<size_t>(v)]);
  return chain;
}

AlgorithmRun run_online(const Policy& policy, Variant variant, const ArrivalSequence& seq) {
  ArrivalSequence checked = seq;
  checked.validate();

  OnlineRun run(policy, variant);
  for (const auto& nbrs : checked.arrivals) run.feed(nbrs);

  AlgorithmRun out{policy.name, variant, run.chain(), std::nullopt};

  bool always_connected = true;
  for (int i = 2; i <= checked.n; ++i)
    if (checked.arrivals[static_cast<size_t>(i - 1)].empty()) always_connected = false;
  if (always_connected && checked.n > 0) {
    LayerAssignment layers = compute_layers(checked);
    std::vector<int> per_layer(layers.layer_sizes.size(), 0);
    for (int v = 1; v <= checked.n; ++v)
      if (out.chain.selected(v)) ++per_layer[static_cast<size_t>(layers.layer[static_cast<size_t>(v)])];
    out.per_layer_selected = std::move(per_layer);
  }
  return out;
}

}  // namespace domino
