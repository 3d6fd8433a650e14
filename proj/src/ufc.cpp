#include <algorithm>
#include <map>
#include <numeric>

#include "poz/errors.hpp"
#include "poz/fusion.hpp"
#include "poz/io.hpp"
#include "poz/poly_ops.hpp"

namespace poz {

namespace {

constexpr std::uint32_t kPendingIndex = 1u << 29;

std::uint32_t block_weight(const Block& b) { return std::accumulate(b.begin(), b.end(), 0u); }

// Canonical block order: heavier first, then by composition, descending.
bool block_before(const Block& a, const Block& b) {
  const auto wa = block_weight(a), wb = block_weight(b);
  if (wa != wb) return wa > wb;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<Variable> canonical_names(const std::vector<Block>& blocks) {
  std::map<std::uint32_t, std::uint32_t> counter;
  std::vector<Variable> names;
  for (const auto& b : blocks) {
    const auto w = block_weight(b);
    names.push_back(Variable::particle(w, ++counter[w]));
  }
  return names;
}

// Can the multiset `weights` be grouped so that the group sums are `target`?
bool can_coarsen(std::vector<std::uint32_t> weights, std::vector<std::uint32_t> target) {
  if (std::accumulate(weights.begin(), weights.end(), 0u) !=
      std::accumulate(target.begin(), target.end(), 0u))
    return false;
  std::sort(weights.begin(), weights.end(), std::greater<>());
  std::sort(target.begin(), target.end(), std::greater<>());
  if (weights.size() < target.size()) return false;
  std::vector<std::uint32_t> room = target;
  // Place heaviest pieces first into bins with enough room.
  std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
    if (i == weights.size())
      return std::all_of(room.begin(), room.end(), [](auto r) { return r == 0; });
    for (std::size_t j = 0; j < room.size(); ++j) {
      if (room[j] < weights[i]) continue;
      bool seen = false;
      for (std::size_t k = 0; k < j; ++k)
        if (room[k] == room[j]) seen = true;
      if (seen) continue;
      room[j] -= weights[i];
      if (place(i + 1)) return true;
      room[j] += weights[i];
    }
    return false;
  };
  return place(0);
}

struct Transition {
  // groups[g] = positions (in the source state's block list) fused together.
  std::vector<std::vector<std::size_t>> groups;
};

// All ways to fuse blocks: one group (or, in multi mode, several disjoint
// groups) of at least two blocks each. Choices differing only by a
// permutation of identical blocks are emitted once.
std::vector<Transition> transitions(const std::vector<Block>& blocks, bool multi) {
  const std::size_t n = blocks.size();
  std::vector<Transition> out;
  std::vector<std::vector<std::vector<Block>>> seen;
  std::vector<std::size_t> label(n, 0);

  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t groups) {
    if (i == n) {
      if (groups == 0) return;
      std::vector<std::vector<std::size_t>> g(groups);
      for (std::size_t k = 0; k < n; ++k)
        if (label[k]) g[label[k] - 1].push_back(k);
      for (const auto& grp : g)
        if (grp.size() < 2) return;
      // Signature: multiset of group compositions.
      std::vector<std::vector<Block>> sig;
      for (const auto& grp : g) {
        std::vector<Block> members;
        for (auto k : grp) members.push_back(blocks[k]);
        std::sort(members.begin(), members.end());
        sig.push_back(std::move(members));
      }
      std::sort(sig.begin(), sig.end());
      if (std::find(seen.begin(), seen.end(), sig) != seen.end()) return;
      seen.push_back(sig);
      out.push_back({std::move(g)});
      return;
    }
    label[i] = 0;
    rec(i + 1, groups);
    for (std::size_t g = 1; g <= groups; ++g) {
      label[i] = g;
      rec(i + 1, groups);
    }
    if (multi || groups == 0) {
      label[i] = groups + 1;
      rec(i + 1, groups + 1);
    }
    label[i] = 0;
  };
  rec(0, 0);
  return out;
}

std::string describe_step(const std::vector<Variable>& names, const Transition& t,
                          const std::vector<Variable>& outputs) {
  std::string s;
  for (std::size_t g = 0; g < t.groups.size(); ++g) {
    if (g) s += " & ";
    s += "(";
    for (std::size_t k = 0; k < t.groups[g].size(); ++k) {
      if (k) s += ",";
      s += names[t.groups[g][k]].name();
    }
    s += ")->" + outputs[g].name();
  }
  return s;
}

struct StateLess {
  bool operator()(const std::vector<Block>& a, const std::vector<Block>& b) const {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  }
};

} // namespace

std::vector<std::uint32_t> block_weights(const std::vector<Block>& blocks) {
  std::vector<std::uint32_t> w;
  for (const auto& b : blocks) w.push_back(block_weight(b));
  std::sort(w.begin(), w.end(), std::greater<>());
  return w;
}

FusionAtlas explore_fusions(const Polynomial& p, const UfcOptions& options) {
  if (p.is_zero()) throw ZeroPolynomialError("explore_fusions");
  for (auto v : p.registry())
    if (!v.is_particle()) throw PreconditionError("explore_fusions: non-particle variable " + v.name());
  const auto originals = particles(p);

  std::vector<Block> initial;
  for (auto v : originals) initial.push_back({v.weight()});
  // Originals are already in canonical order (weight descending).
  const auto initial_names = canonical_names(initial);
  Renaming to_canonical;
  for (std::size_t i = 0; i < originals.size(); ++i) to_canonical.emplace(originals[i], initial_names[i]);

  auto relevant = [&](const std::vector<Block>& blocks) {
    return !options.final_config || can_coarsen(block_weights(blocks), *options.final_config);
  };

  FusionAtlas atlas;
  std::map<std::vector<Block>, AtlasState, StateLess> states;
  std::optional<bool> invariant;
  if (!relevant(initial)) {
    atlas.complete = true;
    return atlas;
  }
  {
    AtlasState s0{initial, initial_names, {}};
    s0.entries.push_back({normalize_primitive(rename(p, to_canonical)), {}});
    if (is_translation_invariant(p, p.registry())) invariant = true;
    states.emplace(initial, std::move(s0));
  }

  auto add_entry = [](AtlasState& state, AtlasEntry entry) {
    for (const auto& e : state.entries)
      if (proportional(e.poly, entry.poly)) return;
    state.entries.push_back(std::move(entry));
  };

  // States are visited in order of decreasing block count; fusing only ever
  // produces states with fewer blocks, which are visited later.
  for (auto it = states.begin(); it != states.end(); ++it) {
    AtlasState& state = it->second;

    // Close under swaps of identical blocks: the relabeled process reaches
    // the same configuration with the swapped polynomial.
    for (std::size_t e = 0; e < state.entries.size(); ++e) {
      for (std::size_t k = 0; k + 1 < state.blocks.size(); ++k) {
        if (state.blocks[k] != state.blocks[k + 1]) continue;
        Renaming swap{{state.names[k], state.names[k + 1]}, {state.names[k + 1], state.names[k]}};
        AtlasEntry image{normalize_primitive(rename(state.entries[e].poly, swap)),
                         state.entries[e].route};
        image.route.push_back("relabel " + state.names[k].name() + "<->" + state.names[k + 1].name());
        add_entry(state, std::move(image));
      }
    }

    if (state.blocks.size() < 2) continue;
    for (const auto& t : transitions(state.blocks, options.multi)) {
      // Target configuration.
      std::vector<std::pair<Block, Variable>> next;
      std::vector<bool> fused(state.blocks.size(), false);
      std::vector<FusionSpec> specs;
      std::vector<Variable> outputs;
      for (std::size_t g = 0; g < t.groups.size(); ++g) {
        Block merged;
        FusionSpec spec;
        for (auto k : t.groups[g]) {
          fused[k] = true;
          merged.insert(merged.end(), state.blocks[k].begin(), state.blocks[k].end());
          spec.inputs.push_back(state.names[k]);
        }
        std::sort(merged.begin(), merged.end(), std::greater<>());
        spec.output = Variable::particle(block_weight(merged), kPendingIndex + static_cast<std::uint32_t>(g));
        outputs.push_back(spec.output);
        specs.push_back(std::move(spec));
        next.emplace_back(std::move(merged), specs.back().output);
      }
      for (std::size_t k = 0; k < state.blocks.size(); ++k)
        if (!fused[k]) next.emplace_back(state.blocks[k], state.names[k]);
      std::stable_sort(next.begin(), next.end(),
                       [](const auto& a, const auto& b) { return block_before(a.first, b.first); });
      std::vector<Block> next_blocks;
      for (const auto& nb : next) next_blocks.push_back(nb.first);
      if (!relevant(next_blocks)) continue;

      const auto next_names = canonical_names(next_blocks);
      Renaming renaming;
      std::vector<Variable> final_outputs(outputs.size());
      for (std::size_t k = 0; k < next.size(); ++k) {
        renaming.emplace(next[k].second, next_names[k]);
        for (std::size_t g = 0; g < outputs.size(); ++g)
          if (outputs[g] == next[k].second) final_outputs[g] = next_names[k];
      }

      for (const auto& entry : state.entries) {
        if (atlas.fusions >= options.budget) {
          atlas.complete = false;
          goto done;
        }
        ++atlas.fusions;
        auto route = entry.route;
        route.push_back(describe_step(state.names, t, final_outputs));
        auto derived = multi_derive(entry.poly, specs, invariant);
        if (!derived) {
          atlas.inseparable_route = "";
          for (const auto& r : route) *atlas.inseparable_route += (atlas.inseparable_route->empty() ? "" : "; ") + r;
          goto done;
        }
        auto [pos, inserted] = states.try_emplace(next_blocks);
        if (inserted) {
          pos->second.blocks = next_blocks;
          pos->second.names = next_names;
        }
        add_entry(pos->second, {normalize_primitive(rename(derived->pder, renaming)), std::move(route)});
      }
    }
  }
done:
  for (auto& [key, state] : states) atlas.states.push_back(std::move(state));
  return atlas;
}

AnalysisReport check_sUFC(const Polynomial& p, const UfcOptions& options) {
  AnalysisReport report;
  report.subject = options.multi ? "sUFC (with simultaneous fusions)" : "sUFC";
  const bool symmetric = is_symmetric(p);
  report.add("symmetric", symmetric, {}, "precondition");
  if (!symmetric) return report;

  add_ufc_verdicts(report, explore_fusions(p, options), options);
  return report;
}

void add_ufc_verdicts(AnalysisReport& report, const FusionAtlas& atlas, const UfcOptions& options) {
  report.data["fusions"] = atlas.fusions;
  report.data["states"] = atlas.states.size();
  report.data["complete"] = atlas.complete;
  if (options.budget == 0 || !atlas.complete) report.data["budget_exhausted"] = true;

  if (atlas.inseparable_route) {
    report.add("separable", false, {{"route", *atlas.inseparable_route}});
    return;
  }
  report.add("separable", true);

  Json finals = Json::array();
  const AtlasState* bad = nullptr;
  for (const auto& state : atlas.states) {
    if (options.final_config) {
      auto want = *options.final_config;
      std::sort(want.begin(), want.end(), std::greater<>());
      if (block_weights(state.blocks) != want) continue;
    }
    if (state.entries.empty()) continue;
    Json names = Json::array();
    for (auto v : state.names) names.push_back(v.name());
    Json f;
    f["configuration"] = names;
    f["distinct_results"] = state.entries.size();
    f["derived"] = polynomial_json(state.entries.front().poly);
    finals.push_back(std::move(f));
    if (state.entries.size() > 1 && !bad) bad = &state;
  }
  report.data["final_configurations"] = std::move(finals);

  if (bad) {
    auto route_text = [](const std::vector<std::string>& r) {
      std::string s;
      for (const auto& x : r) s += (s.empty() ? "" : "; ") + x;
      return s.empty() ? std::string("(no fusion)") : s;
    };
    Json witness;
    witness["process_a"] = route_text(bad->entries[0].route);
    witness["result_a"] = polynomial_json(bad->entries[0].poly);
    witness["process_b"] = route_text(bad->entries[1].route);
    witness["result_b"] = polynomial_json(bad->entries[1].poly);
    report.add("unique_fusion", false, witness);
  } else {
    report.add("unique_fusion", true);
  }
}

} // namespace poz
