#include <algorithm>
#include <map>

#include "poz/errors.hpp"
#include "poz/pattern.hpp"
#include "poz/poly_ops.hpp"

namespace poz {

namespace {

struct OrderRecord {
  std::uint32_t order;
  std::string configuration;
  std::string route;
  std::string pair;
};

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : "; ") + p;
  return s.empty() ? std::string("(no fusion)") : s;
}

} // namespace

AnalysisReport check_ULC(const Polynomial& p, std::size_t budget) {
  AnalysisReport report;
  report.subject = "ULC";
  if (p.is_zero()) throw ZeroPolynomialError("check_ULC");
  bool unit = true;
  for (auto v : p.registry())
    if (!v.is_particle() || v.weight() != 1) unit = false;
  const bool symmetric = is_symmetric(p);
  const bool ti = is_translation_invariant(p);
  report.add("unit_weights", unit, {}, "precondition");
  report.add("symmetric", symmetric, {}, "precondition");
  report.add("translation_invariant", ti, {}, "precondition");
  if (!unit || !symmetric) return report;

  UfcOptions options;
  options.budget = budget;
  const auto atlas = explore_fusions(p, options);
  report.data["fusions"] = atlas.fusions;
  report.data["complete"] = atlas.complete;
  if (!atlas.complete) report.data["budget_exhausted"] = true;
  if (atlas.inseparable_route) {
    report.add("separable", false, {{"route", *atlas.inseparable_route}}, "precondition");
    return report;
  }
  add_ulc_verdict(report, atlas);
  return report;
}

void add_ulc_verdict(AnalysisReport& report, const FusionAtlas& atlas) {

  std::map<std::pair<std::uint32_t, std::uint32_t>, OrderRecord> first;
  std::optional<std::pair<OrderRecord, OrderRecord>> conflict;
  std::optional<std::pair<std::uint32_t, std::uint32_t>> conflict_key;
  std::size_t measured = 0;

  for (const auto& state : atlas.states) {
    if (state.blocks.size() < 2) continue;
    std::string config;
    for (auto v : state.names) config += (config.empty() ? "" : ",") + v.name();
    for (const auto& entry : state.entries) {
      for (std::size_t i = 0; i < state.blocks.size(); ++i) {
        for (std::size_t j = i + 1; j < state.blocks.size(); ++j) {
          const Variable a = state.names[i], b = state.names[j];
          const std::uint32_t order = linear_form_order(entry.poly, a, b);
          ++measured;
          const std::pair<std::uint32_t, std::uint32_t> key = std::minmax({a.weight(), b.weight()});
          OrderRecord rec{order, config, join(entry.route), "(" + a.name() + "," + b.name() + ")"};
          auto [it, inserted] = first.try_emplace(key, rec);
          if (!inserted && it->second.order != order && !conflict) {
            conflict.emplace(it->second, rec);
            conflict_key = it->first;
          }
        }
      }
    }
  }

  Json table = Json::array();
  for (const auto& [key, rec] : first)
    table.push_back({{"a", key.first}, {"b", key.second}, {"D", rec.order}});
  report.data["D"] = table;
  report.data["orders_measured"] = measured;

  if (conflict) {
    auto side = [](const OrderRecord& r) {
      return Json{{"order", r.order}, {"pair", r.pair}, {"configuration", r.configuration}, {"process", r.route}};
    };
    report.add("consistent_orders", false,
               {{"a", conflict_key->first}, {"b", conflict_key->second},
                {"first", side(conflict->first)}, {"second", side(conflict->second)}});
  } else {
    report.add("consistent_orders", true);
  }
}

} // namespace poz
