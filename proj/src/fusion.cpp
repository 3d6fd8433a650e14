#include "poz/fusion.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "poz/errors.hpp"
#include "poz/io.hpp"
#include "poz/poly_ops.hpp"

namespace poz {

namespace {

thread_local FusionObserver g_observer;

struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

// For P invariant under translating every variable, shifting by -Z gives
// P(Z + l(xi), rest) = P(l(xi), rest - Z): each term's xi-degree is its
// degree in the inputs, so the lowest part comes from one component.
std::optional<GradedPart> translated_lowest_part(const Polynomial& p, const FusionSpec& spec,
                                                 std::span<const Variable> offsets,
                                                 const Polynomial& last_image) {
  const VarSet inputs = make_varset(spec.inputs);
  Renaming to_offsets;
  for (std::size_t i = 0; i < offsets.size(); ++i) to_offsets.emplace(spec.inputs[i], offsets[i]);
  VarSet extra = make_varset(std::vector<Variable>(offsets.begin(), offsets.end()));
  extra = varset_union(extra, {spec.output});
  const Polynomial center = Polynomial::variable(spec.output);
  for (auto& [degree, component] : homogeneous_components(p, inputs)) {
    Polynomial q = rename(component, to_offsets);
    q = substitute(q, {{spec.inputs.back(), last_image}});
    for (auto v : p.registry()) {
      if (varset_contains(inputs, v)) continue;
      q = substitute(q, {{v, Polynomial::variable(v) - center}});
    }
    if (!q.is_zero()) return GradedPart{degree, q.with_registry(extra)};
  }
  return std::nullopt;
}

} // namespace

FusionObserver set_fusion_observer(FusionObserver observer) {
  std::swap(observer, g_observer);
  return observer;
}

std::string FusionSpec::describe() const {
  std::string out = "(";
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (i) out += ",";
    out += inputs[i].name();
  }
  return out + ")->" + output.name();
}

std::string FusionProcess::describe() const {
  std::string out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < steps[i].size(); ++j) {
      if (j) out += " & ";
      out += steps[i][j].describe();
    }
  }
  return out;
}

void validate_fusions(const Polynomial& p, std::span<const FusionSpec> specs) {
  if (specs.empty()) throw PreconditionError("fusion: no fusion given");
  std::vector<Variable> used, outputs;
  for (const auto& spec : specs) {
    if (spec.inputs.size() < 2)
      throw PreconditionError("fusion " + spec.describe() + ": needs at least two inputs");
    if (!spec.output.is_particle())
      throw PreconditionError("fusion " + spec.describe() + ": output must be a particle");
    std::uint32_t weight = 0;
    for (auto v : spec.inputs) {
      if (!v.is_particle())
        throw PreconditionError("fusion " + spec.describe() + ": inputs must be particles");
      if (!varset_contains(p.registry(), v))
        throw PreconditionError("fusion " + spec.describe() + ": " + v.name() + " not in registry");
      if (std::find(used.begin(), used.end(), v) != used.end())
        throw PreconditionError("fusion " + spec.describe() + ": " + v.name() + " fused twice");
      used.push_back(v);
      weight += v.weight();
    }
    if (weight != spec.output.weight())
      throw PreconditionError("fusion " + spec.describe() + ": output weight must be " +
                              std::to_string(weight));
    if (std::find(outputs.begin(), outputs.end(), spec.output) != outputs.end())
      throw PreconditionError("fusion " + spec.describe() + ": duplicate output variable");
    outputs.push_back(spec.output);
  }
  for (auto out : outputs)
    if (varset_contains(p.registry(), out) && std::find(used.begin(), used.end(), out) == used.end())
      throw PreconditionError("fusion: output " + out.name() + " collides with an untouched variable");
}

PrederivedResult prederive_multi(const Polynomial& p, std::span<const FusionSpec> specs,
                                 std::optional<bool> translation_invariant) {
  if (p.is_zero()) throw ZeroPolynomialError("prederive");
  validate_fusions(p, specs);

  std::uint32_t next_offset = 1;
  for (auto v : p.registry())
    if (v.kind() == VarKind::offset) next_offset = std::max(next_offset, v.index() + 1);

  Substitution map;
  std::vector<Variable> offsets;
  std::vector<Variable> all_inputs;
  for (const auto& spec : specs) {
    const Polynomial center = Polynomial::variable(spec.output);
    const auto a = spec.inputs.size();
    const Rational last_weight = spec.inputs.back().weight();
    Polynomial last = center;
    for (std::size_t i = 0; i + 1 < a; ++i) {
      const Variable xi = Variable::offset(next_offset++);
      offsets.push_back(xi);
      map.emplace(spec.inputs[i], center + Polynomial::variable(xi));
      last = last - Polynomial::variable(xi).scaled(Rational(spec.inputs[i].weight()) / last_weight);
    }
    map.emplace(spec.inputs.back(), last);
    all_inputs.insert(all_inputs.end(), spec.inputs.begin(), spec.inputs.end());
  }
  const VarSet graded = make_varset(offsets);
  const auto hint = min_total_degree(p, make_varset(all_inputs));

  std::optional<GradedPart> part;
  if (!translation_invariant) translation_invariant = is_translation_invariant(p, p.registry());
  if (specs.size() == 1 && *translation_invariant) {
    const Polynomial last_image = map.at(specs[0].inputs.back()) - Polynomial::variable(specs[0].output);
    part = translated_lowest_part(p, specs[0], offsets, last_image);
  } else {
    part = lowest_graded_part(p, map, graded, hint);
  }
  if (!part) throw Error("prederive: fusion substitution annihilated a nonzero polynomial");

  PrederivedResult out;
  out.s = part->grade;
  out.qs = std::move(part->component);
  out.offsets = offsets;
  out.specs.assign(specs.begin(), specs.end());
  if (g_observer) g_observer(p, specs, out.s);
  return out;
}

PrederivedResult prederive(const Polynomial& p, const FusionSpec& spec,
                           std::optional<bool> translation_invariant) {
  return prederive_multi(p, std::span<const FusionSpec>(&spec, 1), translation_invariant);
}

std::optional<DerivedResult> separate(const PrederivedResult& pre) {
  const VarSet xi = make_varset(pre.offsets);
  VarSet rest_registry;
  for (auto v : pre.qs.registry())
    if (!varset_contains(xi, v)) rest_registry.push_back(v);
  for (const auto& spec : pre.specs)
    rest_registry = varset_union(rest_registry, {spec.output});

  std::map<Monomial, PolynomialBuilder, GrlexDescending> columns;
  for (const auto& t : pre.qs.terms()) {
    auto [xi_part, rest] = t.monomial.split(xi);
    auto [it, inserted] = columns.try_emplace(std::move(xi_part), rest_registry);
    it->second.add(std::move(rest), t.coeff);
  }
  if (columns.empty()) return std::nullopt;

  std::vector<std::pair<Monomial, Polynomial>> parts;
  for (auto& [m, builder] : columns) parts.emplace_back(m, std::move(builder).build());

  // Rank-one test against the first column.
  const Polynomial& first = parts.front().second;
  PolynomialBuilder r(xi);
  for (const auto& [m, c] : parts) {
    auto ratio = proportional(c, first);
    if (!ratio) return std::nullopt;
    r.add(m, *ratio);
  }
  DerivedResult out;
  out.pder = normalize_primitive(first);
  const Rational content = first.leading().coeff / out.pder.leading().coeff;
  out.r = std::move(r).build().scaled(content);
  return out;
}

std::optional<DerivedResult> derive(const Polynomial& p, const FusionSpec& spec,
                                    std::optional<bool> translation_invariant) {
  return separate(prederive(p, spec, translation_invariant));
}

std::optional<DerivedResult> multi_derive(const Polynomial& p, std::span<const FusionSpec> specs,
                                          std::optional<bool> translation_invariant) {
  return separate(prederive_multi(p, specs, translation_invariant));
}

std::vector<StepTrace> run_process_traced(const Polynomial& p, const FusionProcess& process) {
  std::vector<StepTrace> trace;
  Polynomial current = p;
  for (std::size_t i = 0; i < process.steps.size(); ++i) {
    auto pre = prederive_multi(current, process.steps[i]);
    const auto s = pre.s;
    auto derived = separate(pre);
    if (!derived) {
      std::string what;
      for (const auto& spec : process.steps[i]) what += spec.describe() + " ";
      throw InseparableError(i, what + "has no derived polynomial");
    }
    current = derived->pder;
    trace.push_back({s, current});
  }
  return trace;
}

Polynomial run_process(const Polynomial& p, const FusionProcess& process) {
  if (process.steps.empty()) return normalize_primitive(p);
  return run_process_traced(p, process).back().pder;
}

AnalysisReport check_thm31(const Polynomial& p, const FusionSpec& spec) {
  AnalysisReport report;
  report.subject = "fusion-lowest-order " + spec.describe();
  const auto pre = prederive(p, spec);
  const auto S = min_total_degree(p, make_varset(spec.inputs));
  bool z_divides = true;
  for (const auto& t : pre.qs.terms())
    if (t.monomial.exponent(spec.output) == 0) z_divides = false;

  report.data["s"] = pre.s;
  report.data["S"] = S;
  report.data["output_divides_qs"] = z_divides;
  report.add("s_at_most_S", pre.s <= S, {{"s", pre.s}, {"S", S}}, "theorem-backed");
  report.add("equality_iff_output_not_dividing", (pre.s == S) == !z_divides,
             {{"equal", pre.s == S}, {"output_divides_qs", z_divides}}, "theorem-backed");

  const bool ti = is_translation_invariant(p);
  report.data["translation_invariant"] = ti;
  if (ti) {
    report.add("translation_invariant_equality", pre.s == S, {}, "theorem-backed");
    VarSet shifted{spec.output};
    for (auto v : particles(p))
      if (std::find(spec.inputs.begin(), spec.inputs.end(), v) == spec.inputs.end())
        shifted.push_back(v);
    report.add("qs_translation_invariant",
               is_translation_invariant(pre.qs, make_varset(std::move(shifted))), {},
               "theorem-backed");
  }
  return report;
}

} // namespace poz
