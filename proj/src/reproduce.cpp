#include "poz/reproduce.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "poz/errors.hpp"
#include "poz/fusion.hpp"
#include "poz/generators.hpp"
#include "poz/io.hpp"
#include "poz/momentum.hpp"
#include "poz/pattern.hpp"
#include "poz/poly_ops.hpp"

namespace poz {

namespace {

Json as_json(const Rational& r) { return rational_json(r); }
Json as_json(const Polynomial& p) { return polynomial_json(p); }
template <class T>
Json as_json(const T& v) {
  return Json(v);
}

template <class T>
void expect(AnalysisReport& r, const std::string& name, const T& got, const T& want) {
  r.add(name, got == want, {{"computed", as_json(got)}, {"expected", as_json(want)}});
}

void expect_proportional(AnalysisReport& r, const std::string& name, const Polynomial& got,
                         const Polynomial& want) {
  r.add(name, proportional(got, want).has_value(),
        {{"computed", polynomial_json(normalize_primitive(got))}, {"expected", polynomial_json(normalize_primitive(want))}});
}

Polynomial var(Variable v) { return Polynomial::variable(v); }

Polynomial derive_or_throw(const Polynomial& p, std::vector<Variable> inputs, Variable output) {
  auto d = derive(p, FusionSpec{std::move(inputs), output});
  if (!d) throw Error("reproduce: unexpected inseparable fusion");
  return d->pder;
}

Json structure_json(const StructureReport& s) {
  return Json{{"symmetric", s.symmetric}, {"translation_invariant", s.translation_invariant},
              {"homogeneous", s.homogeneous}};
}

void expect_structure(AnalysisReport& r, const Polynomial& p, StructureReport want) {
  const auto got = structure_report(p);
  r.add("structure", got == want, {{"computed", structure_json(got)}, {"expected", structure_json(want)}});
}

constexpr const char* kCubicSource =
    "(z[1] - (z[1] + z[2] + z[3])/3) * (z[2] - (z[1] + z[2] + z[3])/3) * (z[3] - (z[1] + z[2] + z[3])/3)";

AnalysisReport cubic_case() {
  AnalysisReport r;
  r.subject = "cubic-counterexample";
  const Polynomial P = cubic_counterexample();
  expect(r, "parse_source_text", parse(kCubicSource), P);
  const auto& lead = P.leading();
  expect(r, "leading_monomial_is_x3", lead.monomial == Monomial::of(z(1), 3), true);
  expect(r, "leading_coefficient", lead.coeff, ratio(2, 27));
  expect(r, "coefficient_x2y", P.coefficient(Monomial{{z(1), 2}, {z(2), 1}}), ratio(-1, 9));
  expect_structure(r, P, {true, true, true});
  const auto comps = homogeneous_components(P, make_varset({z(1), z(2), z(3)}));
  expect(r, "single_component_degree", comps.size() == 1 ? comps[0].first : 0u, 3u);
  expect(r, "S_1", min_total_degree(P, {z(1)}), 0u);
  expect(r, "S_2", min_total_degree(P, make_varset({z(1), z(2)})), 0u);
  expect(r, "S_3", min_total_degree(P, make_varset({z(1), z(2), z(3)})), 3u);
  expect(r, "pattern", pattern_from_polynomial(P, 3), std::vector<std::int64_t>{0, 0, 3});
  expect(r, "three_fusion_s", prederive(P, {{z(1), z(2), z(3)}, z(3, 1)}).s, 3u);
  expect(r, "two_J", max_degree(P, z(1)), 3u);

  const PatternOfZeros pat{3, 2, {0, 0, 3}};
  const auto cond = check_conditions(pat, 3, std::vector<std::int64_t>{0, 0, 3});
  expect(r, "condition_f_verdict", cond.verdict("f_even_S_3a_minus_S_a"), false);
  expect(r, "condition_f_tag", cond.find("f_even_S_3a_minus_S_a")->tag, std::string("conjectural"));

  const auto mom = momentum_report(P);
  expect(r, "J_tot", mom.J_N, ratio(3, 2));
  expect(r, "AMS", mom.AMS, false);
  r.data["polynomial"] = polynomial_json(P);
  r.data["conditions"] = to_json(cond);
  return r;
}

AnalysisReport ulc_case() {
  AnalysisReport r;
  r.subject = "ulc-counterexample";
  const Polynomial P = ulc_counterexample();
  expect_structure(r, P, {true, true, true});
  expect(r, "total_degree", min_total_degree(P, P.registry()), 10u);

  const auto ufc = check_sUFC(P);
  expect(r, "sUFC", ufc.pass, true);
  expect(r, "sUFC_exhaustive", ufc.data.value("complete", false), true);

  const Variable Z2 = z(2, 1), Z3 = z(3, 1);
  const Polynomial der2 = derive_or_throw(P, {z(1), z(2)}, Z2);
  const Polynomial model2 = pow(var(Z2) - var(z(3)), 4) * pow(var(Z2) - var(z(4)), 4) * pow(var(z(3)) - var(z(4)), 2);
  expect_proportional(r, "two_fusion_derived", der2, model2);
  expect(r, "order_z3_z4_after_fusion", linear_form_order(der2, z(3), z(4)), 2u);
  expect(r, "order_z1_z2_top_level", linear_form_order(P, z(1), z(2)), 0u);

  const Polynomial model3 = pow(var(Z3) - var(z(4)), 6);
  const Polynomial routeA = run_process(P, FusionProcess{{{FusionSpec{{z(1), z(2)}, Z2}}, {FusionSpec{{Z2, z(3)}, Z3}}}});
  const Polynomial routeB = derive_or_throw(P, {z(1), z(2), z(3)}, Z3);
  expect_proportional(r, "route_pair_then_triple", routeA, model3);
  expect_proportional(r, "route_direct_triple", routeB, model3);
  expect(r, "routes_proportional", proportional(routeA, routeB).has_value(), true);

  const auto ulc = check_ULC(P);
  expect(r, "ULC", ulc.pass, false);
  std::vector<std::uint32_t> orders;
  if (const Check* c = ulc.find("consistent_orders"); c && !c->pass)
    orders = {c->detail["first"]["order"].get<std::uint32_t>(), c->detail["second"]["order"].get<std::uint32_t>()};
  std::sort(orders.begin(), orders.end());
  expect(r, "ULC_witness_orders", orders, std::vector<std::uint32_t>{0, 2});
  r.data["ULC"] = to_json(ulc);
  return r;
}

AnalysisReport nonhomog_case() {
  AnalysisReport r;
  r.subject = "nonhomog-counterexample";
  const Polynomial P = nonhomog_counterexample();
  expect_structure(r, P, {false, true, false});
  const Variable Z2 = z(2, 1);
  expect_proportional(r, "derived_is_y_cubed", derive_or_throw(P, {z(1), z(2)}, Z2),
                      pow(var(z(3)) - var(Z2), 3));
  const auto D = d_from_polynomial(P, 2, 1);
  const auto S3 = min_total_degree(P, make_varset({z(1), z(2), z(3)}));
  const auto S2 = min_total_degree(P, make_varset({z(1), z(2)}));
  expect(r, "D_measured", D, 3u);
  expect(r, "S_3", S3, 2u);
  expect(r, "S_2", S2, 0u);
  expect(r, "strict_inequality", D > S3 - S2, true);

  const Polynomial Q = symm_product(P);
  expect(r, "symm_symmetric", is_symmetric(Q), true);
  expect(r, "symm_translation_invariant", is_translation_invariant(Q), true);
  std::uint32_t sum_S3 = 0, sum_S2 = 0, sum_D = 0;
  std::vector<Variable> vs{z(1), z(2), z(3)}, image = vs;
  do {
    Renaming ren;
    for (std::size_t i = 0; i < 3; ++i) ren.emplace(vs[i], image[i]);
    const Polynomial Ps = rename(P, ren);
    sum_S3 += min_total_degree(Ps, make_varset(vs));
    sum_S2 += min_total_degree(Ps, make_varset({z(1), z(2)}));
    sum_D += d_from_polynomial(Ps, 2, 1);
  } while (std::next_permutation(image.begin(), image.end()));
  const auto QS3 = min_total_degree(Q, make_varset(vs));
  const auto QS2 = min_total_degree(Q, make_varset({z(1), z(2)}));
  const auto QD = d_from_polynomial(Q, 2, 1);
  expect(r, "symm_S_3_is_sum", QS3, sum_S3);
  expect(r, "symm_S_2_is_sum", QS2, sum_S2);
  expect(r, "symm_D_21_is_sum", QD, sum_D);
  expect(r, "symm_strict_inequality", QD > QS3 - QS2, true);
  r.data["symm"] = {{"S_2", QS2}, {"S_3", QS3}, {"D_21", QD}, {"terms", Q.size()}};
  return r;
}

AnalysisReport three_variable_case() {
  AnalysisReport r;
  r.subject = "three-variable";
  bool ufc = true, ulc = true, thm = true, two = true;
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const Polynomial Q = random_ti_symmetric(3, 5, seed);
    ufc = ufc && check_sUFC(Q).pass;
    ulc = ulc && check_ULC(Q).pass;
    thm = thm && check_thm31(Q, {{z(1), z(2)}, z(2, 1)}).pass && check_thm31(Q, {{z(1), z(2), z(3)}, z(3, 1)}).pass;
    std::mt19937_64 rng(seed);
    const Polynomial A = random_polynomial({z(1), z(2), z(3)}, 5, 4, rng);
    two = two && derive(A, {{z(1), z(3)}, z(2, 1)}).has_value();
  }
  expect(r, "random_symmetric_TI_sUFC", ufc, true);
  expect(r, "random_symmetric_TI_ULC", ulc, true);
  expect(r, "random_TI_s_equals_S", thm, true);
  expect(r, "two_fusion_separates", two, true);
  expect(r, "symm_product_sUFC", check_sUFC(symm_product(nonhomog_counterexample())).pass, true);
  return r;
}

AnalysisReport laughlin_case() {
  AnalysisReport r;
  r.subject = "laughlin";
  const Polynomial P = laughlin(4, 2);
  expect(r, "top_degree_z1", max_degree(P, z(1)), 6u);
  expect(r, "pattern", pattern_from_polynomial(P, 4), std::vector<std::int64_t>{0, 2, 6, 12});
  const PatternOfZeros pat{1, 2, {0}};
  expect(r, "extension_S_4", extend_pattern(pat, 1, 3), std::int64_t{12});
  expect(r, "conditions_to_8", check_conditions(pat, 8).pass, true);

  MomentumContext ctx(P, 20000);
  const auto& m = ctx.momentum();
  expect(r, "two_J", m.twoJ, 6u);
  expect(r, "J_4", m.J_N, Rational(0));
  expect(r, "J_2", m.J_a[1], Rational(4));
  expect(r, "D_22", ctx.fusions().d(2, 2), 8u);
  expect(r, "D_11", ctx.fusions().d(1, 1), 2u);
  expect(r, "D_21", ctx.fusions().d(2, 1), 4u);
  expect(r, "sUFC", ctx.preconditions().verdict("sUFC"), true);
  expect(r, "ULC", ctx.preconditions().verdict("ULC"), true);
  expect(r, "thm61", check_thm61(ctx).pass, true);
  const auto ams = check_AMS(ctx);
  expect(r, "AMS", ams.pass, true);
  expect(r, "AMS_2S_N_mod_N", ams.verdict("ams_implies_2S_N_divisible_by_N"), true);
  expect(r, "one_AMS", check_nAMS(ctx, 1).pass, true);
  expect(r, "thm62", check_thm62(ctx).pass, true);
  const auto ncf = check_nCF_member(ctx, 1, 2);
  expect(r, "cluster_form", ncf.pass, true);
  expect(r, "D_nn_equals_mn", ncf.verdict("D_n_n_equals_mn"), true);
  expect(r, "two_J_formula", ncf.verdict("two_J_formula"), true);

  const FusionSpec pair_specs[] = {{{z(1), z(2)}, z(2, 1)}, {{z(3), z(4)}, z(2, 2)}};
  const auto multi = multi_derive(P, pair_specs);
  expect(r, "simultaneous_pairs_separate", multi.has_value(), true);
  if (multi)
    expect_proportional(r, "simultaneous_pairs", multi->pder, pow(var(z(2, 1)) - var(z(2, 2)), 8));
  r.data["momentum"] = to_json(m);
  return r;
}

AnalysisReport parser_case() {
  AnalysisReport r;
  r.subject = "parser";
  const Polynomial x = var(z(1)), y = var(z(2));
  expect(r, "binomial", parse("(z[1]-z[2])^2"), x * x - (x * y).scaled(2) + y * y);
  auto error_of = [](const char* text) -> std::string {
    try {
      parse(text);
    } catch (const ParseError& e) {
      return e.what();
    }
    return "no error";
  };
  expect(r, "negative_exponent", error_of("z[1]^-1"), std::string("1:6: negative exponent"));
  expect(r, "implicit_multiplication", error_of("2 z[1]"), std::string("1:3: implicit multiplication is not allowed"));
  expect(r, "zero_denominator", error_of("z[1]/0"), std::string("1:6: zero denominator"));
  for (const auto& [name, p] : std::vector<std::pair<std::string, Polynomial>>{
           {"round_trip_cubic", cubic_counterexample()},
           {"round_trip_ulc", ulc_counterexample()},
           {"round_trip_fused", derive_or_throw(ulc_counterexample(), {z(1), z(2)}, z(2, 1))}})
    expect(r, name, parse(to_string(p)), p);
  return r;
}

const std::map<std::string, std::function<AnalysisReport()>>& registry() {
  static const std::map<std::string, std::function<AnalysisReport()>> cases{
      {"cubic-counterexample", cubic_case},   {"ulc-counterexample", ulc_case},
      {"nonhomog-counterexample", nonhomog_case}, {"three-variable", three_variable_case},
      {"laughlin", laughlin_case},            {"parser", parser_case}};
  return cases;
}

} // namespace

const std::vector<std::string>& reproduce_cases() {
  static const std::vector<std::string> names{"cubic-counterexample", "ulc-counterexample",
                                              "nonhomog-counterexample", "three-variable",
                                              "laughlin", "parser"};
  return names;
}

AnalysisReport reproduce_case(const std::string& name) {
  const auto& cases = registry();
  auto it = cases.find(name);
  if (it == cases.end()) throw PreconditionError("unknown reproduce case '" + name + "'");
  return it->second();
}

} // namespace poz
