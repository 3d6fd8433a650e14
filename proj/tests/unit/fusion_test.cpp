#include <gtest/gtest.h>

#include "oracle.hpp"
#include "poz/errors.hpp"
#include "poz/fusion.hpp"
#include "poz/generators.hpp"
#include "poz/io.hpp"
#include "poz/pattern.hpp"
#include "poz/poly_ops.hpp"
#include "suites.hpp"

using namespace poz;

namespace {

Polynomial var(Variable v) { return Polynomial::variable(v); }

TEST(Fusion, CenterOfMassSubstitution) {
  // (z1 - z2)^2 z3 with z1 -> Z + xi, z2 -> Z - xi.
  const auto pre = prederive(parse("(z[1] - z[2])^2*z[3]"), {{z(1), z(2)}, z(2, 1)});
  EXPECT_EQ(pre.s, 2u);
  EXPECT_EQ(pre.qs, parse("4*xi[1]^2*z[3]"));
  const auto d = separate(pre);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->pder, var(z(3)));
  EXPECT_EQ(d->r, parse("4*xi[1]^2"));
}

TEST(Fusion, WeightedOffsets) {
  // z[2,1] -> Z + xi, z[1] -> Z - 2 xi.
  const auto pre = prederive(parse("z[2,1] - z[1]"), {{z(2, 1), z(1)}, z(3, 1)});
  EXPECT_EQ(pre.s, 1u);
  EXPECT_EQ(pre.qs, parse("3*xi[1]"));
}

TEST(Fusion, CubicCounterexampleThreeFusion) {
  const auto pre = prederive(cubic_counterexample(), {{z(1), z(2), z(3)}, z(3, 1)});
  EXPECT_EQ(pre.s, 3u);
  const auto d = separate(pre);
  ASSERT_TRUE(d);
  EXPECT_TRUE(d->pder.is_constant());
}

TEST(Fusion, InseparablePrederived) {
  // Two offsets whose lowest part mixes with the spectator.
  const Polynomial p = parse("(z[1] - z[2])*z[4] + (z[1] - z[3])*z[5]");
  const auto pre = prederive(p, {{z(1), z(2), z(3)}, z(3, 1)});
  EXPECT_EQ(pre.s, 1u);
  EXPECT_FALSE(separate(pre));
  EXPECT_THROW(run_process(p, FusionProcess{{{FusionSpec{{z(1), z(2), z(3)}, z(3, 1)}}}}), InseparableError);
}

TEST(Fusion, Validation) {
  const Polynomial p = parse("z[1]*z[2]*z[3]");
  EXPECT_THROW(prederive(p, {{z(1)}, z(1, 9)}), PreconditionError);
  EXPECT_THROW(prederive(p, {{z(1), z(2)}, z(3, 1)}), PreconditionError);
  EXPECT_THROW(prederive(p, {{z(1), z(2)}, z(3)}), PreconditionError);
  EXPECT_THROW(prederive(p, {{z(1), z(7)}, z(2, 1)}), PreconditionError);
  const FusionSpec twice[] = {{{z(1), z(2)}, z(2, 1)}, {{z(2), z(3)}, z(2, 2)}};
  EXPECT_THROW(prederive_multi(p, twice), PreconditionError);
  EXPECT_THROW(prederive(Polynomial(), {{z(1), z(2)}, z(2, 1)}), ZeroPolynomialError);
}

TEST(Fusion, MixedWeightsWithSpectator) {
  const Polynomial p = parse("(z[2,1] - z[1])^2*(z[2,1] - z[2])");
  const auto a = derive(p, {{z(2, 1), z(1)}, z(3, 1)});
  ASSERT_TRUE(a);
  EXPECT_TRUE(proportional(a->pder, parse("z[3,1] - z[2]")));
  const auto b = derive(p, {{z(1), z(2)}, z(2, 2)}, false);
  const auto c = derive(p, {{z(1), z(2)}, z(2, 2)}, true);
  ASSERT_TRUE(b && c);
  EXPECT_EQ(b->pder, c->pder);
  EXPECT_EQ(b->r, c->r);
}

TEST(Fusion, InvariantShortcutMatchesGeneralExpansion) {
  suites::Gen g(41);
  for (int i = 0; i < 200; ++i) {
    const auto n = g.between(3, 4);
    std::vector<Variable> vars;
    for (std::uint32_t k = 1; k <= n; ++k) vars.push_back(z(g.between(1, 2), k));
    const Polynomial p = g.difference_product(vars, 4) + g.difference_product(vars, 3);
    if (p.is_zero()) continue;
    ASSERT_TRUE(is_translation_invariant(p, p.registry()));
    std::vector<Variable> inputs = vars;
    std::shuffle(inputs.begin(), inputs.end(), g.engine());
    inputs.resize(g.between(2, n));
    std::uint32_t w = 0;
    for (auto v : inputs) w += v.weight();
    const FusionSpec spec{inputs, z(w, 60)};
    const auto fast = prederive(p, spec, true), general = prederive(p, spec, false);
    ASSERT_EQ(fast.s, general.s) << to_string(p);
    ASSERT_EQ(fast.qs, general.qs) << to_string(p) << " fusing " << spec.describe();
    ASSERT_EQ(fast.qs.registry(), general.qs.registry());
  }
}

TEST(Fusion, AgreesWithOracle) {
  suites::Gen g(43);
  for (int i = 0; i < 200; ++i) {
    std::vector<Variable> vars;
    const auto n = g.between(2, 4);
    for (std::uint32_t k = 1; k <= n; ++k) vars.push_back(z(g.between(1, 3), k));
    Polynomial p = g.polynomial(vars, 4, 3);
    if (g.below(2)) p *= g.difference_product(vars, 3);
    std::vector<Variable> inputs = vars;
    std::shuffle(inputs.begin(), inputs.end(), g.engine());
    inputs.resize(g.between(2, n));
    std::uint32_t w = 0;
    for (auto v : inputs) w += v.weight();
    const FusionSpec spec{inputs, z(w, 61)};
    const auto pre = prederive(p, spec);
    const auto exact = oracle::lowest_offset_degree(p, std::span(&spec, 1));
    ASSERT_EQ(exact.method, oracle::Method::exact);
    ASSERT_TRUE(exact.s);
    ASSERT_EQ(pre.s, *exact.s) << to_string(p) << " fusing " << spec.describe();
    const auto line = oracle::lowest_offset_degree(p, std::span(&spec, 1), 0, i + 1);
    ASSERT_EQ(line.method, oracle::Method::random_line);
    ASSERT_EQ(line.s, exact.s);
  }
}

TEST(Fusion, OracleMethodsAgreeWithLateSpectators) {
  const FusionSpec spec{{z(1), z(2)}, z(2, 1)};
  for (std::uint32_t N : {3u, 4u, 5u}) {
    const Polynomial p = laughlin(N, 2);
    const auto exact = oracle::lowest_offset_degree(p, std::span(&spec, 1));
    const auto line = oracle::lowest_offset_degree(p, std::span(&spec, 1), 0);
    ASSERT_EQ(line.method, oracle::Method::random_line);
    EXPECT_EQ(exact.s, std::optional<std::uint32_t>(2)) << N;
    EXPECT_EQ(line.s, exact.s) << N;
  }
}

TEST(Fusion, SimultaneousPairs) {
  const FusionSpec specs[] = {{{z(1), z(2)}, z(2, 1)}, {{z(3), z(4)}, z(2, 2)}};
  const auto d = multi_derive(laughlin(4, 1), specs);
  ASSERT_TRUE(d);
  EXPECT_TRUE(proportional(d->pder, pow(var(z(2, 1)) - var(z(2, 2)), 4)));
  EXPECT_EQ(prederive_multi(laughlin(4, 1), specs).s, 2u);
}

TEST(Fusion, ProcessesAndObserver) {
  std::vector<std::uint32_t> seen;
  auto previous = set_fusion_observer(
      [&](const Polynomial&, std::span<const FusionSpec>, std::uint32_t s) { seen.push_back(s); });
  const FusionProcess proc{{{FusionSpec{{z(1), z(2)}, z(2, 1)}}, {FusionSpec{{z(2, 1), z(3)}, z(3, 1)}}}};
  const auto trace = run_process_traced(laughlin(3, 2), proc);
  set_fusion_observer(std::move(previous));
  ASSERT_EQ(trace.size(), 2u);
  EXPECT_EQ(trace[0].s, 2u);
  EXPECT_EQ(trace[1].s, 4u);
  EXPECT_TRUE(trace[1].pder.is_constant());
  EXPECT_EQ(seen, (std::vector<std::uint32_t>{2, 4}));
  EXPECT_EQ(proc.describe(), "(z[1],z[2])->z[2,1]; (z[2,1],z[3])->z[3,1]");
}

TEST(Fusion, LowestOrderReport) {
  const auto r = check_thm31(laughlin(3, 2), {{z(1), z(2)}, z(2, 1)});
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.data["s"], 2);
  EXPECT_EQ(r.data["S"], 2);
}

TEST(Ufc, LaughlinAndCounterexamples) {
  const auto l = check_sUFC(laughlin(4, 2));
  EXPECT_TRUE(l.pass);
  EXPECT_TRUE(l.data["complete"].get<bool>());
  EXPECT_TRUE(check_sUFC(ulc_counterexample()).pass);
  EXPECT_FALSE(check_sUFC(parse("z[1]^2*z[2]")).pass);
  EXPECT_FALSE(check_sUFC(laughlin(3, 1)).verdict("symmetric"));
}

TEST(Ufc, BudgetTruncates) {
  UfcOptions options;
  options.budget = 2;
  const auto r = check_sUFC(laughlin(4, 2), options);
  EXPECT_FALSE(r.data["complete"].get<bool>());
  EXPECT_TRUE(r.data["budget_exhausted"].get<bool>());
}

TEST(Ufc, FinalConfigurationFilter) {
  UfcOptions options;
  options.final_config = std::vector<std::uint32_t>{2, 2};
  const auto r = check_sUFC(laughlin(4, 2), options);
  EXPECT_TRUE(r.pass);
  options.multi = true;
  EXPECT_TRUE(check_sUFC(laughlin(4, 2), options).pass);
}

} // namespace
