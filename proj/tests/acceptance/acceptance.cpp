// One line per acceptance criterion; exit status is nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "poz/fusion.hpp"
#include "poz/generators.hpp"
#include "poz/io.hpp"
#include "poz/momentum.hpp"
#include "poz/pattern.hpp"
#include "poz/poly_ops.hpp"
#include "suites.hpp"

using namespace poz;

namespace {

Polynomial var(Variable v) { return Polynomial::variable(v); }

struct Criterion {
  bool pass = true;
  std::vector<std::string> failures;
  std::string summary;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
};

// Every fusion executed while a criterion runs, for the oracle comparison.
struct Recorded {
  Polynomial p;
  std::vector<FusionSpec> specs;
  std::uint32_t s;
};
std::vector<Recorded> g_fusions;
std::map<std::string, std::size_t> g_seen;

void record(const Polynomial& p, std::span<const FusionSpec> specs, std::uint32_t s) {
  std::string key = digest(to_string(p)) + "|" + std::to_string(p.size());
  for (const auto& spec : specs) key += spec.describe();
  if (g_seen.emplace(key, g_fusions.size()).second)
    g_fusions.push_back({p, {specs.begin(), specs.end()}, s});
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

bool report_line(const char* id, const char* title, Criterion c, double elapsed, double limit) {
  if (limit > 0 && elapsed >= limit) {
    c.pass = false;
    c.failures.push_back("runtime " + std::to_string(elapsed) + " s exceeds " + std::to_string(limit) + " s");
  }
  std::printf("%s %s  %s  (%.2f s%s)%s%s\n", id, c.pass ? "PASS" : "FAIL", title, elapsed,
              limit > 0 ? (", limit " + std::to_string(static_cast<int>(limit)) + " s").c_str() : "",
              c.summary.empty() ? "" : "  ", c.summary.c_str());
  for (const auto& f : c.failures) std::printf("    - %s\n", f.c_str());
  std::fflush(stdout);
  return c.pass;
}

Criterion cubic_counterexample_case() {
  Criterion c;
  const Polynomial P = cubic_counterexample();
  const auto S = pattern_from_polynomial(P, 3);
  c.expect(S == std::vector<std::int64_t>{0, 0, 3}, "S_1, S_2, S_3 = 0, 0, 3");
  const auto cond = check_conditions({3, 2, S}, 3, S);
  c.expect(!cond.verdict("f_even_S_3a_minus_S_a"), "condition (f) fails");
  const auto mom = momentum_report(P);
  c.expect(mom.J_N == ratio(3, 2), "J_tot = 3/2, got " + to_string(mom.J_N));
  c.expect(!check_AMS(P), "AMS fails");
  c.summary = "S=(0,0,3) J_tot=" + to_string(mom.J_N);
  return c;
}

Criterion ulc_counterexample_case() {
  Criterion c;
  const Polynomial P = ulc_counterexample();
  const auto ufc = check_sUFC(P);
  c.expect(ufc.pass, "sUFC passes");
  c.expect(ufc.data.value("complete", false), "process enumeration is exhaustive");
  const Variable Z2 = z(2, 1), Z3 = z(3, 1);
  const auto der = derive(P, {{z(1), z(2)}, Z2});
  c.expect(der && proportional(der->pder, pow(var(Z2) - var(z(3)), 4) * pow(var(Z2) - var(z(4)), 4) *
                                               pow(var(z(3)) - var(z(4)), 2)),
           "P_der(z^(2), z3, z4) has the expected form");
  const Polynomial target = pow(var(Z3) - var(z(4)), 6);
  const Polynomial sequential =
      run_process(P, FusionProcess{{{FusionSpec{{z(1), z(2)}, Z2}}, {FusionSpec{{Z2, z(3)}, Z3}}}});
  const auto direct = derive(P, {{z(1), z(2), z(3)}, Z3});
  c.expect(proportional(sequential, target).has_value(), "pair-then-triple route gives (z^(3) - z4)^6");
  c.expect(direct && proportional(direct->pder, target), "direct triple route gives (z^(3) - z4)^6");
  const auto ulc = check_ULC(P);
  c.expect(!ulc.pass, "ULC fails");
  const Check* w = ulc.find("consistent_orders");
  std::vector<std::uint32_t> orders;
  if (w && !w->pass) orders = {w->detail["first"]["order"].get<std::uint32_t>(), w->detail["second"]["order"].get<std::uint32_t>()};
  std::sort(orders.begin(), orders.end());
  c.expect(orders == std::vector<std::uint32_t>{0, 2}, "witness orders are 0 and 2");
  c.summary = "sUFC fusions=" + ufc.data["fusions"].dump();
  return c;
}

Criterion nonhomog_case() {
  Criterion c;
  const Polynomial P = nonhomog_counterexample();
  const auto D = d_from_polynomial(P, 2, 1);
  const auto S3 = min_total_degree(P, make_varset({z(1), z(2), z(3)}));
  const auto S2 = min_total_degree(P, make_varset({z(1), z(2)}));
  c.expect(D == 3, "D measured = 3, got " + std::to_string(D));
  c.expect(S3 - S2 == 2, "S_3 - S_2 = 2");
  c.expect(D > S3 - S2, "strict inequality");
  const Polynomial Q = symm_product(P);
  const auto QD = d_from_polynomial(Q, 2, 1);
  const auto QS3 = min_total_degree(Q, make_varset({z(1), z(2), z(3)}));
  const auto QS2 = min_total_degree(Q, make_varset({z(1), z(2)}));
  c.expect(QD > QS3 - QS2, "SymmP: D_{2,1} > S_3 - S_2");
  c.summary = "SymmP D_21=" + std::to_string(QD) + " S_3-S_2=" + std::to_string(QS3 - QS2);
  return c;
}

void laughlin_instance(Criterion& c, std::uint32_t N) {
  const std::uint32_t m = 2;
  const std::string tag = "N=" + std::to_string(N) + ": ";
  const Polynomial P = laughlin(N, m);
  const auto dense = oracle::laughlin_dense(N, m);
  c.expect(oracle::dense_terms(P, N) == dense, tag + "expansion matches the dense oracle");
  const auto S = pattern_from_polynomial(P, N);
  for (std::uint32_t a = 1; a <= N; ++a) {
    const std::int64_t want = m * a * (a - 1) / 2;
    c.expect(S[a - 1] == want && oracle::subset_min_degree(dense, N, a) == want,
             tag + "S_" + std::to_string(a) + " = " + std::to_string(want));
  }

  MomentumContext ctx(P, 20000);
  c.expect(ctx.preconditions().pass, tag + "symmetric, TI, homogeneous, sUFC and ULC");
  const PatternOfZeros pat{1, m, {0}};
  for (std::uint32_t a = 1; a < N; ++a)
    for (std::uint32_t b = 1; a + b <= N; ++b) {
      const auto measured = ctx.fusions().d(a, b);
      const auto from_pattern = d_from_pattern(pat, a, b);
      c.expect(measured == from_pattern && measured == m * a * b,
               tag + "D_" + std::to_string(a) + "," + std::to_string(b) + " measured " + std::to_string(measured) +
                   ", pattern " + std::to_string(from_pattern));
    }
  const auto cond = check_conditions(pat, N, S);
  for (const auto& check : cond.checks) c.expect(check.pass, tag + "condition " + check.name);
  c.expect(check_AMS(ctx).pass, tag + "AMS");
  c.expect(check_nAMS(ctx, 1).pass, tag + "1-AMS");
  const auto ncf = check_nCF_member(ctx, 1, m);
  c.expect(ncf.verdict("eq_nD_a_n"), tag + "nD_{a,n} = man instances");
  c.expect(ncf.verdict("eq_D_shift"), tag + "D_{a,b+n} = D_{a,b} + am instances");
  const auto thm = check_thm62(ctx);
  for (const auto& check : thm.checks) c.expect(check.pass, tag + "AMS consequence " + check.name);
  const std::uint32_t h = N / 2;
  const Polynomial two_body = pow(var(ctx.fusions().head_variable(h)) - var(ctx.fusions().second_variable(h, h)),
                                  ctx.fusions().d(h, h));
  c.expect(proportional(ctx.fusions().pair(h, h), two_body).has_value(),
           tag + "P_der(z^(" + std::to_string(h) + "), z^(" + std::to_string(h) + ")) is a power of the difference");
}

Criterion laughlin_case(std::uint32_t N) {
  Criterion c;
  laughlin_instance(c, N);
  c.summary = "N=" + std::to_string(N) + " m=2";
  return c;
}

Criterion property_case() {
  Criterion c;
  constexpr std::size_t kCount = 200;
  std::string counts;
  for (const auto& suite : {suites::lowest_order_inequality, suites::translation_invariant_equality,
                            suites::concavity, suites::evenness, suites::pattern_product_rule,
                            suites::derived_product_rule}) {
    const auto o = suite(2024, kCount);
    c.expect(o.instances >= kCount, o.name + ": only " + std::to_string(o.instances) + " instances");
    c.expect(o.failures == 0, o.name + ": " + std::to_string(o.failures) + " failures, first " + o.first_failure);
    counts += (counts.empty() ? "" : " ") + std::to_string(o.instances - o.failures) + "/" + std::to_string(o.instances);
    if (o.vacuous) counts += "(" + std::to_string(o.vacuous) + " vacuous)";
  }
  c.summary = "suites " + counts;
  return c;
}

Criterion momentum_case() {
  Criterion c;
  const auto o = suites::three_variable_momentum(2025, 100);
  c.expect(o.instances == 100, "100 instances");
  c.expect(o.failures == 0, std::to_string(o.failures) + " failures, first " + o.first_failure);
  c.summary = std::to_string(o.instances - o.failures) + "/" + std::to_string(o.instances);
  return c;
}

Criterion oracle_case() {
  Criterion c;
  std::size_t exact = 0, line = 0;
  for (std::size_t i = 0; i < g_fusions.size(); ++i) {
    const auto& r = g_fusions[i];
    const auto o = oracle::lowest_offset_degree(r.p, r.specs, 2e6, i + 1);
    (o.method == oracle::Method::exact ? exact : line)++;
    if (!o.s || *o.s != r.s) {
      std::string what;
      for (const auto& spec : r.specs) what += spec.describe() + " ";
      c.expect(false, what + "on " + std::to_string(r.p.size()) + " terms: s=" + std::to_string(r.s) +
                          " oracle=" + (o.s ? std::to_string(*o.s) : "vanishing"));
    }
  }
  c.expect(!g_fusions.empty(), "no fusions recorded");
  c.summary = std::to_string(g_fusions.size()) + " distinct fusions (" + std::to_string(exact) + " exact, " +
              std::to_string(line) + " random-line)";
  return c;
}

Criterion enumeration_case() {
  Criterion c;
  // Frozen from the exhaustive filter at cap 12.
  const std::vector<std::tuple<std::uint32_t, std::uint32_t, std::vector<std::vector<std::int64_t>>>> frozen{
      {1, 2, {{0}}}, {2, 1, {}}, {2, 2, {{0, 0}}}, {3, 2, {{0, 0, 0}}}};
  std::string counts;
  for (const auto& [n, m, want] : frozen) {
    std::vector<std::vector<std::int64_t>> got;
    for (const auto& pat : enumerate_patterns(n, m, 12)) got.push_back(pat.S);
    c.expect(got == want, "(" + std::to_string(n) + "," + std::to_string(m) + "): " + std::to_string(got.size()) +
                              " patterns, expected " + std::to_string(want.size()));
    counts += (counts.empty() ? "" : " ") + std::string("(") + std::to_string(n) + "," + std::to_string(m) +
              ")=" + std::to_string(got.size());
  }
  c.summary = counts;
  return c;
}

} // namespace

int main() {
  set_fusion_observer(record);
  bool all = true;
  auto run = [&](const char* id, const char* title, const std::function<Criterion()>& body, double limit) {
    const auto start = std::chrono::steady_clock::now();
    Criterion c = body();
    all = report_line(id, title, std::move(c), seconds_since(start), limit) && all;
  };
  run("AC1", "cubic counterexample", cubic_counterexample_case, 1);
  run("AC2", "ULC counterexample", ulc_counterexample_case, 10);
  run("AC3", "non-homogeneous counterexample", nonhomog_case, 5);
  {
    const auto start = std::chrono::steady_clock::now();
    Criterion four = laughlin_case(4);
    const double t4 = seconds_since(start);
    const auto mid = std::chrono::steady_clock::now();
    Criterion six = laughlin_case(6);
    const double t6 = seconds_since(mid);
    Criterion both;
    both.pass = four.pass && six.pass;
    for (auto* c : {&four, &six}) both.failures.insert(both.failures.end(), c->failures.begin(), c->failures.end());
    char buf[96];
    std::snprintf(buf, sizeof buf, "N=4 in %.2f s, N=6 in %.2f s", t4, t6);
    both.summary = buf;
    all = report_line("AC4", "Laughlin m=2, N in {4,6}", std::move(both), t6, 60) && all;
  }
  run("AC5", "property suites", property_case, 0);
  run("AC6", "2J_a >= d_a on random three-variable inputs", momentum_case, 0);
  set_fusion_observer(nullptr);
  run("AC7", "prederive order against the brute-force oracle", oracle_case, 0);
  run("AC8", "enumerate_patterns regression", enumeration_case, 0);
  return all ? 0 : 1;
}
