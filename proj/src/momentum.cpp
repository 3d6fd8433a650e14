#include "poz/momentum.hpp"

#include <algorithm>

#include "poz/errors.hpp"
#include "poz/fusion.hpp"
#include "poz/io.hpp"
#include "poz/poly_ops.hpp"

namespace poz {

namespace {

void copy_checks(AnalysisReport& into, const AnalysisReport& from) {
  for (const auto& c : from.checks) into.add(c.name, c.pass, c.detail, c.tag);
}

Json rationals_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(rational_json(v));
  return out;
}

} // namespace

MomentumReport momentum_report(ConsecutiveFusions& fusions) {
  const Polynomial& p = fusions.polynomial();
  if (!is_symmetric(p)) throw PreconditionError("momentum: polynomial is not symmetric");
  if (!is_translation_invariant(p)) throw PreconditionError("momentum: polynomial is not translation invariant");
  MomentumReport r;
  r.N = fusions.size();
  r.twoJ = max_degree(p, fusions.head_variable(1));
  r.J = ratio(r.twoJ, 2);
  r.S = pattern_from_polynomial(p, r.N);
  for (std::uint32_t a = 1; a <= r.N; ++a) {
    r.J_a.push_back(Rational(a) * r.J - Rational(static_cast<long>(r.S[a - 1])));
    if (a == 1)
      r.d.push_back(r.twoJ);
    else if (a == r.N)
      r.d.push_back(0);
    else
      r.d.push_back(max_degree(fusions.head(a), fusions.head_variable(a)));
  }
  r.J_N = r.J_a.back();
  r.AMS = r.J_N == 0;
  return r;
}

MomentumReport momentum_report(const Polynomial& p) {
  ConsecutiveFusions fusions(p);
  return momentum_report(fusions);
}

Json to_json(const MomentumReport& r) {
  Json j;
  j["N"] = r.N;
  j["twoJ"] = r.twoJ;
  j["J"] = rational_json(r.J);
  j["S"] = r.S;
  j["J_a"] = rationals_json(r.J_a);
  j["d"] = r.d;
  j["J_N"] = rational_json(r.J_N);
  j["AMS"] = r.AMS;
  return j;
}

MomentumContext::MomentumContext(const Polynomial& p, std::size_t budget)
    : fusions_(p), momentum_(momentum_report(fusions_)) {
  preconditions_.subject = "momentum preconditions";
  const auto structure = structure_report(p);
  preconditions_.add("symmetric", structure.symmetric, {}, "precondition");
  preconditions_.add("translation_invariant", structure.translation_invariant, {}, "precondition");
  preconditions_.add("homogeneous", structure.homogeneous, {}, "precondition");

  UfcOptions options;
  options.budget = budget;
  const auto atlas = explore_fusions(p, options);
  AnalysisReport ufc, ulc;
  add_ufc_verdicts(ufc, atlas, options);
  if (!atlas.inseparable_route) add_ulc_verdict(ulc, atlas);
  Json ufc_detail = to_json(ufc), ulc_detail = to_json(ulc);
  preconditions_.add("sUFC", ufc.pass, {{"complete", atlas.complete}, {"fusions", atlas.fusions}},
                     "precondition");
  preconditions_.add("ULC", ulc.pass && !atlas.inseparable_route, {{"complete", atlas.complete}},
                     "precondition");
  preconditions_.data["sUFC"] = std::move(ufc_detail);
  preconditions_.data["ULC"] = std::move(ulc_detail);
}

AnalysisReport check_thm61(MomentumContext& ctx) {
  AnalysisReport report;
  report.subject = "2J_a >= d_a";
  for (const char* name : {"symmetric", "translation_invariant", "sUFC"})
    report.add(name, ctx.preconditions().verdict(name), {}, "precondition");
  const auto& m = ctx.momentum();
  bool ok = true;
  Json margins = Json::array(), witness = Json::object();
  for (std::uint32_t a = 2; a < m.N; ++a) {
    const Rational twoJa = 2 * m.J_a[a - 1];
    const Rational margin = twoJa - Rational(m.d[a - 1]);
    margins.push_back({{"a", a}, {"two_J_a", rational_json(twoJa)}, {"d_a", m.d[a - 1]},
                       {"margin", rational_json(margin)}});
    if (margin < 0 && ok) {
      ok = false;
      witness = margins.back();
    }
  }
  report.add("inequality", ok, witness, "theorem-backed");
  report.data["margins"] = std::move(margins);
  return report;
}

AnalysisReport check_thm61(const Polynomial& p, std::size_t budget) {
  MomentumContext ctx(p, budget);
  return check_thm61(ctx);
}

AnalysisReport check_AMS(MomentumContext& ctx) {
  AnalysisReport report;
  report.subject = "AMS";
  copy_checks(report, ctx.preconditions());
  const auto& m = ctx.momentum();
  report.add("AMS", m.AMS, {{"J_N", rational_json(m.J_N)}});
  const auto S_N = m.S.back();
  report.add("ams_implies_2S_N_divisible_by_N", !m.AMS || (2 * S_N) % m.N == 0,
             {{"2S_N", 2 * S_N}, {"N", m.N}}, "theorem-backed");
  report.data["J_N"] = rational_json(m.J_N);
  return report;
}

bool check_AMS(const Polynomial& p) { return momentum_report(p).AMS; }

AnalysisReport check_nAMS(MomentumContext& ctx, std::uint32_t n) {
  AnalysisReport report;
  report.subject = std::to_string(n) + "-AMS";
  copy_checks(report, ctx.preconditions());
  const auto& m = ctx.momentum();
  report.add("AMS", m.AMS, {{"J_N", rational_json(m.J_N)}});
  const bool divides = n >= 1 && n < m.N && m.N % n == 0;
  report.add("n_divides_N", divides, {{"n", n}, {"N", m.N}});
  if (!divides) return report;
  const auto D = ctx.fusions().d(n, 1);
  const Rational rhs = ratio(static_cast<long>(D) * static_cast<long>(m.N - n), 2);
  report.add("J_n_identity", m.J_a[n - 1] == rhs,
             {{"J_n", rational_json(m.J_a[n - 1])}, {"D_n1", D}, {"rhs", rational_json(rhs)}});
  return report;
}

bool check_nAMS(const Polynomial& p, std::uint32_t n) {
  ConsecutiveFusions fusions(p);
  const auto m = momentum_report(fusions);
  if (!m.AMS || n == 0 || n >= m.N || m.N % n != 0) return false;
  return 2 * m.J_a[n - 1] == Rational(static_cast<long>(fusions.d(n, 1)) * static_cast<long>(m.N - n));
}

AnalysisReport check_thm62(MomentumContext& ctx, std::optional<std::uint32_t> n) {
  AnalysisReport report;
  report.subject = "AMS consequences";
  const auto& m = ctx.momentum();
  report.add("AMS", m.AMS, {{"J_N", rational_json(m.J_N)}}, "precondition");
  if (!m.AMS) return report;
  const std::uint32_t N = m.N;
  const Rational S_N(static_cast<long>(m.S[N - 1]));
  auto S = [&](std::uint32_t a) { return Rational(static_cast<long>(m.S[a - 1])); };

  report.add("i_J_equals_S_N_over_N", m.J == S_N / Rational(N),
             {{"J", rational_json(m.J)}, {"S_N_over_N", rational_json(S_N / Rational(N))}}, "theorem-backed");

  bool ii = true, iii = true, iv = true, variant = true;
  Json ii_w = Json::object(), iii_w = Json::object(), iv_w = Json::object(), rows = Json::array();
  for (std::uint32_t a = 1; a < N; ++a) {
    const auto D = ctx.fusions().d(N - a, a);
    const Rational Ja = m.J_a[a - 1], Jb = m.J_a[N - a - 1];
    if ((Ja != Jb || 2 * Ja != Rational(D)) && ii) {
      ii = false;
      ii_w = {{"a", a}, {"J_a", rational_json(Ja)}, {"J_N_minus_a", rational_json(Jb)}, {"D", D}};
    }
    const Rational rhs = S(N - a) - ratio(static_cast<long>(N) - 2 * static_cast<long>(a), N) * S_N;
    if (S(a) != rhs && iii) {
      iii = false;
      iii_w = {{"a", a}, {"S_a", rational_json(S(a))}, {"rhs", rational_json(rhs)}};
    }
    if (n && *n >= 1 && *n <= N) {
      const Rational alt = S(N - a) - ratio(static_cast<long>(N) - 2 * static_cast<long>(a), N) * S(*n);
      if (S(a) != alt) variant = false;
    }

    const Polynomial& pd = ctx.fusions().pair(a, N - a);
    const Variable va = ctx.fusions().head_variable(a), vb = ctx.fusions().second_variable(a, N - a);
    const auto top = max_degree(pd, va);
    const Polynomial model = pow(Polynomial::variable(va) - Polynomial::variable(vb), D);
    const bool power = proportional(pd, model).has_value();
    if ((Rational(top) != 2 * Ja || !power) && iv) {
      iv = false;
      iv_w = {{"a", a}, {"top_degree", top}, {"two_J_a", rational_json(2 * Ja)}, {"is_power", power}};
    }
    rows.push_back({{"a", a}, {"D_N_minus_a_a", D}, {"J_a", rational_json(Ja)}, {"top_degree", top}});
  }
  report.add("ii_J_a_symmetric_and_half_D", ii, ii_w, "theorem-backed");
  report.add("iii_S_a_identity", iii, iii_w, "theorem-backed");
  report.add("iv_two_body_derived_polynomial", iv, iv_w, "theorem-backed");
  if (n) report.add("iii_with_S_n", variant, {{"n", *n}}, "informational");
  report.data["rows"] = std::move(rows);
  return report;
}

AnalysisReport check_nCF_member(MomentumContext& ctx, std::uint32_t n, std::uint32_t m) {
  AnalysisReport report;
  report.subject = std::to_string(n) + "-cluster form, m = " + std::to_string(m);
  copy_checks(report, ctx.preconditions());
  const auto& mom = ctx.momentum();
  const std::uint32_t N = mom.N;
  const bool divides = n >= 1 && n <= N && N % n == 0;
  report.add("n_divides_N", divides, {{"n", n}, {"N", N}}, "precondition");
  if (!divides) return report;
  auto& f = ctx.fusions();
  const Polynomial& pd = f.head(n);
  const Variable Z = f.head_variable(n);
  const auto vars = particles(f.polynomial());

  bool ok = true;
  Json w = Json::object();
  for (std::uint32_t i = n; i < N; ++i) {
    const auto order = linear_form_order(pd, Z, vars[i]);
    if (order != m && ok) {
      ok = false;
      w = {{"factor", "(" + Z.name() + " - " + vars[i].name() + ")"}, {"order", order}, {"expected", m}};
    }
  }
  report.add("factor_orders", ok, w, "theorem-backed");
  const auto top = max_degree(pd, Z);
  report.add("top_degree", top == m * (N - n), {{"degree", top}, {"expected", m * (N - n)}}, "theorem-backed");

  ok = true;
  w = Json::object();
  std::size_t instances = 0;
  for (std::uint32_t a = 1; a + n <= N; ++a) {
    ++instances;
    const auto D = f.d(a, n);
    if (n * D != m * a * n && ok) {
      ok = false;
      w = {{"a", a}, {"D_a_n", D}};
    }
  }
  report.add("eq_nD_a_n", ok, {{"instances", instances}, {"witness", w}}, "theorem-backed");

  ok = true;
  w = Json::object();
  instances = 0;
  for (std::uint32_t a = 1; a < N; ++a)
    for (std::uint32_t b = 1; a + b + n <= N; ++b) {
      ++instances;
      const auto lhs = f.d(a, b + n), rhs = f.d(a, b) + a * m;
      if (lhs != rhs && ok) {
        ok = false;
        w = {{"a", a}, {"b", b}, {"D_a_b_plus_n", lhs}, {"D_a_b_plus_am", rhs}};
      }
    }
  report.add("eq_D_shift", ok, {{"instances", instances}, {"witness", w}}, "theorem-backed");

  if (2 * n <= N) {
    const auto Dnn = f.d(n, n);
    report.add("D_n_n_equals_mn", Dnn == m * n, {{"D_n_n", Dnn}, {"mn", m * n}}, "theorem-backed");
  }
  const Rational rhs = ratio(2 * mom.S[n - 1], n) + Rational(m) * Rational(N / n - 1);
  report.add("two_J_formula", Rational(mom.twoJ) == rhs,
             {{"two_J", mom.twoJ}, {"rhs", rational_json(rhs)}}, "theorem-backed");
  return report;
}

AnalysisReport check_family(const std::vector<Polynomial>& members, std::uint32_t n, std::uint32_t m,
                            std::size_t budget) {
  AnalysisReport report;
  report.subject = "family";
  if (members.empty()) throw PreconditionError("family: no members");
  std::vector<MomentumContext> ctx;
  ctx.reserve(members.size());
  for (const auto& p : members) ctx.emplace_back(p, budget);

  bool agree = true;
  Json w = Json::object();
  for (std::size_t i = 0; i < ctx.size(); ++i)
    for (std::size_t j = i + 1; j < ctx.size(); ++j) {
      const auto& a = ctx[i].momentum().S;
      const auto& b = ctx[j].momentum().S;
      const auto common = std::min(a.size(), b.size());
      for (std::size_t k = 0; k < common && agree; ++k)
        if (a[k] != b[k]) {
          agree = false;
          w = {{"members", {i, j}}, {"a", k + 1}, {"S", {a[k], b[k]}}};
        }
    }
  report.add("patterns_agree", agree, w);

  Json rows = Json::array();
  bool all_nams = true, arithmetic = true;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    const auto nams = check_nAMS(ctx[i], n);
    const auto& mom = ctx[i].momentum();
    const Rational d(mom.twoJ);
    const Rational via_S_N = ratio(2 * mom.S.back(), mom.N);
    bool formula = false;
    if (mom.N % n == 0)
      formula = d == ratio(2 * mom.S[n - 1], n) + Rational(m) * Rational(mom.N / n - 1);
    const bool row_ok = d == via_S_N && formula;
    all_nams = all_nams && nams.pass;
    arithmetic = arithmetic && row_ok;
    rows.push_back({{"N", mom.N}, {"d", mom.twoJ}, {"n_AMS", nams.pass}, {"degree_identities", row_ok},
                    {"N_over_d", rational_json(mom.twoJ ? Rational(mom.N) / d : Rational(0))}});
  }
  report.add("members_n_AMS", all_nams);
  report.add("member_degree_identities", arithmetic, {}, "theorem-backed");
  report.data["members"] = std::move(rows);
  report.data["n_over_m"] = rational_json(ratio(n, m));
  return report;
}

} // namespace poz
