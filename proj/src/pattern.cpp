#include "poz/pattern.hpp"

#include <algorithm>
#include <string>

#include "poz/errors.hpp"
#include "poz/poly_ops.hpp"

namespace poz {

void validate_pattern(const PatternOfZeros& pat) {
  if (pat.n == 0 || pat.m == 0) throw PreconditionError("pattern: n and m must be positive");
  if (pat.S.size() != pat.n)
    throw PreconditionError("pattern: expected " + std::to_string(pat.n) + " values, got " +
                            std::to_string(pat.S.size()));
}

std::int64_t extend_pattern(const PatternOfZeros& pat, std::uint32_t a, std::uint32_t k) {
  validate_pattern(pat);
  if (a < 1 || a > pat.n) throw PreconditionError("extend_pattern: need 1 <= a <= n");
  const std::int64_t n = pat.n, m = pat.m, K = k;
  return pat.S[a - 1] + K * m * a + K * pat.S[n - 1] + m * n * K * (K - 1) / 2;
}

std::int64_t PatternOfZeros::value(std::uint32_t a) const {
  if (a == 0) return 0;
  return extend_pattern(*this, (a - 1) % n + 1, (a - 1) / n);
}

std::int64_t d_from_pattern(const PatternOfZeros& pat, std::uint32_t a, std::uint32_t b) {
  return pat.value(a + b) - pat.value(a) - pat.value(b);
}

std::vector<std::vector<std::int64_t>> d_table(const PatternOfZeros& pat, std::uint32_t bound) {
  std::vector<std::vector<std::int64_t>> t(bound, std::vector<std::int64_t>(bound));
  for (std::uint32_t a = 1; a <= bound; ++a)
    for (std::uint32_t b = 1; b <= bound; ++b) t[a - 1][b - 1] = d_from_pattern(pat, a, b);
  return t;
}

namespace {

std::vector<Variable> unit_particles(const Polynomial& p, const char* op) {
  if (p.is_zero()) throw ZeroPolynomialError(op);
  const auto vars = particles(p);
  for (auto v : vars)
    if (v.weight() != 1) throw PreconditionError(std::string(op) + ": all variables must have weight 1");
  for (auto v : p.registry())
    if (!v.is_particle()) throw PreconditionError(std::string(op) + ": unexpected variable " + v.name());
  return vars;
}

} // namespace

std::vector<std::int64_t> pattern_from_polynomial(const Polynomial& p, std::uint32_t a_max) {
  const auto vars = unit_particles(p, "pattern_from_polynomial");
  if (a_max > vars.size()) throw PreconditionError("pattern_from_polynomial: a_max exceeds variable count");
  if (!is_symmetric(p)) throw PreconditionError("pattern_from_polynomial: polynomial is not symmetric");
  const std::size_t N = vars.size();
  std::vector<std::int64_t> S;
  for (std::uint32_t a = 1; a <= a_max; ++a) {
    const auto head = min_total_degree(p, make_varset({vars.begin(), vars.begin() + a}));
    // Tail and strided subsets as a sample of the other a-subsets.
    std::vector<Variable> tail(vars.end() - a, vars.end()), strided;
    for (std::size_t start : {std::size_t{1}, std::size_t{0}})
      for (std::size_t i = start; i < N && strided.size() < a; i += 2) strided.push_back(vars[i]);
    if (min_total_degree(p, make_varset(tail)) != head || min_total_degree(p, make_varset(strided)) != head)
      throw Error("pattern_from_polynomial: S_" + std::to_string(a) + " depends on the chosen subset");
    S.push_back(head);
  }
  return S;
}

std::uint32_t d_from_polynomial(const Polynomial& p, std::uint32_t a, std::uint32_t b,
                                std::size_t budget) {
  const auto vars = unit_particles(p, "d_from_polynomial");
  if (a == 0 || b == 0 || a + b > vars.size())
    throw PreconditionError("d_from_polynomial: need a, b >= 1 and a + b <= N");
  if (budget > 0) {
    UfcOptions options;
    options.budget = budget;
    const auto ufc = check_sUFC(p, options);
    if (!ufc.pass) throw PreconditionError("d_from_polynomial: polynomial fails sUFC");
  }

  ConsecutiveFusions fusions(p);
  return fusions.d(a, b);
}

ConsecutiveFusions::ConsecutiveFusions(Polynomial p)
    : p_(std::move(p)), vars_(unit_particles(p_, "fusion ladder")),
      invariant_(is_translation_invariant(p_, p_.registry())) {}

namespace {

Polynomial fuse_run(const Polynomial& p, std::vector<Variable> inputs, Variable output,
                    bool invariant) {
  FusionSpec spec{std::move(inputs), output};
  auto derived = derive(p, spec, invariant ? std::optional<bool>(true) : std::nullopt);
  if (!derived) throw InseparableError(0, spec.describe() + " has no derived polynomial");
  return std::move(derived->pder);
}

} // namespace

Variable ConsecutiveFusions::head_variable(std::uint32_t a) const {
  return a == 1 ? vars_.at(0) : Variable::particle(a, 1);
}

Variable ConsecutiveFusions::second_variable(std::uint32_t a, std::uint32_t b) const {
  if (b == 1) return vars_.at(a);
  return Variable::particle(b, a == b ? 2 : 1);
}

const Polynomial& ConsecutiveFusions::head(std::uint32_t a) {
  if (a == 0 || a > vars_.size()) throw PreconditionError("fusion ladder: need 1 <= a <= N");
  if (a == 1) return p_;
  auto it = heads_.find(a);
  if (it == heads_.end())
    it = heads_.emplace(a, fuse_run(p_, {vars_.begin(), vars_.begin() + a}, head_variable(a), invariant_)).first;
  return it->second;
}

const Polynomial& ConsecutiveFusions::pair(std::uint32_t a, std::uint32_t b) {
  if (a == 0 || b == 0 || a + b > vars_.size())
    throw PreconditionError("fusion ladder: need a, b >= 1 and a + b <= N");
  if (b == 1) return head(a);
  auto it = pairs_.find({a, b});
  if (it == pairs_.end()) {
    Polynomial fused = fuse_run(head(a), {vars_.begin() + a, vars_.begin() + a + b}, second_variable(a, b), invariant_);
    it = pairs_.emplace(std::make_pair(a, b), std::move(fused)).first;
  }
  return it->second;
}

std::uint32_t ConsecutiveFusions::d(std::uint32_t a, std::uint32_t b) {
  auto it = orders_.find({a, b});
  if (it != orders_.end()) return it->second;
  const auto order = linear_form_order(pair(a, b), head_variable(a), second_variable(a, b));
  orders_.emplace(std::make_pair(a, b), order);
  return order;
}

AnalysisReport check_conditions(const PatternOfZeros& pat, std::uint32_t a_max,
                                const std::optional<std::vector<std::int64_t>>& observed) {
  validate_pattern(pat);
  AnalysisReport report;
  report.subject = "pattern conditions";
  auto S = [&](std::uint32_t a) { return pat.value(a); };

  Json witness;
  bool ok = true;
  for (std::uint32_t a = 1; ok && a <= a_max; ++a)
    for (std::uint32_t b = a; ok && a + b <= a_max; ++b)
      if (S(a + b) - S(a) - S(b) < 0) {
        ok = false;
        witness = {{"a", a}, {"b", b}, {"D", S(a + b) - S(a) - S(b)}};
      }
  report.add("a_nonnegative_D", ok, witness, "theorem-backed");

  ok = true;
  witness = Json::object();
  for (std::uint32_t a = 1; ok && a <= a_max; ++a)
    for (std::uint32_t b = a; ok && a + b <= a_max; ++b)
      for (std::uint32_t c = b; ok && a + b + c <= a_max; ++c)
        if (S(a + b + c) + S(a) + S(b) + S(c) < S(a + b) + S(b + c) + S(c + a)) {
          ok = false;
          witness = {{"a", a}, {"b", b}, {"c", c}};
        }
  report.add("b_concavity", ok, witness, "theorem-backed");

  ok = true;
  witness = Json::object();
  for (std::uint32_t a = 1; ok && 2 * a <= a_max; ++a)
    if (S(2 * a) % 2 != 0) {
      ok = false;
      witness = {{"a", a}, {"S_2a", S(2 * a)}};
    }
  report.add("c_even_S_2a", ok, witness, "theorem-backed");

  report.add("d_mn_even", (pat.m * pat.n) % 2 == 0, {{"mn", pat.m * pat.n}}, "theorem-backed");
  report.add("e_2Sn_divisible_by_n", (2 * S(pat.n)) % pat.n == 0, {{"2S_n", 2 * S(pat.n)}, {"n", pat.n}},
             "conjectural");

  ok = true;
  witness = Json::object();
  for (std::uint32_t a = 1; ok && 3 * a <= a_max; ++a)
    if ((S(3 * a) - S(a)) % 2 != 0) {
      ok = false;
      witness = {{"a", a}, {"S_3a_minus_S_a", S(3 * a) - S(a)}};
    }
  report.add("f_even_S_3a_minus_S_a", ok, witness, "conjectural");

  ok = true;
  witness = Json::object();
  if (observed) {
    for (std::uint32_t a = 1; ok && a <= observed->size(); ++a)
      if ((*observed)[a - 1] != S(a)) {
        ok = false;
        witness = {{"a", a}, {"observed", (*observed)[a - 1]}, {"extended", S(a)}};
      }
  } else {
    witness = {{"note", "no observed values"}};
  }
  report.add("g_extension", ok, witness, "theorem-backed");

  Json values = Json::array();
  for (std::uint32_t a = 1; a <= a_max; ++a) values.push_back(S(a));
  report.data["S"] = values;
  return report;
}

std::vector<PatternOfZeros> enumerate_patterns(std::uint32_t n, std::uint32_t m, std::int64_t cap) {
  if (n == 0 || m == 0) throw PreconditionError("enumerate_patterns: n and m must be positive");
  if (cap < 0) throw PreconditionError("enumerate_patterns: negative cap");
  std::vector<PatternOfZeros> out;
  PatternOfZeros pat{n, m, std::vector<std::int64_t>(n, 0)};
  for (;;) {
    const auto report = check_conditions(pat, 3 * n);
    if (std::all_of(report.checks.begin(), report.checks.end(), [](const Check& c) { return c.pass; }))
      out.push_back(pat);
    // Odometer over S_2..S_n, last index fastest.
    std::size_t j = n - 1;
    while (j >= 1 && pat.S[j] == cap) pat.S[j--] = 0;
    if (j < 1) break;
    ++pat.S[j];
  }
  return out;
}

} // namespace poz
