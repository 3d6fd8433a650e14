#include "poz/generators.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "poz/errors.hpp"
#include "poz/poly_ops.hpp"

namespace poz {

namespace {

Polynomial diff(Variable a, Variable b) { return Polynomial::variable(a) - Polynomial::variable(b); }

// Random product of pairwise differences with total degree in [1, cap].
Polynomial difference_monomial(std::uint32_t N, std::uint32_t cap, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> degree(1, cap), pick(1, N);
  const auto d = degree(rng);
  Polynomial out(1);
  for (std::uint32_t k = 0; k < d; ++k) {
    auto i = pick(rng), j = pick(rng);
    while (j == i) j = pick(rng);
    out = out * diff(z(i), z(j));
  }
  return out;
}

Rational small_coefficient(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-5, 5);
  int v = 0;
  while (v == 0) v = c(rng);
  return Rational(v);
}

Polynomial random_ti(std::uint32_t N, std::uint32_t cap, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(1, 3);
  PolynomialBuilder b(make_varset([&] {
    std::vector<Variable> vs;
    for (std::uint32_t i = 1; i <= N; ++i) vs.push_back(z(i));
    return vs;
  }()));
  const int k = count(rng);
  for (int i = 0; i < k; ++i) b.add_scaled(difference_monomial(N, cap, rng), small_coefficient(rng), Monomial());
  return std::move(b).build();
}

} // namespace

Polynomial laughlin(std::uint32_t N, std::uint32_t m) {
  if (N < 2 || m < 1) throw PreconditionError("laughlin: need N >= 2 and m >= 1");
  Polynomial vandermonde(1);
  for (std::uint32_t i = 1; i <= N; ++i)
    for (std::uint32_t j = i + 1; j <= N; ++j) vandermonde = vandermonde * diff(z(i), z(j));
  return pow(vandermonde, m);
}

Polynomial symm_product(const Polynomial& p) {
  const auto vars = particles(p);
  if (vars.size() != 3 || p.registry().size() != 3)
    throw PreconditionError("symm_product: expected exactly three variables");
  for (auto v : vars)
    if (v.weight() != 1) throw PreconditionError("symm_product: variables must have weight 1");
  std::vector<std::size_t> perm{0, 1, 2};
  Polynomial out(1);
  do {
    Renaming r;
    for (std::size_t i = 0; i < 3; ++i) r.emplace(vars[i], vars[perm[i]]);
    out = out * rename(p, r);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Polynomial cubic_counterexample() {
  const Polynomial x = Polynomial::variable(z(1)), y = Polynomial::variable(z(2)),
                   w = Polynomial::variable(z(3));
  const Polynomial c = (x + y + w).scaled(ratio(1, 3));
  return (x - c) * (y - c) * (w - c);
}

Polynomial ulc_counterexample() {
  std::vector<Polynomial> squares;
  for (std::uint32_t i = 1; i <= 4; ++i)
    for (std::uint32_t j = i + 1; j <= 4; ++j) squares.push_back(pow(diff(z(i), z(j)), 2));
  PolynomialBuilder sum(make_varset({z(1), z(2), z(3), z(4)}));
  for (std::size_t omit = 0; omit < squares.size(); ++omit) {
    Polynomial term(1);
    for (std::size_t k = 0; k < squares.size(); ++k)
      if (k != omit) term = term * squares[k];
    sum.add(term);
  }
  return std::move(sum).build();
}

Polynomial nonhomog_counterexample() {
  const Polynomial z1 = Polynomial::variable(z(1)), z2 = Polynomial::variable(z(2)),
                   z3 = Polynomial::variable(z(3));
  const Polynomial y = z3 - (z1 + z2).scaled(ratio(1, 2));
  const Polynomial x = z1 - z2;
  return pow(y, 3) + pow(x, 2);
}

Polynomial symmetrize(const Polynomial& p) {
  std::map<std::uint32_t, std::vector<Variable>> groups;
  for (auto v : particles(p)) groups[v.weight()].push_back(v);
  std::vector<std::vector<Variable>> lists;
  for (auto& [w, vs] : groups) lists.push_back(vs);

  PolynomialBuilder out(p.registry());
  Renaming r;
  std::function<void(std::size_t)> rec = [&](std::size_t g) {
    if (g == lists.size()) {
      out.add(rename(p, r));
      return;
    }
    auto image = lists[g];
    do {
      for (std::size_t i = 0; i < image.size(); ++i) r[lists[g][i]] = image[i];
      rec(g + 1);
    } while (std::next_permutation(image.begin(), image.end()));
  };
  rec(0);
  return std::move(out).build();
}

Polynomial random_ti_symmetric(std::uint32_t N, std::uint32_t degree_cap, std::mt19937_64& rng) {
  if (N < 2) throw PreconditionError("random_ti_symmetric: need N >= 2");
  if (degree_cap < 1) throw PreconditionError("random_ti_symmetric: need degree_cap >= 1");
  for (;;) {
    Polynomial p = symmetrize(random_ti(N, degree_cap, rng));
    if (!p.is_zero()) return p;
  }
}

Polynomial random_ti_symmetric(std::uint32_t N, std::uint32_t degree_cap, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_ti_symmetric(N, degree_cap, rng);
}

Polynomial random_polynomial(const std::vector<Variable>& vars, std::uint32_t max_terms,
                             std::uint32_t max_exponent, std::mt19937_64& rng) {
  if (vars.empty() || max_terms == 0) throw PreconditionError("random_polynomial: empty shape");
  std::uniform_int_distribution<std::uint32_t> terms(1, max_terms), exponent(0, max_exponent);
  for (;;) {
    PolynomialBuilder b(make_varset(vars));
    const auto t = terms(rng);
    for (std::uint32_t k = 0; k < t; ++k) {
      std::vector<std::pair<Variable, std::uint32_t>> entries;
      for (auto v : vars)
        if (auto e = exponent(rng)) entries.emplace_back(v, e);
      b.add(Monomial(std::move(entries)), small_coefficient(rng));
    }
    Polynomial p = std::move(b).build();
    if (!p.is_zero()) return p;
  }
}

const std::vector<std::string>& family_kinds() {
  static const std::vector<std::string> kinds{"laughlin",          "symm_product",
                                              "counterexample_f",  "counterexample_ulc",
                                              "counterexample_nonhomog", "random_ti_symmetric"};
  return kinds;
}

Polynomial generate(const FamilySpec& spec) {
  if (spec.kind == "laughlin") return laughlin(spec.N, spec.m);
  if (spec.kind == "counterexample_f") return cubic_counterexample();
  if (spec.kind == "counterexample_ulc") return ulc_counterexample();
  if (spec.kind == "counterexample_nonhomog") return nonhomog_counterexample();
  if (spec.kind == "random_ti_symmetric") {
    if (spec.degree_cap < 1) throw PreconditionError("random_ti_symmetric: need degree_cap >= 1");
    return random_ti_symmetric(spec.N, spec.degree_cap, spec.seed);
  }
  if (spec.kind == "symm_product") {
    // Without a degree cap the base is the non-homogeneous example; otherwise
    // a seeded random translation-invariant polynomial in three variables.
    if (spec.N != 0 && spec.N != 3) throw PreconditionError("symm_product: N must be 3");
    if (spec.degree_cap == 0) return symm_product(nonhomog_counterexample());
    std::mt19937_64 rng(spec.seed);
    Polynomial base;
    while (base.is_zero() || particles(base).size() != 3) base = random_ti(3, spec.degree_cap, rng);
    return symm_product(base);
  }
  std::string known;
  for (const auto& k : family_kinds()) known += (known.empty() ? "" : ", ") + k;
  throw PreconditionError("unknown family kind '" + spec.kind + "' (known: " + known + ")");
}

FamilySpec family_from_json(const Json& j) {
  if (!j.is_object()) throw PreconditionError("family: expected a JSON object");
  FamilySpec spec;
  if (!j.contains("kind") || !j["kind"].is_string()) throw PreconditionError("family: missing \"kind\"");
  spec.kind = j["kind"].get<std::string>();
  auto field = [&](const char* name, auto& out) {
    if (!j.contains(name)) return;
    if (!j[name].is_number_unsigned()) throw PreconditionError(std::string("family: \"") + name + "\" must be a non-negative integer");
    out = j[name].get<std::remove_reference_t<decltype(out)>>();
  };
  field("N", spec.N);
  field("m", spec.m);
  field("degree_cap", spec.degree_cap);
  field("seed", spec.seed);
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "kind" && it.key() != "N" && it.key() != "m" && it.key() != "degree_cap" && it.key() != "seed")
      throw PreconditionError("family: unknown field \"" + it.key() + "\"");
  return spec;
}

Json family_to_json(const FamilySpec& spec) {
  return Json{{"kind", spec.kind}, {"N", spec.N}, {"m", spec.m}, {"degree_cap", spec.degree_cap}, {"seed", spec.seed}};
}

} // namespace poz
