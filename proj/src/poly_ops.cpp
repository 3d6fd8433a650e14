#include "poz/poly_ops.hpp"

#include <algorithm>
#include <limits>

#include "poz/errors.hpp"

namespace poz {

std::uint32_t min_total_degree(const Polynomial& p, const VarSet& vars) {
  if (p.is_zero()) throw ZeroPolynomialError("min_total_degree");
  for (auto v : vars)
    if (!varset_contains(p.registry(), v))
      throw PreconditionError("min_total_degree: " + v.name() + " not in registry");
  std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
  for (const auto& t : p.terms()) best = std::min(best, t.monomial.degree_in(vars));
  return best;
}

std::uint32_t max_degree(const Polynomial& p, Variable v) {
  if (p.is_zero()) throw ZeroPolynomialError("max_degree");
  std::uint32_t best = 0;
  for (const auto& t : p.terms()) best = std::max(best, t.monomial.exponent(v));
  return best;
}

std::uint32_t linear_form_order(const Polynomial& p, Variable a, Variable b) {
  if (p.is_zero()) throw ZeroPolynomialError("linear_form_order");
  if (a == b) throw PreconditionError("linear_form_order: variables must differ");
  // Group by the cofactor outside {a, b} and by degree d in {a, b}. Each group
  // is b^d f(a/b) for a univariate f, and (a - b)^k divides it exactly when
  // x = 1 is a root of f of multiplicity k, i.e. the moments
  // sum_i c_i binom(i, j) vanish for j < k.
  using Key = std::pair<Monomial, std::uint32_t>;
  auto less = [](const Key& x, const Key& y) {
    return x.second != y.second ? x.second < y.second : grlex_less(x.first, y.first);
  };
  std::map<Key, std::vector<std::pair<std::uint32_t, Rational>>, decltype(less)> groups(less);
  for (const auto& t : p.terms()) {
    const auto ea = t.monomial.exponent(a), eb = t.monomial.exponent(b);
    const Monomial rest = t.monomial.without(a).without(b);
    groups[{rest, ea + eb}].emplace_back(ea, t.coeff);
  }
  std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
  for (const auto& [key, coeffs] : groups) {
    std::uint32_t k = 0;
    for (;; ++k) {
      if (k >= best) break;
      Rational moment = 0;
      Integer binom;
      for (const auto& [i, c] : coeffs) {
        if (i < k) continue;
        mpz_bin_uiui(binom.get_mpz_t(), i, k);
        moment += c * binom;
      }
      if (moment != 0) break;
    }
    best = std::min(best, k);
    if (best == 0) break;
  }
  return best;
}

std::vector<std::pair<std::uint32_t, Polynomial>> homogeneous_components(const Polynomial& p,
                                                                       const VarSet& vars) {
  std::map<std::uint32_t, PolynomialBuilder> parts;
  for (const auto& t : p.terms()) {
    auto [it, inserted] = parts.try_emplace(t.monomial.degree_in(vars), p.registry());
    it->second.add(t.monomial, t.coeff);
  }
  std::vector<std::pair<std::uint32_t, Polynomial>> out;
  for (auto& [degree, builder] : parts) out.emplace_back(degree, std::move(builder).build());
  return out;
}

std::vector<Variable> particles(const Polynomial& p) {
  std::vector<Variable> out;
  for (auto v : p.registry())
    if (v.is_particle()) out.push_back(v);
  return out;
}

std::vector<Variable> particles_of_weight(const Polynomial& p, std::uint32_t weight) {
  std::vector<Variable> out;
  for (auto v : p.registry())
    if (v.is_particle() && v.weight() == weight) out.push_back(v);
  return out;
}

bool is_symmetric(const Polynomial& p) {
  // Adjacent transpositions generate each same-weight permutation group.
  const auto vars = particles(p);
  for (std::size_t i = 0; i + 1 < vars.size(); ++i) {
    if (vars[i].weight() != vars[i + 1].weight()) continue;
    Renaming swap{{vars[i], vars[i + 1]}, {vars[i + 1], vars[i]}};
    if (rename(p, swap) != p) return false;
  }
  return true;
}

bool is_translation_invariant(const Polynomial& p, const VarSet& vars) {
  // P(v + t) = exp(tD) P with D the sum of the partials, so invariance is
  // D P = 0.
  PolynomialBuilder derivative(p.registry());
  for (const auto& t : p.terms()) {
    for (const auto& [v, e] : t.monomial.entries()) {
      if (!varset_contains(vars, v)) continue;
      std::vector<Monomial::Entry> entries(t.monomial.entries().begin(), t.monomial.entries().end());
      for (auto& entry : entries)
        if (entry.first == v) --entry.second;
      derivative.add(Monomial(std::move(entries)), t.coeff * e);
    }
  }
  return derivative.empty() || std::move(derivative).build().is_zero();
}

bool is_translation_invariant(const Polynomial& p) {
  return is_translation_invariant(p, particles(p));
}

bool is_homogeneous(const Polynomial& p) {
  if (p.is_zero()) return true;
  const auto d = p.leading().monomial.total_degree();
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [d](const Term& t) { return t.monomial.total_degree() == d; });
}

StructureReport structure_report(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomialError("structure_report");
  return {is_symmetric(p), is_translation_invariant(p), is_homogeneous(p)};
}

Polynomial normalize_primitive(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomialError("normalize_primitive");
  Integer denominators = 1, numerators = 0;
  for (const auto& t : p.terms()) {
    mpz_lcm(denominators.get_mpz_t(), denominators.get_mpz_t(), t.coeff.get_den_mpz_t());
    mpz_gcd(numerators.get_mpz_t(), numerators.get_mpz_t(), t.coeff.get_num_mpz_t());
  }
  Rational factor(denominators, numerators);
  factor.canonicalize();
  if (p.leading().coeff < 0) factor = -factor;
  return p.scaled(factor);
}

std::optional<Rational> proportional(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() && q.is_zero()) return Rational(1);
  if (p.is_zero() || q.is_zero() || p.size() != q.size()) return std::nullopt;
  const auto pt = p.terms(), qt = q.terms();
  Rational c = pt[0].coeff / qt[0].coeff;
  for (std::size_t i = 0; i < pt.size(); ++i) {
    if (!(pt[i].monomial == qt[i].monomial)) return std::nullopt;
    if (pt[i].coeff != c * qt[i].coeff) return std::nullopt;
  }
  return c;
}

Variable fresh_scratch(std::initializer_list<const VarSet*> registries) {
  std::uint32_t next = 1;
  for (const VarSet* r : registries)
    for (auto v : *r)
      if (v.kind() == VarKind::scratch) next = std::max(next, v.index() + 1);
  return Variable::scratch(next);
}

} // namespace poz
