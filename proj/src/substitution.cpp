#include <algorithm>
#include <limits>

#include "poz/errors.hpp"
#include "poz/poly_ops.hpp"

namespace poz {

namespace {

constexpr std::uint32_t kUnbounded = std::numeric_limits<std::uint32_t>::max();
constexpr std::uint32_t kTempBase = 1u << 30;

std::uint32_t grade_of(const Monomial& m, const VarSet& graded) {
  return graded.empty() ? 0 : m.degree_in(graded);
}

Polynomial truncated_product(const Polynomial& a, const Polynomial& b, const VarSet& graded,
                             std::uint32_t max_grade) {
  if (max_grade == kUnbounded) return a * b;
  PolynomialBuilder out(varset_union(a.registry(), b.registry()));
  std::vector<std::uint32_t> gb;
  gb.reserve(b.size());
  for (const auto& t : b.terms()) gb.push_back(grade_of(t.monomial, graded));
  for (const auto& ta : a.terms()) {
    const auto ga = grade_of(ta.monomial, graded);
    if (ga > max_grade) continue;
    std::size_t k = 0;
    for (const auto& tb : b.terms()) {
      if (ga + gb[k++] <= max_grade) out.add(ta.monomial * tb.monomial, ta.coeff * tb.coeff);
    }
  }
  return std::move(out).build();
}

Polynomial truncate(const Polynomial& p, const VarSet& graded, std::uint32_t max_grade) {
  if (max_grade == kUnbounded) return p;
  PolynomialBuilder out(p.registry());
  for (const auto& t : p.terms())
    if (grade_of(t.monomial, graded) <= max_grade) out.add(t.monomial, t.coeff);
  return std::move(out).build();
}

// Replace one variable, using cached truncated powers of its image.
Polynomial substitute_one(const Polynomial& p, Variable v, const Polynomial& image,
                          const VarSet& graded, std::uint32_t max_grade) {
  VarSet registry;
  for (auto x : p.registry())
    if (x != v) registry.push_back(x);
  registry = varset_union(registry, image.registry());

  std::vector<Polynomial> powers{Polynomial(1)};
  auto power = [&](std::uint32_t e) -> const Polynomial& {
    while (powers.size() <= e)
      powers.push_back(truncated_product(powers.back(), image, graded, max_grade));
    return powers[e];
  };

  PolynomialBuilder out(registry);
  for (const auto& t : p.terms()) {
    const auto e = t.monomial.exponent(v);
    if (e == 0) {
      out.add(t.monomial, t.coeff);
      continue;
    }
    Monomial rest = t.monomial.without(v);
    const auto rest_grade = grade_of(rest, graded);
    if (max_grade != kUnbounded && rest_grade > max_grade) continue;
    for (const auto& u : power(e).terms()) {
      if (max_grade != kUnbounded && rest_grade + grade_of(u.monomial, graded) > max_grade)
        continue;
      out.add(u.monomial * rest, u.coeff * t.coeff);
    }
  }
  return std::move(out).build();
}

bool images_reference_sources(const Substitution& map) {
  for (const auto& [v, image] : map)
    for (auto x : image.registry())
      if (x != v && map.count(x)) return true;
  return false;
}

Polynomial substitute_impl(const Polynomial& p, const Substitution& map, const VarSet& graded,
                           std::uint32_t max_grade) {
  for (const auto& [v, image] : map) {
    (void)image;
    if (varset_contains(graded, v))
      throw PreconditionError("substitute: graded variables cannot be substituted");
  }
  // Sequential replacement equals simultaneous replacement unless an image
  // mentions another source; in that case route through temporaries.
  Polynomial current = truncate(p, graded, max_grade);
  if (images_reference_sources(map)) {
    Renaming to_temp;
    Substitution staged;
    std::uint32_t next = kTempBase;
    for (const auto& [v, image] : map) {
      auto tmp = Variable::scratch(next++);
      to_temp.emplace(v, tmp);
      staged.emplace(tmp, image);
    }
    current = rename(current, to_temp);
    for (const auto& [v, image] : staged)
      current = substitute_one(current, v, image, graded, max_grade);
    return current;
  }
  for (const auto& [v, image] : map) current = substitute_one(current, v, image, graded, max_grade);
  return current;
}

} // namespace

Polynomial rename(const Polynomial& p, const Renaming& map) {
  std::vector<Variable> registry;
  for (auto v : p.registry()) {
    auto it = map.find(v);
    registry.push_back(it == map.end() ? v : it->second);
  }
  PolynomialBuilder out(make_varset(std::move(registry)));
  for (const auto& t : p.terms()) {
    std::vector<Monomial::Entry> entries;
    entries.reserve(t.monomial.entries().size());
    for (const auto& [v, e] : t.monomial.entries()) {
      auto it = map.find(v);
      entries.emplace_back(it == map.end() ? v : it->second, e);
    }
    out.add(Monomial(std::move(entries)), t.coeff);
  }
  return std::move(out).build();
}

Polynomial substitute(const Polynomial& p, const Substitution& map) {
  return substitute_impl(p, map, {}, kUnbounded);
}

Polynomial substitute_affine(const Polynomial& p, const Substitution& map) {
  for (const auto& [v, image] : map) {
    for (const auto& t : image.terms())
      if (t.monomial.total_degree() > 1)
        throw PreconditionError("substitute_affine: image of " + v.name() + " is not affine");
  }
  return substitute(p, map);
}

Polynomial substitute_truncated(const Polynomial& p, const Substitution& map, const VarSet& graded,
                                std::uint32_t max_grade) {
  return substitute_impl(p, map, graded, max_grade);
}

std::optional<GradedPart> lowest_graded_part(const Polynomial& p, const Substitution& map,
                                             const VarSet& graded, std::uint32_t hint) {
  if (p.is_zero()) return std::nullopt;
  // Largest grade any term could reach.
  std::uint32_t ceiling = 0;
  for (const auto& t : p.terms()) {
    std::uint32_t g = 0;
    for (const auto& [v, e] : t.monomial.entries()) {
      auto it = map.find(v);
      if (it == map.end()) {
        if (varset_contains(graded, v)) g += e;
        continue;
      }
      std::uint32_t top = 0;
      for (const auto& u : it->second.terms()) top = std::max(top, grade_of(u.monomial, graded));
      g += e * top;
    }
    ceiling = std::max(ceiling, g);
  }

  std::uint32_t bound = std::min(hint, ceiling);
  for (;;) {
    Polynomial expanded = substitute_truncated(p, map, graded, bound);
    if (!expanded.is_zero()) {
      std::uint32_t lowest = kUnbounded;
      for (const auto& t : expanded.terms()) lowest = std::min(lowest, grade_of(t.monomial, graded));
      PolynomialBuilder part(expanded.registry());
      for (const auto& t : expanded.terms())
        if (grade_of(t.monomial, graded) == lowest) part.add(t.monomial, t.coeff);
      return GradedPart{lowest, std::move(part).build()};
    }
    if (bound >= ceiling) return std::nullopt;
    bound = std::min(ceiling, 2 * bound + 1);
  }
}

} // namespace poz
