#include "poz/polynomial.hpp"

#include <algorithm>

#include "poz/errors.hpp"

namespace poz {

VarSet make_varset(std::vector<Variable> vars) {
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

VarSet varset_union(const VarSet& a, const VarSet& b) {
  VarSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool varset_contains(const VarSet& set, Variable v) {
  return std::binary_search(set.begin(), set.end(), v);
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (const auto& [v, e] : entries) {
    if (e == 0) continue;
    if (!entries_.empty() && entries_.back().first == v)
      entries_.back().second += e;
    else
      entries_.emplace_back(v, e);
  }
}

Monomial Monomial::of(Variable v, std::uint32_t exponent) {
  if (exponent == 0) return {};
  return Monomial(Sorted{}, {{v, exponent}});
}

std::uint32_t Monomial::exponent(Variable v) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                             [](const Entry& e, Variable x) { return e.first < x; });
  return (it != entries_.end() && it->first == v) ? it->second : 0;
}

std::uint32_t Monomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& e : entries_) d += e.second;
  return d;
}

std::uint32_t Monomial::degree_in(const VarSet& vars) const {
  std::uint32_t d = 0;
  auto it = vars.begin();
  for (const auto& [v, e] : entries_) {
    while (it != vars.end() && *it < v) ++it;
    if (it == vars.end()) break;
    if (*it == v) d += e;
  }
  return d;
}

std::pair<Monomial, Monomial> Monomial::split(const VarSet& vars) const {
  std::vector<Entry> in, out;
  for (const auto& entry : entries_) {
    if (varset_contains(vars, entry.first))
      in.push_back(entry);
    else
      out.push_back(entry);
  }
  return {Monomial(Sorted{}, std::move(in)), Monomial(Sorted{}, std::move(out))};
}

Monomial Monomial::without(Variable v) const {
  std::vector<Entry> out;
  out.reserve(entries_.size());
  for (const auto& entry : entries_)
    if (entry.first != v) out.push_back(entry);
  return Monomial(Sorted{}, std::move(out));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Entry> out;
  out.reserve(a.entries_.size() + b.entries_.size());
  auto i = a.entries_.begin(), j = b.entries_.begin();
  while (i != a.entries_.end() && j != b.entries_.end()) {
    if (i->first == j->first) {
      out.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    } else if (i->first < j->first) {
      out.push_back(*i++);
    } else {
      out.push_back(*j++);
    }
  }
  out.insert(out.end(), i, a.entries_.end());
  out.insert(out.end(), j, b.entries_.end());
  return Monomial(Monomial::Sorted{}, std::move(out));
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& [v, e] : entries_) {
    h ^= v.key() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  const auto da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  auto ea = a.entries(), eb = b.entries();
  std::size_t i = 0, j = 0;
  while (i < ea.size() && j < eb.size()) {
    if (ea[i].first == eb[j].first) {
      if (ea[i].second != eb[j].second) return ea[i].second < eb[j].second;
      ++i;
      ++j;
    } else {
      // The monomial holding the earlier variable is the larger one.
      return eb[j].first < ea[i].first;
    }
  }
  return i == ea.size() && j < eb.size();
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(long c) : Polynomial(Rational(c)) {}

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

Polynomial Polynomial::variable(Variable v) { return monomial(Monomial::of(v), 1); }

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  PolynomialBuilder b;
  b.add(m, c);
  return std::move(b).build();
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

const Term& Polynomial::leading() const {
  if (terms_.empty()) throw ZeroPolynomialError("leading");
  return terms_.front();
}

Rational Polynomial::coefficient(const Monomial& m) const {
  // Terms are sorted descending, so binary search with the reversed order.
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& x) {
    return grlex_less(x, t.monomial);
  });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
  return 0;
}

Polynomial Polynomial::with_registry(const VarSet& extra) const {
  Polynomial out = *this;
  out.registry_ = varset_union(registry_, extra);
  return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial out;
  out.registry_ = registry_;
  if (c == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.monomial, t.coeff * c});
  return out;
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  PolynomialBuilder builder(varset_union(a.registry_, b.registry_));
  builder.add(a);
  builder.add(b);
  return std::move(builder).build();
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  PolynomialBuilder builder(varset_union(a.registry_, b.registry_));
  builder.add(a);
  builder.add_scaled(b, -1, Monomial{});
  return std::move(builder).build();
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  PolynomialBuilder builder(varset_union(a.registry_, b.registry_));
  const Polynomial& outer = a.size() <= b.size() ? a : b;
  const Polynomial& inner = a.size() <= b.size() ? b : a;
  for (const auto& t : outer.terms_) builder.add_scaled(inner, t.coeff, t.monomial);
  return std::move(builder).build();
}

Polynomial pow(const Polynomial& p, unsigned exponent) {
  Polynomial result = Polynomial(1).with_registry(p.registry());
  Polynomial base = p;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------------------
// PolynomialBuilder

void PolynomialBuilder::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = acc_.try_emplace(m, c);
  if (!inserted) it->second += c;
}

void PolynomialBuilder::add(Monomial&& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = acc_.try_emplace(std::move(m), c);
  if (!inserted) it->second += c;
}

void PolynomialBuilder::add(const Polynomial& p) {
  declare(p.registry());
  for (const auto& t : p.terms()) add(t.monomial, t.coeff);
}

void PolynomialBuilder::add_scaled(const Polynomial& p, const Rational& c, const Monomial& shift) {
  declare(p.registry());
  if (c == 0) return;
  for (const auto& t : p.terms()) add(t.monomial * shift, t.coeff * c);
}

Polynomial PolynomialBuilder::build() && {
  struct Keyed {
    std::uint32_t degree;
    Term term;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(acc_.size());
  std::vector<Variable> seen;
  for (auto& [m, c] : acc_) {
    if (c == 0) continue;
    for (const auto& e : m.entries())
      if (seen.empty() || seen.back() != e.first) seen.push_back(e.first);
    keyed.push_back({m.total_degree(), {m, std::move(c)}});
  }
  acc_.clear();
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& x, const Keyed& y) {
    return x.degree != y.degree ? x.degree > y.degree : grlex_less(y.term.monomial, x.term.monomial);
  });
  Polynomial out;
  out.terms_.reserve(keyed.size());
  for (auto& k : keyed) out.terms_.push_back(std::move(k.term));
  out.registry_ = varset_union(registry_, make_varset(std::move(seen)));
  return out;
}

} // namespace poz
