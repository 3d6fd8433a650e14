#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "poz/variable.hpp"

namespace poz {

using Rational = mpq_class;
using Integer = mpz_class;

/// num/den in canonical form; the two-argument mpq_class constructor does
/// not canonicalize.
inline Rational ratio(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Sorted, duplicate-free variable list. Sorting follows the canonical
/// variable order.
using VarSet = std::vector<Variable>;

VarSet make_varset(std::vector<Variable> vars);
VarSet varset_union(const VarSet& a, const VarSet& b);
bool varset_contains(const VarSet& set, Variable v);

/// Sparse power product. Entries are sorted by variable order and never hold
/// a zero exponent.
class Monomial {
public:
  using Entry = std::pair<Variable, std::uint32_t>;

  Monomial() = default;
  /// Accepts entries in any order; merges repeats and drops zero exponents.
  explicit Monomial(std::vector<Entry> entries);
  Monomial(std::initializer_list<Entry> entries) : Monomial(std::vector<Entry>(entries)) {}
  static Monomial of(Variable v, std::uint32_t exponent = 1);

  std::span<const Entry> entries() const { return entries_; }
  bool is_one() const { return entries_.empty(); }
  std::uint32_t exponent(Variable v) const;
  std::uint32_t total_degree() const;
  std::uint32_t degree_in(const VarSet& vars) const;

  /// Split into (part over `vars`, remaining part).
  std::pair<Monomial, Monomial> split(const VarSet& vars) const;
  Monomial without(Variable v) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::size_t hash() const;

private:
  struct Sorted {};
  Monomial(Sorted, std::vector<Entry> entries) : entries_(std::move(entries)) {}
  std::vector<Entry> entries_;
};

/// Graded lexicographic comparison: true when a < b.
bool grlex_less(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

struct Term {
  Monomial monomial;
  Rational coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Exact sparse multivariate polynomial with rational coefficients.
///
/// Values are immutable once built. Terms are kept in descending grlex order
/// so the first term is the leading term; the zero polynomial has no terms.
/// The registry lists every variable the polynomial is declared over, which
/// may include variables that do not occur in any term.
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(long c);
  Polynomial(const Rational& c);

  static Polynomial variable(Variable v);
  static Polynomial monomial(const Monomial& m, const Rational& c = 1);

  const VarSet& registry() const { return registry_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const Term& leading() const;
  /// Coefficient of `m`, zero when absent.
  Rational coefficient(const Monomial& m) const;
  /// Constant term.
  Rational constant_term() const;

  Polynomial with_registry(const VarSet& extra) const;
  Polynomial scaled(const Rational& c) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// Term sets are compared; registries are not.
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

private:
  friend class PolynomialBuilder;
  VarSet registry_;
  std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& p, unsigned exponent);

/// Accumulates terms in a hash table and emits a canonical Polynomial.
class PolynomialBuilder {
public:
  PolynomialBuilder() = default;
  explicit PolynomialBuilder(VarSet registry) : registry_(std::move(registry)) {}

  void add(const Monomial& m, const Rational& c);
  void add(Monomial&& m, const Rational& c);
  void add(const Polynomial& p);
  void add_scaled(const Polynomial& p, const Rational& c, const Monomial& shift);
  void declare(const VarSet& vars) { registry_ = varset_union(registry_, vars); }
  bool empty() const { return acc_.empty(); }
  std::size_t size() const { return acc_.size(); }

  Polynomial build() &&;

private:
  VarSet registry_;
  std::unordered_map<Monomial, Rational, MonomialHash> acc_;
};

} // namespace poz
