#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "poz/polynomial.hpp"

namespace poz {

/// Simultaneous substitution v -> image(v). Variables not in the map are kept.
using Substitution = std::map<Variable, Polynomial>;

/// Injective renaming of variables, applied simultaneously.
using Renaming = std::map<Variable, Variable>;

Polynomial rename(const Polynomial& p, const Renaming& map);

/// Exact expansion of p with every mapped variable replaced by its image.
Polynomial substitute(const Polynomial& p, const Substitution& map);

/// substitute() restricted to affine images (total degree <= 1).
Polynomial substitute_affine(const Polynomial& p, const Substitution& map);

/// Expansion of the substitution keeping only terms whose degree in `graded`
/// is at most `max_grade`. Exact on those terms: the graded degree of a
/// partial product never decreases as further variables are substituted.
Polynomial substitute_truncated(const Polynomial& p, const Substitution& map, const VarSet& graded,
                                std::uint32_t max_grade);

struct GradedPart {
  std::uint32_t grade;
  Polynomial component;
};

/// Lowest nonzero homogeneous component, with respect to the `graded`
/// variables, of the substituted polynomial. `hint` is a first truncation
/// bound; it is widened until a nonzero component appears, so the result
/// does not depend on it. Returns nullopt when the substitution is zero.
std::optional<GradedPart> lowest_graded_part(const Polynomial& p, const Substitution& map,
                                             const VarSet& graded, std::uint32_t hint);

/// Least degree in `vars` over all monomials of p.
std::uint32_t min_total_degree(const Polynomial& p, const VarSet& vars);

/// Highest exponent of v over all monomials of p.
std::uint32_t max_degree(const Polynomial& p, Variable v);

/// Largest D with (a - b)^D dividing p.
std::uint32_t linear_form_order(const Polynomial& p, Variable a, Variable b);

/// Components of p by degree in `vars`, ascending degree.
std::vector<std::pair<std::uint32_t, Polynomial>> homogeneous_components(const Polynomial& p,
                                                                       const VarSet& vars);

bool is_symmetric(const Polynomial& p);
/// Invariance under v -> v + t for every v in `vars` (default: every particle
/// in the registry).
bool is_translation_invariant(const Polynomial& p, const VarSet& vars);
bool is_translation_invariant(const Polynomial& p);
bool is_homogeneous(const Polynomial& p);

struct StructureReport {
  bool symmetric = false;
  bool translation_invariant = false;
  bool homogeneous = false;
  friend bool operator==(const StructureReport&, const StructureReport&) = default;
};

StructureReport structure_report(const Polynomial& p);

/// Scalar multiple with coprime integer coefficients and positive leading
/// coefficient.
Polynomial normalize_primitive(const Polynomial& p);

/// c with p == c * q, if any. proportional(0, 0) is 1.
std::optional<Rational> proportional(const Polynomial& p, const Polynomial& q);

/// Particle variables of the registry with the given weight, in order.
std::vector<Variable> particles_of_weight(const Polynomial& p, std::uint32_t weight);
/// Particle variables of the registry, in order.
std::vector<Variable> particles(const Polynomial& p);

/// A scratch variable absent from every listed registry.
Variable fresh_scratch(std::initializer_list<const VarSet*> registries);

} // namespace poz
