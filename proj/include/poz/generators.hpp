#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "poz/polynomial.hpp"
#include "poz/report.hpp"

namespace poz {

/// prod_{i<j} (z_i - z_j)^m over z[1]..z[N].
Polynomial laughlin(std::uint32_t N, std::uint32_t m);

/// Product of the six images of p under permutations of its three
/// unit-weight variables.
Polynomial symm_product(const Polynomial& p);

/// (x - c)(y - c)(z - c) with c the mean of x = z[1], y = z[2], z = z[3].
Polynomial cubic_counterexample();

/// sum_{k<l} prod_{i<j, (i,j) != (k,l)} (z_i - z_j)^2 on four variables.
Polynomial ulc_counterexample();

/// y^3 + x^2 with y = z[3] - (z[1] + z[2])/2 and x = z[1] - z[2].
Polynomial nonhomog_counterexample();

/// Symmetrization over S_N of a random combination of products of pairwise
/// differences, total degree between 1 and degree_cap. Never zero.
Polynomial random_ti_symmetric(std::uint32_t N, std::uint32_t degree_cap, std::mt19937_64& rng);
Polynomial random_ti_symmetric(std::uint32_t N, std::uint32_t degree_cap, std::uint64_t seed);

/// Random nonzero polynomial over the given variables with up to max_terms
/// terms, exponents up to max_exponent and small integer coefficients.
Polynomial random_polynomial(const std::vector<Variable>& vars, std::uint32_t max_terms,
                             std::uint32_t max_exponent, std::mt19937_64& rng);

/// Symmetrization over all permutations of same-weight variables.
Polynomial symmetrize(const Polynomial& p);

struct FamilySpec {
  std::string kind;
  std::uint32_t N = 0;
  std::uint32_t m = 0;
  std::uint32_t degree_cap = 0;
  std::uint64_t seed = 0;
};

/// laughlin, symm_product, counterexample_f, counterexample_ulc,
/// counterexample_nonhomog, random_ti_symmetric.
const std::vector<std::string>& family_kinds();

/// Throws PreconditionError on unknown kinds or invalid parameters.
Polynomial generate(const FamilySpec& spec);

FamilySpec family_from_json(const Json& j);
Json family_to_json(const FamilySpec& spec);

} // namespace poz
