#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "poz/fusion.hpp"
#include "poz/polynomial.hpp"
#include "poz/report.hpp"

namespace poz {

/// (n/m; S_1..S_n). Values past n come from the extension rule and are never
/// stored.
struct PatternOfZeros {
  std::uint32_t n = 1;
  std::uint32_t m = 1;
  std::vector<std::int64_t> S;

  /// S_a for any a >= 0, with S_0 = 0.
  std::int64_t value(std::uint32_t a) const;
  friend bool operator==(const PatternOfZeros&, const PatternOfZeros&) = default;
};

/// Throws PreconditionError unless n, m >= 1 and S has n entries.
void validate_pattern(const PatternOfZeros& pat);

/// S_{a+kn} = S_a + kma + kS_n + mnk(k-1)/2, for 1 <= a <= n.
std::int64_t extend_pattern(const PatternOfZeros& pat, std::uint32_t a, std::uint32_t k);

/// S_{a+b} - S_a - S_b.
std::int64_t d_from_pattern(const PatternOfZeros& pat, std::uint32_t a, std::uint32_t b);

/// D_{a,b} for 1 <= a, b <= bound, row-major, index [a-1][b-1].
std::vector<std::vector<std::int64_t>> d_table(const PatternOfZeros& pat, std::uint32_t bound);

/// S_1..S_{a_max} of a symmetric polynomial in unit-weight variables, each
/// read off the first a variables and cross-checked on other subsets.
std::vector<std::int64_t> pattern_from_polynomial(const Polynomial& p, std::uint32_t a_max);

/// Derived polynomials of a unit-weight polynomial obtained by fusing its
/// leading variables in consecutive blocks, cached. head(a) fuses z_1..z_a
/// into z^(a); pair(a, b) then fuses the next b variables into z^(b).
/// Throws InseparableError when a fusion has no derived polynomial.
class ConsecutiveFusions {
public:
  explicit ConsecutiveFusions(Polynomial p);

  std::uint32_t size() const { return static_cast<std::uint32_t>(vars_.size()); }
  const Polynomial& polynomial() const { return p_; }

  const Polynomial& head(std::uint32_t a);
  Variable head_variable(std::uint32_t a) const;
  const Polynomial& pair(std::uint32_t a, std::uint32_t b);
  Variable second_variable(std::uint32_t a, std::uint32_t b) const;
  /// linear_form_order(pair(a, b), head_variable(a), second_variable(a, b)).
  std::uint32_t d(std::uint32_t a, std::uint32_t b);

private:
  Polynomial p_;
  std::vector<Variable> vars_;
  bool invariant_;
  std::map<std::uint32_t, Polynomial> heads_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, Polynomial> pairs_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> orders_;
};

/// Order of (z^(a) - z^(b)) after fusing the first a unit variables into
/// z^(a) and the next b into z^(b). With budget > 0 the input is first run
/// through the sUFC checker and rejected if it fails.
std::uint32_t d_from_polynomial(const Polynomial& p, std::uint32_t a, std::uint32_t b,
                                std::size_t budget = 0);

/// Conditions (a)-(g) on indices up to a_max. `observed` holds measured
/// S_1..S_k for the extension check (g); without it (g) is vacuous.
AnalysisReport check_conditions(const PatternOfZeros& pat, std::uint32_t a_max,
                                const std::optional<std::vector<std::int64_t>>& observed = {});

/// Every (n/m; 0, S_2..S_n) with S_a <= cap satisfying all of (a)-(g) up to
/// index 3n, in lexicographic order of S.
std::vector<PatternOfZeros> enumerate_patterns(std::uint32_t n, std::uint32_t m, std::int64_t cap);

/// Consistency of D_{a,b} across every derived polynomial reachable by
/// fusion. Budget caps the number of fusions, as for check_sUFC.
AnalysisReport check_ULC(const Polynomial& p, std::size_t budget = 20000);

/// Appends the consistent_orders verdict for an explored atlas.
void add_ulc_verdict(AnalysisReport& report, const FusionAtlas& atlas);

} // namespace poz
