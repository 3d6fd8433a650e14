#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "poz/pattern.hpp"
#include "poz/polynomial.hpp"
#include "poz/report.hpp"

namespace poz {

/// Angular-momentum data of a symmetric translation-invariant polynomial in
/// N unit-weight variables. Vectors are indexed by a - 1.
struct MomentumReport {
  std::uint32_t N = 0;
  std::uint32_t twoJ = 0;
  Rational J;
  std::vector<std::int64_t> S;
  /// J_a = aJ - S_a.
  std::vector<Rational> J_a;
  /// Highest degree of z^(a) in P_der(z^(a), z_{a+1}, ..., z_N); d_1 = 2J and
  /// d_N = 0.
  std::vector<std::uint32_t> d;
  Rational J_N;
  bool AMS = false;
};

/// Shared state for the momentum checks: the input, its momentum data, the
/// cached fusion ladder and the precondition verdicts (symmetric, TI,
/// homogeneous, sUFC and ULC within the budget).
class MomentumContext {
public:
  MomentumContext(const Polynomial& p, std::size_t budget);

  const Polynomial& polynomial() const { return fusions_.polynomial(); }
  const MomentumReport& momentum() const { return momentum_; }
  ConsecutiveFusions& fusions() { return fusions_; }
  /// Checks named symmetric, translation_invariant, homogeneous, sUFC, ULC.
  const AnalysisReport& preconditions() const { return preconditions_; }
  std::uint32_t N() const { return momentum_.N; }

private:
  ConsecutiveFusions fusions_;
  MomentumReport momentum_;
  AnalysisReport preconditions_;
};

/// Throws PreconditionError unless p is symmetric and translation invariant
/// with unit weights.
MomentumReport momentum_report(const Polynomial& p);
MomentumReport momentum_report(ConsecutiveFusions& fusions);
Json to_json(const MomentumReport& report);

/// 2J_a >= d_a for 2 <= a < N.
AnalysisReport check_thm61(MomentumContext& ctx);
AnalysisReport check_thm61(const Polynomial& p, std::size_t budget = 20000);

/// J_N == 0.
AnalysisReport check_AMS(MomentumContext& ctx);
bool check_AMS(const Polynomial& p);

/// AMS, n | N with n < N, and J_n == D_{n,1}(N - n)/2.
AnalysisReport check_nAMS(MomentumContext& ctx, std::uint32_t n);
bool check_nAMS(const Polynomial& p, std::uint32_t n);

/// Consequences of AMS for every 1 <= a < N: J = S_N/N, J_a = J_{N-a} =
/// D_{N-a,a}/2, S_a = S_{N-a} - (N-2a)S_N/N, and P_der(z^(a), z^(N-a)) is a
/// power of the difference with top degree 2J_a. When `n` is given the
/// identity with S_n in place of S_N is also evaluated, as an informational
/// check.
AnalysisReport check_thm62(MomentumContext& ctx, std::optional<std::uint32_t> n = {});

/// Cluster form for (n, m): in P_der(z^(n), z_{n+1}, ..., z_N) each
/// (z^(n) - z_i) divides to order exactly m and z^(n) has top degree
/// m(N - n); plus the D-table identities nD_{a,n} = man, D_{a,b+n} =
/// D_{a,b} + am, D_{n,n} = mn and 2J = 2S_n/n + m(N/n - 1).
AnalysisReport check_nCF_member(MomentumContext& ctx, std::uint32_t n, std::uint32_t m);

/// Family-level checks on supplied members: pairwise agreement of S_a on
/// common indices, each member n-AMS, and per member 2J = 2S_N/N =
/// 2S_n/n + m(N/n - 1). Reports the ratio N/d per member and n/m.
AnalysisReport check_family(const std::vector<Polynomial>& members, std::uint32_t n, std::uint32_t m,
                            std::size_t budget = 20000);

} // namespace poz
