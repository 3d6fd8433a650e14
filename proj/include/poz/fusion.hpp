#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "poz/polynomial.hpp"
#include "poz/report.hpp"

namespace poz {

/// Fusion of the ordered inputs (weights b_1..b_a) into one center-of-mass
/// variable of weight b_1 + ... + b_a.
struct FusionSpec {
  std::vector<Variable> inputs;
  Variable output;

  /// "(z[1],z[2])->z[2,1]"
  std::string describe() const;
  friend bool operator==(const FusionSpec&, const FusionSpec&) = default;
};

/// Throws PreconditionError unless the specs are valid, pairwise disjoint
/// fusions of variables of p.
void validate_fusions(const Polynomial& p, std::span<const FusionSpec> specs);

/// Lowest-order coefficient of the fusion expansion.
///
/// Each input v_i is replaced by Z + xi_i, with the last offset eliminated
/// through sum_i b_i xi_i = 0. Grading by total degree in the offsets plays
/// the role of the expansion parameter: the degree-m component is the
/// coefficient of its m-th power.
struct PrederivedResult {
  std::uint32_t s = 0;
  Polynomial qs;
  /// Offset variables introduced, in group order.
  VarSet offsets;
  std::vector<FusionSpec> specs;
};

struct DerivedResult {
  /// Offset-only factor, homogeneous of degree s.
  Polynomial r;
  /// Primitive-normalized factor in the outputs and untouched variables.
  Polynomial pder;
};

/// `translation_invariant` passes on known invariance of p under translating
/// every registry variable; when absent it is tested. Derived polynomials of
/// an invariant polynomial are invariant.
PrederivedResult prederive(const Polynomial& p, const FusionSpec& spec,
                           std::optional<bool> translation_invariant = {});

/// Simultaneous fusion, graded by the total offset degree across groups.
PrederivedResult prederive_multi(const Polynomial& p, std::span<const FusionSpec> specs,
                                 std::optional<bool> translation_invariant = {});

/// Splits Q^s as R(xi) * Pder, or nullopt when no such factorization exists.
std::optional<DerivedResult> separate(const PrederivedResult& pre);

std::optional<DerivedResult> derive(const Polynomial& p, const FusionSpec& spec,
                                    std::optional<bool> translation_invariant = {});
std::optional<DerivedResult> multi_derive(const Polynomial& p, std::span<const FusionSpec> specs,
                                          std::optional<bool> translation_invariant = {});

/// One step of a process: a single fusion or a group of simultaneous ones.
using FusionStep = std::vector<FusionSpec>;

struct FusionProcess {
  std::vector<FusionStep> steps;
  std::string describe() const;
};

struct StepTrace {
  std::uint32_t s;
  Polynomial pder;
};

/// Runs the process, taking the derived polynomial at each step. Throws
/// InseparableError with the failing step index.
std::vector<StepTrace> run_process_traced(const Polynomial& p, const FusionProcess& process);
Polynomial run_process(const Polynomial& p, const FusionProcess& process);

/// Compares the fused inequality s <= S, the equality criterion, and the
/// translation-invariant equality case.
AnalysisReport check_thm31(const Polynomial& p, const FusionSpec& spec);

// ---------------------------------------------------------------------------
// Exhaustive enumeration of fusion processes.

struct UfcOptions {
  /// Maximum number of fusion computations.
  std::size_t budget = 20000;
  /// Also allow steps made of simultaneous fusions.
  bool multi = false;
  /// Restrict to final configurations with these weights (any order).
  std::optional<std::vector<std::uint32_t>> final_config;
};

/// A set of original variables fused into one, recorded by their weights in
/// descending order.
using Block = std::vector<std::uint32_t>;

struct AtlasEntry {
  /// Primitive-normalized derived polynomial in the state's variable names.
  Polynomial poly;
  std::vector<std::string> route;
};

/// Configuration reached by some fusion process, up to relabeling of
/// same-weight original variables. Blocks are named z[w, j] with j counting
/// blocks of weight w in canonical block order.
struct AtlasState {
  std::vector<Block> blocks;
  std::vector<Variable> names;
  /// Distinct (up to scalar) derived polynomials reached; a second entry is a
  /// unique-fusion violation.
  std::vector<AtlasEntry> entries;
};

struct FusionAtlas {
  std::vector<AtlasState> states;
  std::size_t fusions = 0;
  bool complete = true;
  /// Set when some fusion had no derived polynomial.
  std::optional<std::string> inseparable_route;
};

/// Explores every process from the symmetric polynomial p, merging states
/// related by a permutation of same-weight variables.
FusionAtlas explore_fusions(const Polynomial& p, const UfcOptions& options);

/// Unique fusion condition: every enumerated process reaching a final
/// configuration yields the same derived polynomial up to scalar.
AnalysisReport check_sUFC(const Polynomial& p, const UfcOptions& options = {});

/// Appends the separable and unique_fusion verdicts of an explored atlas.
void add_ufc_verdicts(AnalysisReport& report, const FusionAtlas& atlas, const UfcOptions& options);

/// Weight multiset of a block list, descending.
std::vector<std::uint32_t> block_weights(const std::vector<Block>& blocks);

// ---------------------------------------------------------------------------

/// Called after every prederivation with (input, specs, s). Returns the
/// previous observer. Thread-local.
using FusionObserver =
    std::function<void(const Polynomial&, std::span<const FusionSpec>, std::uint32_t)>;
FusionObserver set_fusion_observer(FusionObserver observer);

} // namespace poz
