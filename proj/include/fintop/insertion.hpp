#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fintop/classify.hpp"
#include "fintop/cutsets.hpp"

namespace fintop {

/// Exact mode works on the gaps of the plain value grid and adds the
/// self-constraint C rel C at every step; for a relation with the
/// kernel/vee soundness property that forces each chain set clopen, which in
/// turn restores exact bounds lower <= h <= upper and closed fibers on a
/// finite grid. Literal mode follows the strict inequalities of the chain
/// conditions verbatim on a refined grid (values, midpoints, and one
/// sentinel beyond each end); its h can overshoot by at most one grid step
/// and its fibers carry no guarantee. Both are reported, not repaired.
enum class InsertionMode { Exact, Literal };

std::string to_string(InsertionMode m);

/// Hypothesis packages. Raw applies no gate and uses the caller's relation.
/// The others pin the relation and require the classifier gates below, with
/// lower <= upper always required:
///   Cor1, Cor3: lower uscc, upper lscc; kernel-vee relation.
///   Cor2, Cor4: lower lscc, upper uscc; closed-interpolant relation.
/// (Cor3/Cor4 state their gates through the Baire-one flags, which collapse
/// to the semi-contra flags on finite carriers.)
enum class Preset { Raw, Cor1, Cor2, Cor3, Cor4 };

std::string to_string(Preset p);
std::optional<Preset> preset_from_string(const std::string& s);

/// The relation kind a preset mandates; empty for Raw.
std::optional<RelationKind> preset_relation(Preset p);

/// Empty if the gates hold; otherwise a human-readable description of the
/// violated gate.
std::optional<std::string> preset_gate_violation(Preset p, const Topology& t,
                                                 const FiniteFunction& lower,
                                                 const FiniteFunction& upper);

/// One step of the chain construction: everything the witness search at this
/// gap was required to satisfy, and what it chose.
struct ChainStep {
    int gap = 0;
    std::vector<PointSet> lower_constraints; // each L must satisfy L rel C
    std::vector<PointSet> upper_constraints; // C must satisfy C rel U for each U
    bool self_required = false;              // exact mode: C rel C
    PointSet chosen;
};

/// A monotone chain H_0 <= ... <= H_K over the gaps of a level grid,
/// H_0 empty and H_K the full carrier, together with per-gap witness
/// provenance.
struct InterpolationChain {
    std::vector<Rational> levels;
    std::vector<PointSet> sets; // one per gap, levels.size() + 1 entries
    std::vector<ChainStep> steps;
};

/// No candidate satisfied a step's constraints; carries the complete
/// constraint families so the failure re-checks independently.
struct NoWitnessCert {
    int gap = 0;
    std::vector<PointSet> lower_constraints;
    std::vector<PointSet> upper_constraints;
    bool self_required = false;
};

struct InterpolateResult {
    std::optional<InterpolationChain> chain;
    std::optional<NoWitnessCert> failure;
};

/// Builds the chain over the shared level grid of the two families,
/// ascending through the gaps; at each gap the witness search scans subsets
/// in ascending mask order and keeps the first valid candidate.
/// Step-i constraints, with F the upper function's family and G the lower's:
///   Exact:   F_j rel C (j <= i), H_j rel C (j < i), C rel G_j (j >= i), C rel C
///   Literal: F_j rel C (j < i),  H_j rel C (j < i), C rel G_j (j > i)
InterpolateResult interpolate(const CutSetFamily& upper_sets, const CutSetFamily& lower_sets,
                              const BinaryRelation& rel, const Topology& t, InsertionMode mode);

/// Reads the inserted function off the chain: h(x) is the left endpoint of
/// the first gap whose set contains x. Throws PreconditionError on a
/// malformed chain (last set not the full carrier).
FiniteFunction extract(const InterpolationChain& chain);

/// Re-derives every chain obligation from scratch: gap count, monotonicity,
/// empty start, full end, and all pairwise chain relations for the mode.
/// Returns a description of the first violation, or empty if the chain is
/// sound. Used by tests and by independent re-checks of engine output.
std::optional<std::string> validate_chain(const InterpolationChain& chain,
                                          const CutSetFamily& upper_sets,
                                          const CutSetFamily& lower_sets,
                                          const BinaryRelation& rel, const Topology& t,
                                          InsertionMode mode);

enum class InsertStatus { Success, PremiseFailure, NoWitness };

std::string to_string(InsertStatus s);

struct PremiseFailureCert {
    int i = 0, j = 0;
    PointSet upper_set, lower_set;
};

/// Result of one insertion run. ok() is the verification verdict:
/// bounds and fibers always count; the interval identity counts in exact
/// mode and is recorded only in literal mode.
struct InsertionReport {
    InsertionMode mode = InsertionMode::Exact;
    CutsetPolicy policy = CutsetPolicy::Strict;
    RelationKind relation = RelationKind::KernelSubVee;
    InsertStatus status = InsertStatus::Success;

    std::optional<FiniteFunction> h;
    std::optional<InterpolationChain> chain;

    bool bounds_ok = false;   // exact: lower <= h <= upper pointwise;
                              // literal: within one grid step, per point
    bool bounds_exact = false; // lower <= h <= upper held with no slack
    bool contra_ok = false;   // every fiber of h closed
    bool identity_ok = false; // h^{-1}((v_a, v_b)) == vee(H_{b-1}) - kernel(H_a)
                              // at all level pairs a < b

    /// Worst overshoot above upper and undershoot below lower (0 when none).
    Rational max_overshoot = Rational(0);
    Rational max_undershoot = Rational(0);

    std::optional<PremiseFailureCert> premise_failure;
    std::optional<NoWitnessCert> no_witness;

    bool ok() const {
        return status == InsertStatus::Success && bounds_ok && contra_ok &&
               (mode == InsertionMode::Literal || identity_ok);
    }
};

/// Verification pass over a finished chain and its extracted function.
InsertionReport verify(const Topology& t, const FiniteFunction& lower,
                       const FiniteFunction& upper, const InterpolationChain& chain,
                       const FiniteFunction& h, InsertionMode mode);

/// Level grid used by literal mode: both functions' values, the midpoint of
/// each adjacent value pair, and one sentinel beyond each end.
std::vector<Rational> literal_grid(const FiniteFunction& lower, const FiniteFunction& upper);

/// End-to-end run: gates, levels, cut sets, premise, chain, extraction,
/// verification. The relation kind is the preset's when one is selected.
/// Throws PreconditionError on carrier mismatches, unordered functions, or
/// gate violations; premise and witness failures come back in the report.
InsertionReport insert(const Topology& t, const FiniteFunction& lower,
                       const FiniteFunction& upper, RelationKind relation, CutsetPolicy policy,
                       InsertionMode mode, Preset preset = Preset::Raw);

} // namespace fintop
