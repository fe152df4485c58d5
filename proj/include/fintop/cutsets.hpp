#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fintop/finite_function.hpp"
#include "fintop/relations.hpp"

namespace fintop {

/// How a cut-set family evaluates exactly at one of its levels: Strict takes
/// {f < t}, Weak takes {f <= t}. Between levels (and the chain engine only
/// ever consumes between-level gap values) the two coincide, so the policy is
/// visible only to at().
enum class CutsetPolicy { Strict, Weak };

std::string to_string(CutsetPolicy p);

/// The lower indefinite cut sets of a function over a fixed level grid
/// v_1 < ... < v_K: a monotone family A(t) with {f < t} <= A(t) <= {f <= t}
/// for every rational t. Stored gap-indexed: gap i is the open interval
/// (v_i, v_{i+1}) with v_0 = -inf and v_{K+1} = +inf, on which A is the
/// constant set {f <= v_i} (empty for gap 0, the carrier for gap K).
/// The grid must contain every value of the function, or gap constancy
/// would fail inside a gap.
class CutSetFamily {
public:
    const FiniteFunction& function() const { return fn_; }
    CutsetPolicy policy() const { return policy_; }
    const std::vector<Rational>& levels() const { return levels_; }

    /// Number of gaps, i.e. levels().size() + 1.
    int gap_count() const { return static_cast<int>(gaps_.size()); }
    const PointSet& gap(int i) const;

    /// A(t) at an arbitrary rational: the gap value between levels, the
    /// policy-chosen set exactly at a level.
    PointSet at(const Rational& t) const;

private:
    CutSetFamily(FiniteFunction fn, CutsetPolicy policy, std::vector<Rational> levels,
                 std::vector<PointSet> gaps)
        : fn_(std::move(fn)), policy_(policy), levels_(std::move(levels)), gaps_(std::move(gaps)) {}

    FiniteFunction fn_;
    CutsetPolicy policy_;
    std::vector<Rational> levels_;
    std::vector<PointSet> gaps_;

    friend CutSetFamily make_cutsets(const Topology&, const FiniteFunction&, CutsetPolicy,
                                     const std::vector<Rational>&);
};

/// Builds the cut-set family of f over the given level grid (strictly
/// ascending, containing every value of f). The topology argument pins the
/// carrier. Throws PreconditionError on any mismatch.
CutSetFamily make_cutsets(const Topology& t, const FiniteFunction& f, CutsetPolicy policy,
                          const std::vector<Rational>& levels);

struct PremiseCheck {
    bool passed = false;
    /// Present iff failed: the first gap pair (i <= j) with
    /// not (F_i rel G_j), plus the two sets for independent re-checking.
    std::optional<std::pair<int, int>> failing_gaps;
    std::optional<std::pair<PointSet, PointSet>> failing_sets;
};

/// Verifies F_i rel G_j for all gap indices 0 <= i <= j <= K, where F is the
/// upper function's family and G the lower's. The diagonal is included: the
/// premise quantifies over all rational t1 < t2, and both may fall in the
/// same gap, where the families are constant. Preconditions: both families
/// share the level grid, carriers match, and lower <= upper pointwise.
PremiseCheck check_premise(const CutSetFamily& upper_sets, const CutSetFamily& lower_sets,
                           const BinaryRelation& rel, const Topology& t);

} // namespace fintop
