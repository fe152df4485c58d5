#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fintop/pointset.hpp"
#include "fintop/topology.hpp"

namespace fintop {

/// Carrier cap for tabulating a relation over all subset pairs.
inline constexpr int kMaxTabulatePoints = 8;
/// Carrier cap for strongness checking, which enumerates pairs of subset
/// families on top of the tabulation.
inline constexpr int kMaxStrongnessPoints = 5;

enum class RelationKind {
    /// A rel B  iff  kernel(A) is contained in vee(B).
    KernelSubVee,
    /// A rel B  iff  some closed F satisfies
    /// kernel(A) <= F <= kernel(F) <= vee(B). Decided constructively:
    /// the minimal viable F is closure(kernel(A)), so the relation holds iff
    /// kernel(closure(kernel(A))) is contained in vee(B).
    ClosedInterpolant,
    /// Membership in an explicit pair table.
    ExplicitTable,
};

std::string to_string(RelationKind k);

/// A binary relation on the power set of a fixed carrier. Named kinds are
/// evaluated on demand against a topology; explicit tables carry a dense
/// membership bitmap. Value type.
class BinaryRelation {
public:
    static BinaryRelation named(RelationKind kind);
    static BinaryRelation from_pairs(int n, const std::vector<std::pair<PointSet, PointSet>>& pairs);

    RelationKind kind() const { return kind_; }

    /// For ExplicitTable, the topology argument is only checked for carrier
    /// agreement.
    bool holds(const Topology& t, const PointSet& a, const PointSet& b) const;

private:
    BinaryRelation(RelationKind kind, int n, std::vector<bool> table)
        : kind_(kind), table_n_(n), table_(std::move(table)) {}

    RelationKind kind_;
    int table_n_; // carrier of the table; -1 for named kinds
    std::vector<bool> table_;
};

/// The derived relation: A bar(rel) B iff
///   every V with B rel V also has A rel V, and
///   every U with U rel A also has U rel B.
/// Tabulated over the full power set; requires n <= kMaxTabulatePoints.
BinaryRelation bar(const BinaryRelation& rel, const Topology& t);

/// Witness that one strongness condition fails. For condition 1 the families
/// are as found (all cross pairs related, no interpolant C); conditions 2 and
/// 3 report singleton families holding the offending pair.
struct StrongnessFailure {
    int condition = 0; // 1, 2, or 3
    std::vector<PointSet> lower_family;
    std::vector<PointSet> upper_family;
};

struct StrongnessReport {
    /// Condition 1 (bounded): whenever families {A_i} (size <= m_max) and
    /// {B_j} (size <= n_max) satisfy A_i rel B_j for all i,j, some C has
    /// A_i rel C and C rel B_j for all i,j.
    bool condition1_ok = false;
    int condition1_m_max = 0;
    int condition1_n_max = 0;
    /// Condition 2: A <= B implies A bar(rel) B.
    bool condition2_ok = false;
    /// Condition 3: A rel B implies kernel(A) <= B and A <= vee(B).
    bool condition3_ok = false;
    std::optional<StrongnessFailure> first_failure;

    bool all_ok() const { return condition1_ok && condition2_ok && condition3_ok; }
};

/// Checks the three strongness conditions, condition 1 bounded by the given
/// family sizes. Requires n <= kMaxStrongnessPoints. first_failure, when
/// present, re-checks to a failure via recheck_failure.
StrongnessReport check_strong(const BinaryRelation& rel, const Topology& t, int m_max, int n_max);

/// Independently re-evaluates a reported failure witness; true iff it indeed
/// demonstrates a violation of its condition.
bool recheck_failure(const StrongnessFailure& w, const BinaryRelation& rel, const Topology& t);

} // namespace fintop
