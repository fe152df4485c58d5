#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fintop/classify.hpp"
#include "fintop/finite_function.hpp"
#include "fintop/topology.hpp"

namespace fintop {

/// Cap on the brute-force search space |grid|^n.
inline constexpr std::uint64_t kMaxOracleCandidates = 10'000'000;

enum class TargetClass {
    ContraContinuous, // every fiber closed
    Continuous,       // every fiber open
    BaireOne,         // finite carrier: coincides with ContraContinuous
};

std::string to_string(TargetClass c);
std::optional<TargetClass> target_class_from_string(const std::string& s);

struct OracleQuery {
    Topology space;
    FiniteFunction lower;
    FiniteFunction upper;
    /// Candidate values for h; defaults to the union of both functions'
    /// values when empty. Deduplicated and sorted internally, so the
    /// existence answer does not depend on the order given.
    std::vector<Rational> value_grid;
    TargetClass target = TargetClass::ContraContinuous;
};

struct OracleResult {
    std::optional<FiniteFunction> witness;
    std::uint64_t enumerated = 0; // candidates actually classified
};

/// Enumerates every h with lower <= h <= upper and values drawn from the
/// grid, in lexicographic point-major order (point 0 most significant), and
/// returns the first member of the target class. Wholly independent of the
/// relation and chain machinery: only the classifier decides membership.
/// Throws CapExceeded when |grid|^n exceeds kMaxOracleCandidates and
/// PreconditionError on carrier mismatch or an unordered pair.
OracleResult find_insertion(const OracleQuery& query);

/// Every function from the n-point carrier into the grid, in lexicographic
/// point-major order (point 0 most significant). The grid is used as given;
/// callers dedupe and sort when order matters.
std::vector<FiniteFunction> all_grid_functions(int n, const std::vector<Rational>& grid);

/// One space's record in the hypothesis-necessity sweep.
struct NecessityRecord {
    std::size_t space_index = 0;
    Topology space;
    bool extremally_disconnected = false;
    bool all_pairs_insertable = false;
    std::uint64_t pairs_checked = 0;
    /// First qualifying pair (lower uscc, upper lscc, lower <= upper, values
    /// in the grid) with no contra-continuous inserter in the grid, if any.
    std::optional<std::pair<FiniteFunction, FiniteFunction>> witness_pair;
};

/// Sweeps every topology on n points: for each, tries every qualifying pair
/// over the grid against the oracle. A space that is not extremally
/// disconnected yet shows no witness pair under this grid is merely listed
/// (grid sufficiency is open); the caller decides what to make of it.
std::vector<NecessityRecord> necessity_sweep(int n, const std::vector<Rational>& grid);

} // namespace fintop
