#include "fintop/cutsets.hpp"

#include <algorithm>

#include "fintop/errors.hpp"

namespace fintop {

std::string to_string(CutsetPolicy p) {
    return p == CutsetPolicy::Strict ? "strict" : "weak";
}

const PointSet& CutSetFamily::gap(int i) const {
    if (i < 0 || i >= gap_count())
        throw PreconditionError("gap index " + std::to_string(i) + " outside [0, " +
                                std::to_string(gap_count() - 1) + "]");
    return gaps_[static_cast<std::size_t>(i)];
}

PointSet CutSetFamily::at(const Rational& t) const {
    auto it = std::lower_bound(levels_.begin(), levels_.end(), t);
    if (it != levels_.end() && *it == t)
        return policy_ == CutsetPolicy::Strict ? fn_.below(t) : fn_.at_most(t);
    // t falls in the gap after the last level below it.
    int gap_index = static_cast<int>(it - levels_.begin());
    return gaps_[static_cast<std::size_t>(gap_index)];
}

CutSetFamily make_cutsets(const Topology& t, const FiniteFunction& f, CutsetPolicy policy,
                          const std::vector<Rational>& levels) {
    if (t.size() != f.size())
        throw PreconditionError("function and topology live on different carriers");
    if (!std::is_sorted(levels.begin(), levels.end()) ||
        std::adjacent_find(levels.begin(), levels.end()) != levels.end())
        throw PreconditionError("level grid must be strictly ascending");
    for (const Rational& v : f.value_set())
        if (!std::binary_search(levels.begin(), levels.end(), v))
            throw PreconditionError("level grid is missing the function value " + to_string(v));

    std::vector<PointSet> gaps;
    gaps.reserve(levels.size() + 1);
    gaps.push_back(PointSet::empty(f.size())); // below every level
    for (const Rational& v : levels) gaps.push_back(f.at_most(v));
    return CutSetFamily(f, policy, levels, std::move(gaps));
}

PremiseCheck check_premise(const CutSetFamily& upper_sets, const CutSetFamily& lower_sets,
                           const BinaryRelation& rel, const Topology& t) {
    if (upper_sets.levels() != lower_sets.levels())
        throw PreconditionError("cut-set families were built over different level grids");
    if (!compare_le(lower_sets.function(), upper_sets.function()))
        throw PreconditionError("lower function is not pointwise below the upper function");

    PremiseCheck out;
    const int gaps = upper_sets.gap_count();
    for (int i = 0; i < gaps; ++i)
        for (int j = i; j < gaps; ++j)
            if (!rel.holds(t, upper_sets.gap(i), lower_sets.gap(j))) {
                out.passed = false;
                out.failing_gaps = {i, j};
                out.failing_sets = {upper_sets.gap(i), lower_sets.gap(j)};
                return out;
            }
    out.passed = true;
    return out;
}

} // namespace fintop
