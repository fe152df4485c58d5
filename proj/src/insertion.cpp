#include "fintop/insertion.hpp"

#include <algorithm>

#include "fintop/errors.hpp"

namespace fintop {

std::string to_string(InsertionMode m) {
    return m == InsertionMode::Exact ? "exact" : "literal";
}

std::string to_string(Preset p) {
    switch (p) {
        case Preset::Raw: return "raw";
        case Preset::Cor1: return "cor1";
        case Preset::Cor2: return "cor2";
        case Preset::Cor3: return "cor3";
        case Preset::Cor4: return "cor4";
    }
    return "?";
}

std::optional<Preset> preset_from_string(const std::string& s) {
    if (s == "raw") return Preset::Raw;
    if (s == "cor1") return Preset::Cor1;
    if (s == "cor2") return Preset::Cor2;
    if (s == "cor3") return Preset::Cor3;
    if (s == "cor4") return Preset::Cor4;
    return std::nullopt;
}

std::optional<RelationKind> preset_relation(Preset p) {
    switch (p) {
        case Preset::Raw: return std::nullopt;
        case Preset::Cor1:
        case Preset::Cor3: return RelationKind::KernelSubVee;
        case Preset::Cor2:
        case Preset::Cor4: return RelationKind::ClosedInterpolant;
    }
    return std::nullopt;
}

std::optional<std::string> preset_gate_violation(Preset p, const Topology& t,
                                                 const FiniteFunction& lower,
                                                 const FiniteFunction& upper) {
    if (p == Preset::Raw) return std::nullopt;
    ClassFlags lo = classify(t, lower);
    ClassFlags up = classify(t, upper);
    switch (p) {
        case Preset::Cor1:
            if (!lo.uscc) return "preset cor1 requires the lower function to be uscc";
            if (!up.lscc) return "preset cor1 requires the upper function to be lscc";
            break;
        case Preset::Cor3:
            if (!lo.us_baire_one) return "preset cor3 requires the lower function to be usB1";
            if (!up.ls_baire_one) return "preset cor3 requires the upper function to be lsB1";
            break;
        case Preset::Cor2:
            if (!lo.lscc) return "preset cor2 requires the lower function to be lscc";
            if (!up.uscc) return "preset cor2 requires the upper function to be uscc";
            break;
        case Preset::Cor4:
            if (!lo.ls_baire_one) return "preset cor4 requires the lower function to be lsB1";
            if (!up.us_baire_one) return "preset cor4 requires the upper function to be usB1";
            break;
        case Preset::Raw: break;
    }
    return std::nullopt;
}

std::string to_string(InsertStatus s) {
    switch (s) {
        case InsertStatus::Success: return "success";
        case InsertStatus::PremiseFailure: return "premise-failure";
        case InsertStatus::NoWitness: return "no-witness";
    }
    return "?";
}

InterpolateResult interpolate(const CutSetFamily& upper_sets, const CutSetFamily& lower_sets,
                              const BinaryRelation& rel, const Topology& t, InsertionMode mode) {
    if (upper_sets.levels() != lower_sets.levels())
        throw PreconditionError("cut-set families were built over different level grids");
    if (t.size() > kMaxPowerSearchPoints)
        throw CapExceeded("chain witness search needs n <= " +
                          std::to_string(kMaxPowerSearchPoints) + ", carrier has " +
                          std::to_string(t.size()));

    const int gaps = upper_sets.gap_count();
    const bool exact = mode == InsertionMode::Exact;

    InterpolationChain chain;
    chain.levels = upper_sets.levels();

    for (int i = 0; i < gaps; ++i) {
        ChainStep step;
        step.gap = i;
        step.self_required = exact;
        // Established sets the candidate must sit above...
        for (int j = 0; j < (exact ? i + 1 : i); ++j)
            step.lower_constraints.push_back(upper_sets.gap(j));
        for (int j = 0; j < i; ++j) step.lower_constraints.push_back(chain.sets[j]);
        // ...and targets it must stay below.
        for (int j = (exact ? i : i + 1); j < gaps; ++j)
            step.upper_constraints.push_back(lower_sets.gap(j));

        bool found = false;
        const std::uint32_t full = t.size() == 0 ? 0u : (0xFFFFFFFFu >> (32 - t.size()));
        for (std::uint32_t m = 0;; ++m) {
            PointSet c = PointSet::from_mask(t.size(), m);
            bool ok = true;
            for (const PointSet& l : step.lower_constraints)
                if (!rel.holds(t, l, c)) { ok = false; break; }
            if (ok)
                for (const PointSet& u : step.upper_constraints)
                    if (!rel.holds(t, c, u)) { ok = false; break; }
            if (ok && step.self_required && !rel.holds(t, c, c)) ok = false;
            if (ok) {
                step.chosen = c;
                found = true;
                break;
            }
            if ((m & full) == full) break;
        }
        if (!found) {
            NoWitnessCert cert;
            cert.gap = i;
            cert.lower_constraints = std::move(step.lower_constraints);
            cert.upper_constraints = std::move(step.upper_constraints);
            cert.self_required = step.self_required;
            return {std::nullopt, std::move(cert)};
        }
        chain.sets.push_back(step.chosen);
        chain.steps.push_back(std::move(step));
    }
    return {std::move(chain), std::nullopt};
}

FiniteFunction extract(const InterpolationChain& chain) {
    if (chain.sets.empty() || !chain.sets.back().is_full())
        throw PreconditionError("malformed chain: the last set does not cover the carrier");
    if (chain.sets.size() != chain.levels.size() + 1)
        throw PreconditionError("malformed chain: gap count does not match the level grid");
    const int n = chain.sets.back().universe_size();
    std::vector<Rational> values;
    values.reserve(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        for (std::size_t i = 1; i < chain.sets.size(); ++i)
            if (chain.sets[i].contains(x)) {
                values.push_back(chain.levels[i - 1]);
                break;
            }
    }
    return FiniteFunction(std::move(values));
}

std::optional<std::string> validate_chain(const InterpolationChain& chain,
                                          const CutSetFamily& upper_sets,
                                          const CutSetFamily& lower_sets,
                                          const BinaryRelation& rel, const Topology& t,
                                          InsertionMode mode) {
    const int gaps = upper_sets.gap_count();
    if (chain.levels != upper_sets.levels()) return "chain level grid differs from the families'";
    if (static_cast<int>(chain.sets.size()) != gaps) return "chain gap count mismatch";
    if (!chain.sets.front().is_empty()) return "H_0 is not empty";
    if (!chain.sets.back().is_full()) return "H_K is not the carrier";
    for (int i = 0; i + 1 < gaps; ++i)
        if (!chain.sets[i].subset_of(chain.sets[i + 1]))
            return "chain not monotone at gap " + std::to_string(i);

    const bool exact = mode == InsertionMode::Exact;
    for (int i = 0; i < gaps; ++i)
        for (int j = i; j < gaps; ++j) {
            if ((exact || i < j) && !rel.holds(t, upper_sets.gap(i), chain.sets[j]))
                return "F_" + std::to_string(i) + " rel H_" + std::to_string(j) + " fails";
            if ((exact || i < j) && !rel.holds(t, chain.sets[i], lower_sets.gap(j)))
                return "H_" + std::to_string(i) + " rel G_" + std::to_string(j) + " fails";
            if ((exact || i < j) && !rel.holds(t, chain.sets[i], chain.sets[j]))
                return "H_" + std::to_string(i) + " rel H_" + std::to_string(j) + " fails";
        }
    return std::nullopt;
}

std::vector<Rational> literal_grid(const FiniteFunction& lower, const FiniteFunction& upper) {
    std::vector<Rational> values = build_levels(lower, upper);
    std::vector<Rational> grid;
    grid.push_back(values.front() - 1);
    for (std::size_t i = 0; i < values.size(); ++i) {
        grid.push_back(values[i]);
        if (i + 1 < values.size()) grid.push_back(midpoint(values[i], values[i + 1]));
    }
    grid.push_back(values.back() + 1);
    return grid;
}

namespace {

/// Distance to the adjacent grid level, for the slack bound.
Rational grid_step_above(const std::vector<Rational>& levels, const Rational& v) {
    auto it = std::upper_bound(levels.begin(), levels.end(), v);
    if (it == levels.end()) return Rational(0); // already at or above the top
    return *it - v;
}

Rational grid_step_below(const std::vector<Rational>& levels, const Rational& v) {
    auto it = std::lower_bound(levels.begin(), levels.end(), v);
    if (it == levels.begin()) return Rational(0);
    return v - *(it - 1);
}

} // namespace

InsertionReport verify(const Topology& t, const FiniteFunction& lower,
                       const FiniteFunction& upper, const InterpolationChain& chain,
                       const FiniteFunction& h, InsertionMode mode) {
    InsertionReport report;
    report.mode = mode;
    report.status = InsertStatus::Success;
    report.h = h;
    report.chain = chain;

    // Bounds. Exact mode demands the sandwich exactly; literal mode allows
    // up to one step of the chain's level grid on each side.
    report.bounds_ok = true;
    report.bounds_exact = true;
    for (int x = 0; x < t.size(); ++x) {
        if (h.at(x) > upper.at(x)) {
            Rational over = h.at(x) - upper.at(x);
            report.bounds_exact = false;
            report.max_overshoot = std::max(report.max_overshoot, over);
            if (mode == InsertionMode::Exact ||
                over > grid_step_above(chain.levels, upper.at(x)))
                report.bounds_ok = false;
        }
        if (h.at(x) < lower.at(x)) {
            Rational under = lower.at(x) - h.at(x);
            report.bounds_exact = false;
            report.max_undershoot = std::max(report.max_undershoot, under);
            if (mode == InsertionMode::Exact ||
                under > grid_step_below(chain.levels, lower.at(x)))
                report.bounds_ok = false;
        }
    }

    // Fibers closed: the contra-continuity criterion for finite range.
    report.contra_ok = classify(t, h).contra_continuous;

    // Interval identity at every level pair v_a < v_b: the preimage of the
    // open interval must equal vee(H at the gap below v_b) minus
    // kernel(H at the gap above v_a).
    report.identity_ok = true;
    const auto& ls = chain.levels;
    for (std::size_t a = 0; a < ls.size() && report.identity_ok; ++a)
        for (std::size_t b = a + 1; b < ls.size(); ++b) {
            PointSet lhs = PointSet::empty(t.size());
            for (int x = 0; x < t.size(); ++x)
                if (ls[a] < h.at(x) && h.at(x) < ls[b]) lhs = lhs.with(x);
            PointSet rhs = t.vee(chain.sets[b]) - t.kernel(chain.sets[a + 1]);
            if (lhs != rhs) {
                report.identity_ok = false;
                break;
            }
        }
    return report;
}

InsertionReport insert(const Topology& t, const FiniteFunction& lower,
                       const FiniteFunction& upper, RelationKind relation, CutsetPolicy policy,
                       InsertionMode mode, Preset preset) {
    if (t.size() != lower.size() || t.size() != upper.size())
        throw PreconditionError("functions and topology live on different carriers");
    if (!compare_le(lower, upper))
        throw PreconditionError("lower function is not pointwise below the upper function");
    if (auto violation = preset_gate_violation(preset, t, lower, upper))
        throw PreconditionError(*violation);
    if (auto pinned = preset_relation(preset)) relation = *pinned;

    std::vector<Rational> levels = mode == InsertionMode::Exact
                                       ? build_levels(lower, upper)
                                       : literal_grid(lower, upper);
    CutSetFamily upper_sets = make_cutsets(t, upper, policy, levels);
    CutSetFamily lower_sets = make_cutsets(t, lower, policy, levels);
    BinaryRelation rel = BinaryRelation::named(relation);

    InsertionReport report;
    report.mode = mode;
    report.policy = policy;
    report.relation = relation;

    PremiseCheck premise = check_premise(upper_sets, lower_sets, rel, t);
    if (!premise.passed) {
        report.status = InsertStatus::PremiseFailure;
        PremiseFailureCert cert;
        cert.i = premise.failing_gaps->first;
        cert.j = premise.failing_gaps->second;
        cert.upper_set = premise.failing_sets->first;
        cert.lower_set = premise.failing_sets->second;
        report.premise_failure = cert;
        return report;
    }

    InterpolateResult built = interpolate(upper_sets, lower_sets, rel, t, mode);
    if (built.failure) {
        report.status = InsertStatus::NoWitness;
        report.no_witness = std::move(built.failure);
        return report;
    }

    FiniteFunction h = extract(*built.chain);
    InsertionReport verified = verify(t, lower, upper, *built.chain, h, mode);
    verified.policy = policy;
    verified.relation = relation;
    return verified;
}

} // namespace fintop
