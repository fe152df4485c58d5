#include "fintop/relations.hpp"

#include "fintop/errors.hpp"

namespace fintop {

namespace {

std::uint32_t subset_count(int n) { return std::uint32_t{1} << n; }

void check_cap(const Topology& t, int cap, const char* what) {
    if (t.size() > cap)
        throw CapExceeded(std::string(what) + " needs n <= " + std::to_string(cap) +
                          ", carrier has " + std::to_string(t.size()));
}

/// Dense truth table of rel over all subset pairs, indexed a * 2^n + b.
std::vector<bool> tabulate(const BinaryRelation& rel, const Topology& t) {
    const std::uint32_t count = subset_count(t.size());
    std::vector<bool> table(std::size_t{count} * count);
    for (std::uint32_t a = 0; a < count; ++a)
        for (std::uint32_t b = 0; b < count; ++b)
            table[std::size_t{a} * count + b] =
                rel.holds(t, PointSet::from_mask(t.size(), a), PointSet::from_mask(t.size(), b));
    return table;
}

} // namespace

std::string to_string(RelationKind k) {
    switch (k) {
        case RelationKind::KernelSubVee: return "kernel-vee";
        case RelationKind::ClosedInterpolant: return "closed-interpolant";
        case RelationKind::ExplicitTable: return "explicit-table";
    }
    return "?";
}

BinaryRelation BinaryRelation::named(RelationKind kind) {
    if (kind == RelationKind::ExplicitTable)
        throw PreconditionError("an explicit-table relation needs a pair list");
    return BinaryRelation(kind, -1, {});
}

BinaryRelation BinaryRelation::from_pairs(int n,
                                          const std::vector<std::pair<PointSet, PointSet>>& pairs) {
    if (n < 0 || n > kMaxTabulatePoints)
        throw CapExceeded("explicit relation table needs 0 <= n <= " +
                          std::to_string(kMaxTabulatePoints));
    const std::uint32_t count = subset_count(n);
    std::vector<bool> table(std::size_t{count} * count, false);
    for (const auto& [a, b] : pairs) {
        if (a.universe_size() != n || b.universe_size() != n)
            throw PreconditionError("relation pair lives in the wrong carrier");
        table[std::size_t{a.mask()} * count + b.mask()] = true;
    }
    return BinaryRelation(RelationKind::ExplicitTable, n, std::move(table));
}

bool BinaryRelation::holds(const Topology& t, const PointSet& a, const PointSet& b) const {
    if (a.universe_size() != t.size() || b.universe_size() != t.size())
        throw PreconditionError("relation arguments live in a different carrier than the topology");
    switch (kind_) {
        case RelationKind::KernelSubVee:
            return t.kernel(a).subset_of(t.vee(b));
        case RelationKind::ClosedInterpolant: {
            PointSet f = t.closure(t.kernel(a)); // minimal closed candidate
            return t.kernel(f).subset_of(t.vee(b));
        }
        case RelationKind::ExplicitTable: {
            if (t.size() != table_n_)
                throw PreconditionError("explicit relation table built for a different carrier");
            const std::uint32_t count = subset_count(table_n_);
            return table_[std::size_t{a.mask()} * count + b.mask()];
        }
    }
    return false;
}

BinaryRelation bar(const BinaryRelation& rel, const Topology& t) {
    check_cap(t, kMaxTabulatePoints, "bar tabulation");
    const int n = t.size();
    const std::uint32_t count = subset_count(n);
    std::vector<bool> base = tabulate(rel, t);

    std::vector<std::pair<PointSet, PointSet>> pairs;
    for (std::uint32_t a = 0; a < count; ++a)
        for (std::uint32_t b = 0; b < count; ++b) {
            bool ok = true;
            for (std::uint32_t v = 0; ok && v < count; ++v)
                if (base[std::size_t{b} * count + v] && !base[std::size_t{a} * count + v])
                    ok = false;
            for (std::uint32_t u = 0; ok && u < count; ++u)
                if (base[std::size_t{u} * count + a] && !base[std::size_t{u} * count + b])
                    ok = false;
            if (ok)
                pairs.emplace_back(PointSet::from_mask(n, a), PointSet::from_mask(n, b));
        }
    return BinaryRelation::from_pairs(n, pairs);
}

StrongnessReport check_strong(const BinaryRelation& rel, const Topology& t, int m_max, int n_max) {
    check_cap(t, kMaxStrongnessPoints, "strongness checking");
    if (m_max < 1 || n_max < 1)
        throw PreconditionError("strongness family bounds must be at least 1");

    const int n = t.size();
    const std::uint32_t count = subset_count(n);
    std::vector<bool> base = tabulate(rel, t);
    auto rel_at = [&](std::uint32_t a, std::uint32_t b) {
        return static_cast<bool>(base[std::size_t{a} * count + b]);
    };

    StrongnessReport report;
    report.condition1_m_max = m_max;
    report.condition1_n_max = n_max;
    auto note_failure = [&](StrongnessFailure w) {
        if (!report.first_failure) report.first_failure = std::move(w);
    };

    // Condition 3 first: it is the cheapest and underpins the others.
    report.condition3_ok = true;
    for (std::uint32_t a = 0; a < count && report.condition3_ok; ++a)
        for (std::uint32_t b = 0; b < count; ++b) {
            if (!rel_at(a, b)) continue;
            PointSet pa = PointSet::from_mask(n, a), pb = PointSet::from_mask(n, b);
            if (!t.kernel(pa).subset_of(pb) || !pa.subset_of(t.vee(pb))) {
                report.condition3_ok = false;
                note_failure({3, {pa}, {pb}});
                break;
            }
        }

    // Condition 2: A <= B implies A bar(rel) B; evaluated off the same table.
    report.condition2_ok = true;
    for (std::uint32_t a = 0; a < count && report.condition2_ok; ++a)
        for (std::uint32_t b = 0; b < count; ++b) {
            if ((a & ~b) != 0) continue; // not a subset pair
            bool holds_bar = true;
            for (std::uint32_t v = 0; holds_bar && v < count; ++v)
                if (rel_at(b, v) && !rel_at(a, v)) holds_bar = false;
            for (std::uint32_t u = 0; holds_bar && u < count; ++u)
                if (rel_at(u, a) && !rel_at(u, b)) holds_bar = false;
            if (!holds_bar) {
                report.condition2_ok = false;
                note_failure({2, {PointSet::from_mask(n, a)}, {PointSet::from_mask(n, b)}});
                break;
            }
        }

    // Condition 1, bounded: enumerate nonempty subset families (distinct
    // members; duplicates add no constraints) smallest sizes first, members
    // in ascending mask order, so a reported witness is minimal in that
    // ordering.
    auto families_of_size = [&](int s) {
        std::vector<std::vector<std::uint32_t>> out;
        std::vector<std::uint32_t> cur;
        auto rec = [&](auto&& self, std::uint32_t next) -> void {
            if (static_cast<int>(cur.size()) == s) {
                out.push_back(cur);
                return;
            }
            for (std::uint32_t m = next; m < count; ++m) {
                cur.push_back(m);
                self(self, m + 1);
                cur.pop_back();
            }
        };
        rec(rec, 0);
        return out;
    };
    std::vector<std::vector<std::vector<std::uint32_t>>> lower_by_size, upper_by_size;
    for (int s = 1; s <= m_max; ++s) lower_by_size.push_back(families_of_size(s));
    for (int s = 1; s <= n_max; ++s) upper_by_size.push_back(families_of_size(s));

    report.condition1_ok = true;
    for (const auto& lower_group : lower_by_size) {
    for (const auto& upper_group : upper_by_size) {
    for (const auto& fam_a : lower_group) {
        for (const auto& fam_b : upper_group) {
            bool premise = true;
            for (std::uint32_t a : fam_a)
                for (std::uint32_t b : fam_b)
                    if (!rel_at(a, b)) { premise = false; goto premise_done; }
        premise_done:
            if (!premise) continue;
            bool witness = false;
            for (std::uint32_t c = 0; c < count && !witness; ++c) {
                bool ok = true;
                for (std::uint32_t a : fam_a)
                    if (!rel_at(a, c)) { ok = false; break; }
                if (ok)
                    for (std::uint32_t b : fam_b)
                        if (!rel_at(c, b)) { ok = false; break; }
                witness = ok;
            }
            if (!witness) {
                report.condition1_ok = false;
                StrongnessFailure w;
                w.condition = 1;
                for (std::uint32_t a : fam_a) w.lower_family.push_back(PointSet::from_mask(n, a));
                for (std::uint32_t b : fam_b) w.upper_family.push_back(PointSet::from_mask(n, b));
                note_failure(std::move(w));
                return report;
            }
        }
    }
    }
    }
    return report;
}

bool recheck_failure(const StrongnessFailure& w, const BinaryRelation& rel, const Topology& t) {
    switch (w.condition) {
        case 1: {
            for (const PointSet& a : w.lower_family)
                for (const PointSet& b : w.upper_family)
                    if (!rel.holds(t, a, b)) return false; // premise must hold
            const std::uint32_t count = subset_count(t.size());
            for (std::uint32_t c = 0; c < count; ++c) {
                PointSet pc = PointSet::from_mask(t.size(), c);
                bool ok = true;
                for (const PointSet& a : w.lower_family)
                    if (!rel.holds(t, a, pc)) { ok = false; break; }
                if (ok)
                    for (const PointSet& b : w.upper_family)
                        if (!rel.holds(t, pc, b)) { ok = false; break; }
                if (ok) return false; // an interpolant exists after all
            }
            return true;
        }
        case 2: {
            if (w.lower_family.size() != 1 || w.upper_family.size() != 1) return false;
            const PointSet& a = w.lower_family[0];
            const PointSet& b = w.upper_family[0];
            if (!a.subset_of(b)) return false;
            BinaryRelation barred = bar(rel, t);
            return !barred.holds(t, a, b);
        }
        case 3: {
            if (w.lower_family.size() != 1 || w.upper_family.size() != 1) return false;
            const PointSet& a = w.lower_family[0];
            const PointSet& b = w.upper_family[0];
            if (!rel.holds(t, a, b)) return false;
            return !t.kernel(a).subset_of(b) || !a.subset_of(t.vee(b));
        }
        default:
            return false;
    }
}

} // namespace fintop
