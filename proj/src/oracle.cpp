#include "fintop/oracle.hpp"

#include <algorithm>

#include "fintop/errors.hpp"
#include "fintop/spacegen.hpp"

namespace fintop {

std::string to_string(TargetClass c) {
    switch (c) {
    case TargetClass::ContraContinuous: return "contra-continuous";
    case TargetClass::Continuous: return "continuous";
    case TargetClass::BaireOne: return "baire-one";
    }
    return "?";
}

std::optional<TargetClass> target_class_from_string(const std::string& s) {
    if (s == "contra-continuous") return TargetClass::ContraContinuous;
    if (s == "continuous") return TargetClass::Continuous;
    if (s == "baire-one") return TargetClass::BaireOne;
    return std::nullopt;
}

namespace {

bool in_target(const ClassFlags& flags, TargetClass target) {
    switch (target) {
    case TargetClass::ContraContinuous: return flags.contra_continuous;
    case TargetClass::Continuous: return flags.continuous;
    case TargetClass::BaireOne:
        return flags.us_baire_one && flags.ls_baire_one;
    }
    return false;
}

} // namespace

OracleResult find_insertion(const OracleQuery& query) {
    const int n = query.space.size();
    if (query.lower.size() != n || query.upper.size() != n)
        throw PreconditionError("oracle: function carrier does not match the space");
    if (!compare_le(query.lower, query.upper))
        throw PreconditionError("oracle: lower exceeds upper at some point");

    std::vector<Rational> grid = query.value_grid;
    if (grid.empty()) {
        grid = query.lower.value_set();
        const auto uv = query.upper.value_set();
        grid.insert(grid.end(), uv.begin(), uv.end());
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    OracleResult result;
    if (n == 0) {
        // The empty function is the sole candidate and lies in every class.
        result.witness = FiniteFunction(std::vector<Rational>{});
        result.enumerated = 1;
        return result;
    }

    // Per-point candidate lists: grid values inside [lower(x), upper(x)].
    std::vector<std::vector<Rational>> candidates(static_cast<std::size_t>(n));
    std::uint64_t total = 1;
    for (int x = 0; x < n; ++x) {
        auto& cs = candidates[static_cast<std::size_t>(x)];
        for (const Rational& v : grid)
            if (query.lower.at(x) <= v && v <= query.upper.at(x)) cs.push_back(v);
        if (cs.empty()) return result; // no admissible value at x
        if (total > kMaxOracleCandidates / cs.size())
            throw CapExceeded("oracle: candidate count exceeds " +
                              std::to_string(kMaxOracleCandidates));
        total *= cs.size();
    }

    // Odometer over candidate indices, point n-1 fastest, so candidates come
    // out in lexicographic point-major order.
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    std::vector<Rational> values(static_cast<std::size_t>(n));
    while (true) {
        for (int x = 0; x < n; ++x)
            values[static_cast<std::size_t>(x)] =
                candidates[static_cast<std::size_t>(x)][idx[static_cast<std::size_t>(x)]];
        FiniteFunction h(values);
        ++result.enumerated;
        if (in_target(classify(query.space, h), query.target)) {
            result.witness = std::move(h);
            return result;
        }
        int x = n - 1;
        while (x >= 0) {
            auto& i = idx[static_cast<std::size_t>(x)];
            if (++i < candidates[static_cast<std::size_t>(x)].size()) break;
            i = 0;
            --x;
        }
        if (x < 0) break;
    }
    return result;
}

std::vector<FiniteFunction> all_grid_functions(int n, const std::vector<Rational>& grid) {
    std::vector<FiniteFunction> out;
    if (n == 0) {
        out.emplace_back(std::vector<Rational>{});
        return out;
    }
    if (grid.empty()) return out;
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    std::vector<Rational> values(static_cast<std::size_t>(n));
    while (true) {
        for (int x = 0; x < n; ++x)
            values[static_cast<std::size_t>(x)] = grid[idx[static_cast<std::size_t>(x)]];
        out.emplace_back(values);
        int x = n - 1;
        while (x >= 0) {
            auto& i = idx[static_cast<std::size_t>(x)];
            if (++i < grid.size()) break;
            i = 0;
            --x;
        }
        if (x < 0) break;
    }
    return out;
}

std::vector<NecessityRecord> necessity_sweep(int n, const std::vector<Rational>& grid) {
    if (grid.empty()) throw PreconditionError("necessity sweep: empty value grid");
    std::vector<Rational> g = grid;
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());

    const auto spaces = enumerate_topologies(n).spaces;
    const auto functions = all_grid_functions(n, g);

    std::vector<NecessityRecord> records;
    records.reserve(spaces.size());
    for (std::size_t si = 0; si < spaces.size(); ++si) {
        const Topology& t = spaces[si];
        NecessityRecord rec{si, t, is_extremally_disconnected(t), true, 0, std::nullopt};
        for (const FiniteFunction& lower : functions) {
            if (!classify(t, lower).uscc) continue;
            for (const FiniteFunction& upper : functions) {
                if (!compare_le(lower, upper)) continue;
                if (!classify(t, upper).lscc) continue;
                ++rec.pairs_checked;
                OracleQuery q{t, lower, upper, g, TargetClass::ContraContinuous};
                if (!find_insertion(q).witness) {
                    rec.all_pairs_insertable = false;
                    rec.witness_pair = std::make_pair(lower, upper);
                    break;
                }
            }
            if (!rec.all_pairs_insertable) break;
        }
        records.push_back(std::move(rec));
    }
    return records;
}

} // namespace fintop
