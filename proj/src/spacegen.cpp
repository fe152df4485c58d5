#include "fintop/spacegen.hpp"

#include <random>

#include "fintop/errors.hpp"

namespace fintop {

namespace {

Topology from_rows(int n, const std::vector<std::uint32_t>& rows) {
    std::vector<PointSet> nbrs;
    nbrs.reserve(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) nbrs.push_back(PointSet::from_mask(n, rows[x]));
    return Topology::from_min_neighborhoods(std::move(nbrs));
}

bool transitive(int n, const std::vector<std::uint32_t>& rows) {
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if ((rows[x] >> y) & 1u)
                if (rows[y] & ~rows[x]) return false;
    return true;
}

} // namespace

SpaceCatalog enumerate_topologies(int n) {
    if (n < 0 || n > kMaxEnumeratePoints)
        throw CapExceeded("exhaustive enumeration needs 0 <= n <= " +
                          std::to_string(kMaxEnumeratePoints) + ", got " + std::to_string(n));
    SpaceCatalog catalog;
    catalog.n = n;
    catalog.source = SpaceSource::Exhaustive;

    // Walk all reflexive bit matrices by the off-diagonal bits, ascending.
    const int off_bits = n * n - n;
    std::vector<std::uint32_t> rows(static_cast<std::size_t>(n));
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << off_bits); ++code) {
        std::uint64_t rest = code;
        for (int x = 0; x < n; ++x) {
            std::uint32_t row = 1u << x;
            for (int y = 0; y < n; ++y) {
                if (y == x) continue;
                if (rest & 1u) row |= 1u << y;
                rest >>= 1;
            }
            rows[static_cast<std::size_t>(x)] = row;
        }
        if (transitive(n, rows)) catalog.spaces.push_back(from_rows(n, rows));
    }
    return catalog;
}

Topology named_space(const std::string& name, int n) {
    if (n < 1 || n > kMaxPoints)
        throw PreconditionError("named space needs 1 <= n <= " + std::to_string(kMaxPoints));
    std::vector<std::uint32_t> rows(static_cast<std::size_t>(n));
    if (name == "discrete") {
        for (int x = 0; x < n; ++x) rows[x] = 1u << x;
    } else if (name == "indiscrete") {
        const std::uint32_t full = 0xFFFFFFFFu >> (32 - n);
        for (int x = 0; x < n; ++x) rows[x] = full;
    } else if (name == "sierpinski") {
        if (n != 2) throw PreconditionError("sierpinski space is defined for n = 2");
        rows[0] = 0b01;
        rows[1] = 0b11;
    } else if (name == "particular_point") {
        // Open iff empty or containing point 0.
        for (int x = 0; x < n; ++x) rows[x] = (1u << x) | 1u;
    } else if (name == "excluded_point") {
        // Open iff the whole carrier or avoiding point 0.
        const std::uint32_t full = 0xFFFFFFFFu >> (32 - n);
        rows[0] = full;
        for (int x = 1; x < n; ++x) rows[x] = 1u << x;
    } else if (name == "chain") {
        for (int x = 0; x < n; ++x) rows[x] = (1u << (x + 1)) - 1u;
    } else {
        throw ParseError("unknown named space '" + name + "'");
    }
    return from_rows(n, rows);
}

Topology random_topology(int n, std::uint64_t seed) {
    if (n < 0 || n > kMaxPoints)
        throw PreconditionError("random space needs 0 <= n <= " + std::to_string(kMaxPoints));
    std::mt19937_64 rng(seed ^ (std::uint64_t{0x9e3779b97f4a7c15} + static_cast<std::uint64_t>(n)));
    std::vector<std::uint32_t> rows(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        std::uint32_t row = 1u << x;
        for (int y = 0; y < n; ++y) {
            if (y != x && rng() % 4 == 0) row |= 1u << y;
        }
        rows[static_cast<std::size_t>(x)] = row;
    }
    // Reflexive-transitive closure: propagate rows until stable.
    for (bool changed = true; changed;) {
        changed = false;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if ((rows[x] >> y) & 1u) {
                    std::uint32_t merged = rows[x] | rows[y];
                    if (merged != rows[x]) {
                        rows[x] = merged;
                        changed = true;
                    }
                }
    }
    return from_rows(n, rows);
}

} // namespace fintop
