#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fintop/topology.hpp"

namespace fintop {

/// Exhaustive enumeration cap: the number of labeled topologies explodes
/// (355 already at n = 4), and downstream sweeps multiply it by function
/// pairs.
inline constexpr int kMaxEnumeratePoints = 4;

enum class SpaceSource { Exhaustive, Random, Named };

struct SpaceCatalog {
    int n = 0;
    SpaceSource source = SpaceSource::Exhaustive;
    std::uint64_t seed = 0; // meaningful for Random only
    std::vector<Topology> spaces;
};

/// Every topology on the labeled carrier {0,...,n-1}, in ascending order of
/// the minimal-neighborhood table read as a bit matrix. Finite topologies
/// are exactly the reflexive-transitive relations (y in min_nbr(x) is the
/// specialization y <= x), so the walk filters bit matrices by those two
/// axioms. Counts: 1, 1, 4, 29, 355 for n = 0..4. Throws CapExceeded above
/// kMaxEnumeratePoints.
SpaceCatalog enumerate_topologies(int n);

/// Named constructions, all validated through the ordinary constructor:
///   discrete         every set open
///   indiscrete       only the empty set and the carrier
///   sierpinski       n = 2, opens {}, {0}, {0,1}
///   particular_point opens: the empty set plus every set containing point 0
///   excluded_point   opens: the carrier plus every set avoiding point 0
///   chain            opens {}, {0}, {0,1}, ..., {0..n-1}
Topology named_space(const std::string& name, int n);

/// Deterministic in (n, seed): sprinkles a random relation and takes its
/// reflexive-transitive closure.
Topology random_topology(int n, std::uint64_t seed);

} // namespace fintop
