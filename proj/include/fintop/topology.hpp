#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "fintop/pointset.hpp"

namespace fintop {

/// Carrier cap for operations that walk the whole power set (separation
/// predicates, witness searches). Exceeding it is an explicit error.
inline constexpr int kMaxPowerSearchPoints = 12;

/// A topology on a finite carrier {0, ..., n-1}, stored as the minimal
/// neighborhood table: min_nbr(x) is the smallest open set containing x.
/// On a finite carrier this table determines the topology completely; a set
/// is open iff it contains the minimal neighborhood of each of its points.
///
/// Invariants (enforced at construction, never repaired):
///   - x is in min_nbr(x)                              (reflexivity)
///   - y in min_nbr(x) implies min_nbr(y) is a subset of min_nbr(x)
///                                                     (transitivity)
///
/// Immutable after construction; the explicit open-set family is derived
/// lazily and memoized.
class Topology {
public:
    /// Validates the table; throws ParseError naming the violated axiom.
    static Topology from_min_neighborhoods(std::vector<PointSet> min_nbrs);

    /// Accepts a family of subsets of {0,...,n-1}; validates that it contains
    /// the empty set and the carrier and is closed under pairwise union and
    /// intersection (on a finite carrier that makes it a topology), then
    /// derives the minimal neighborhood table. Throws ParseError naming the
    /// violated axiom.
    static Topology from_opens(int n, const std::vector<PointSet>& opens);

    int size() const { return n_; }

    PointSet min_neighborhood(int p) const;

    /// U is open iff U equals the union of the minimal neighborhoods of its
    /// points.
    bool is_open(const PointSet& a) const { return kernel(a) == a; }
    bool is_closed(const PointSet& a) const { return is_open(a.complement()); }

    /// Largest open subset of A.
    PointSet interior(const PointSet& a) const;
    /// Smallest closed superset of A.
    PointSet closure(const PointSet& a) const;

    /// Kernel of A: the intersection of all open supersets of A. On a finite
    /// carrier this is the union of the minimal neighborhoods of A's points,
    /// hence itself open. Extensive, monotone, idempotent.
    PointSet kernel(const PointSet& a) const;

    /// V-hull of A: the union of all closed subsets of A; dually, the
    /// complement of the kernel of the complement. Always closed.
    PointSet vee(const PointSet& a) const;

    /// On a finite carrier a countable union of closed sets is a finite
    /// union, hence closed.
    bool is_f_sigma(const PointSet& a) const { return is_closed(a); }
    /// Dually, countable intersections of opens collapse to opens.
    bool is_g_delta(const PointSet& a) const { return is_open(a); }

    /// All open sets, in ascending mask order. Computed on first use,
    /// memoized, thread-safe. Requires n <= kMaxPowerSearchPoints.
    const std::vector<PointSet>& opens() const;
    /// Complements of opens(), in ascending mask order.
    const std::vector<PointSet>& closeds() const;

    friend bool operator==(const Topology& a, const Topology& b) {
        return a.n_ == b.n_ && a.min_nbr_ == b.min_nbr_;
    }
    friend bool operator!=(const Topology& a, const Topology& b) { return !(a == b); }

    std::string to_string() const;

private:
    Topology(int n, std::vector<std::uint32_t> min_nbr);

    void check_member(const PointSet& a) const;
    std::uint32_t kernel_mask(std::uint32_t m) const;
    std::uint32_t full_mask() const { return n_ == 0 ? 0u : (0xFFFFFFFFu >> (32 - n_)); }

    int n_;
    std::vector<std::uint32_t> min_nbr_;

    struct Families {
        std::once_flag once;
        std::vector<PointSet> opens;
        std::vector<PointSet> closeds;
    };
    std::shared_ptr<Families> families_; // memoization slot; logical state is immutable
};

/// Re-validates that every kernel is open and that the open family is closed
/// under union and intersection. True on every structurally valid topology;
/// a violation (impossible through the public constructors) throws.
bool lambda_sets_open(const Topology& t);

/// The closure of every open set is open.
bool is_extremally_disconnected(const Topology& t);

/// Every pair of disjoint closed sets has disjoint open supersets. Since any
/// open superset of C contains kernel(C), this reduces to checking
/// kernel(C1) and kernel(C2) for disjointness.
bool is_normal(const Topology& t);

/// Every pair of disjoint open sets has disjoint closed supersets; reduces to
/// closure(U1) and closure(U2) being disjoint.
bool opens_closed_separated(const Topology& t);

/// Every pair of disjoint closed sets has disjoint open... the finite-carrier
/// reading of separating closed G-delta sets collapses to plain normality;
/// kept as a named alias so reports can list it separately.
bool closeds_open_separated(const Topology& t);

} // namespace fintop
