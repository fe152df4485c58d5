#include "fintop/topology.hpp"

#include <algorithm>

#include "fintop/errors.hpp"

namespace fintop {

Topology::Topology(int n, std::vector<std::uint32_t> min_nbr)
    : n_(n), min_nbr_(std::move(min_nbr)), families_(std::make_shared<Families>()) {}

Topology Topology::from_min_neighborhoods(std::vector<PointSet> min_nbrs) {
    const int n = static_cast<int>(min_nbrs.size());
    if (n > kMaxPoints)
        throw CapExceeded("carrier size " + std::to_string(n) + " exceeds cap " +
                          std::to_string(kMaxPoints));
    std::vector<std::uint32_t> table(n);
    for (int x = 0; x < n; ++x) {
        if (min_nbrs[x].universe_size() != n)
            throw ParseError("min_nbrs[" + std::to_string(x) + "] lives in the wrong carrier");
        table[x] = min_nbrs[x].mask();
        if (!((table[x] >> x) & 1u))
            throw ParseError("reflexivity violated: point " + std::to_string(x) +
                             " is missing from its own minimal neighborhood");
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if ((table[x] >> y) & 1u)
                if (table[y] & ~table[x])
                    throw ParseError("transitivity violated: point " + std::to_string(y) +
                                     " lies in min_nbr(" + std::to_string(x) + ") but min_nbr(" +
                                     std::to_string(y) + ") is not contained in it");
    return Topology(n, std::move(table));
}

Topology Topology::from_opens(int n, const std::vector<PointSet>& opens) {
    if (n < 0 || n > kMaxPoints)
        throw CapExceeded("carrier size " + std::to_string(n) + " exceeds cap " +
                          std::to_string(kMaxPoints));
    const std::uint32_t full = n == 0 ? 0u : (0xFFFFFFFFu >> (32 - n));
    std::vector<bool> member(std::size_t{1} << n, false);
    for (const PointSet& u : opens) {
        if (u.universe_size() != n)
            throw ParseError("open-set family entry lives in the wrong carrier");
        member[u.mask()] = true;
    }
    if (!member[0]) throw ParseError("open-set family is missing the empty set");
    if (!member[full]) throw ParseError("open-set family is missing the whole carrier");
    for (const PointSet& u : opens)
        for (const PointSet& v : opens) {
            if (!member[u.mask() | v.mask()])
                throw ParseError("open-set family is not closed under union: " + u.to_string() +
                                 " | " + v.to_string());
            if (!member[u.mask() & v.mask()])
                throw ParseError("open-set family is not closed under intersection: " +
                                 u.to_string() + " & " + v.to_string());
        }

    std::vector<std::uint32_t> table(n, 0);
    for (int x = 0; x < n; ++x) {
        std::uint32_t acc = full;
        for (const PointSet& u : opens)
            if ((u.mask() >> x) & 1u) acc &= u.mask();
        table[x] = acc;
    }
    return Topology(n, std::move(table));
}

PointSet Topology::min_neighborhood(int p) const {
    if (p < 0 || p >= n_)
        throw PreconditionError("point " + std::to_string(p) + " outside carrier");
    return PointSet::from_mask(n_, min_nbr_[p]);
}

void Topology::check_member(const PointSet& a) const {
    if (a.universe_size() != n_)
        throw PreconditionError("point set lives in a different carrier than the topology");
}

std::uint32_t Topology::kernel_mask(std::uint32_t m) const {
    std::uint32_t acc = 0;
    for (int x = 0; x < n_; ++x)
        if ((m >> x) & 1u) acc |= min_nbr_[x];
    return acc;
}

PointSet Topology::kernel(const PointSet& a) const {
    check_member(a);
    return PointSet::from_mask(n_, kernel_mask(a.mask()));
}

PointSet Topology::interior(const PointSet& a) const {
    check_member(a);
    std::uint32_t acc = 0;
    for (int x = 0; x < n_; ++x)
        if (((a.mask() >> x) & 1u) && (min_nbr_[x] & ~a.mask()) == 0) acc |= 1u << x;
    return PointSet::from_mask(n_, acc);
}

PointSet Topology::closure(const PointSet& a) const {
    check_member(a);
    // x is in the closure iff every open set around x meets A, i.e. the
    // minimal neighborhood does.
    std::uint32_t acc = 0;
    for (int x = 0; x < n_; ++x)
        if (min_nbr_[x] & a.mask()) acc |= 1u << x;
    return PointSet::from_mask(n_, acc);
}

PointSet Topology::vee(const PointSet& a) const {
    check_member(a);
    return kernel(a.complement()).complement();
}

const std::vector<PointSet>& Topology::opens() const {
    std::call_once(families_->once, [this] {
        if (n_ > kMaxPowerSearchPoints)
            throw CapExceeded("open-set enumeration needs n <= " +
                              std::to_string(kMaxPowerSearchPoints) + ", carrier has " +
                              std::to_string(n_));
        const std::uint32_t full = full_mask();
        for (std::uint32_t m = 0;; ++m) {
            if (kernel_mask(m) == m) families_->opens.push_back(PointSet::from_mask(n_, m));
            if ((m & full) == full) break;
        }
        for (const PointSet& u : families_->opens)
            families_->closeds.push_back(u.complement());
        std::sort(families_->closeds.begin(), families_->closeds.end());
    });
    return families_->opens;
}

const std::vector<PointSet>& Topology::closeds() const {
    opens();
    return families_->closeds;
}

std::string Topology::to_string() const {
    std::string s = "n=" + std::to_string(n_) + " min_nbrs=[";
    for (int x = 0; x < n_; ++x) {
        if (x) s += ' ';
        s += min_neighborhood(x).to_string();
    }
    s += ']';
    return s;
}

bool lambda_sets_open(const Topology& t) {
    // Certificate recomputation: every kernel is open, and the derived open
    // family is closed under pairwise union and intersection.
    const std::uint32_t full = t.size() == 0 ? 0u : (0xFFFFFFFFu >> (32 - t.size()));
    for (std::uint32_t m = 0;; ++m) {
        PointSet a = PointSet::from_mask(t.size(), m);
        if (!t.is_open(t.kernel(a)))
            throw PreconditionError("kernel of " + a.to_string() + " is not open");
        if ((m & full) == full) break;
    }
    for (const PointSet& u : t.opens())
        for (const PointSet& v : t.opens())
            if (!t.is_open(u | v) || !t.is_open(u & v))
                throw PreconditionError("open family not closed under union/intersection at " +
                                        u.to_string() + ", " + v.to_string());
    return true;
}

bool is_extremally_disconnected(const Topology& t) {
    for (const PointSet& u : t.opens())
        if (!t.is_open(t.closure(u))) return false;
    return true;
}

bool is_normal(const Topology& t) {
    const auto& closeds = t.closeds();
    for (const PointSet& c1 : closeds)
        for (const PointSet& c2 : closeds) {
            if (c1.intersects(c2)) continue;
            if (t.kernel(c1).intersects(t.kernel(c2))) return false;
        }
    return true;
}

bool opens_closed_separated(const Topology& t) {
    for (const PointSet& u1 : t.opens())
        for (const PointSet& u2 : t.opens()) {
            if (u1.intersects(u2)) continue;
            if (t.closure(u1).intersects(t.closure(u2))) return false;
        }
    return true;
}

bool closeds_open_separated(const Topology& t) { return is_normal(t); }

} // namespace fintop
