#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "fintop/errors.hpp"

namespace fintop {

/// Hard cap on carrier size. Every subset of a carrier this small fits in one
/// 32-bit mask, and all set algebra is single-word bit arithmetic.
inline constexpr int kMaxPoints = 16;

/// A subset of a fixed finite carrier {0, ..., n-1}, represented as a bitmask.
/// Value type: cheap to copy, immutable in spirit (all ops return new sets).
/// Operations on sets from different carriers throw PreconditionError.
class PointSet {
public:
    PointSet() : n_(0), mask_(0) {}

    static PointSet empty(int n) {
        check_universe(n);
        return PointSet(n, 0);
    }
    static PointSet full(int n) {
        check_universe(n);
        return PointSet(n, full_mask(n));
    }

    static PointSet of(int n, std::initializer_list<int> pts) {
        PointSet s = empty(n);
        for (int p : pts) s = s.with(p);
        return s;
    }

    static PointSet from_mask(int n, std::uint32_t mask) {
        check_universe(n);
        if (mask & ~full_mask(n))
            throw PreconditionError("point set mask has bits outside the carrier");
        return PointSet(n, mask);
    }

    int universe_size() const { return n_; }
    std::uint32_t mask() const { return mask_; }

    bool is_empty() const { return mask_ == 0; }
    bool is_full() const { return mask_ == full_mask(n_); }
    int size() const { return std::popcount(mask_); }

    bool contains(int p) const {
        check_point(p);
        return (mask_ >> p) & 1u;
    }

    PointSet with(int p) const {
        check_point(p);
        return PointSet(n_, mask_ | (1u << p));
    }

    PointSet without(int p) const {
        check_point(p);
        return PointSet(n_, mask_ & ~(1u << p));
    }

    PointSet complement() const { return PointSet(n_, ~mask_ & full_mask(n_)); }

    bool subset_of(const PointSet& o) const {
        check_same(o);
        return (mask_ & ~o.mask_) == 0;
    }

    bool intersects(const PointSet& o) const {
        check_same(o);
        return (mask_ & o.mask_) != 0;
    }

    friend PointSet operator|(const PointSet& a, const PointSet& b) {
        a.check_same(b);
        return PointSet(a.n_, a.mask_ | b.mask_);
    }
    friend PointSet operator&(const PointSet& a, const PointSet& b) {
        a.check_same(b);
        return PointSet(a.n_, a.mask_ & b.mask_);
    }
    /// Set difference.
    friend PointSet operator-(const PointSet& a, const PointSet& b) {
        a.check_same(b);
        return PointSet(a.n_, a.mask_ & ~b.mask_);
    }

    friend bool operator==(const PointSet& a, const PointSet& b) {
        return a.n_ == b.n_ && a.mask_ == b.mask_;
    }
    friend bool operator!=(const PointSet& a, const PointSet& b) { return !(a == b); }
    /// Mask order; used for deterministic iteration and tie-breaking.
    friend bool operator<(const PointSet& a, const PointSet& b) {
        return a.n_ != b.n_ ? a.n_ < b.n_ : a.mask_ < b.mask_;
    }

    std::vector<int> points() const {
        std::vector<int> out;
        for (int p = 0; p < n_; ++p)
            if ((mask_ >> p) & 1u) out.push_back(p);
        return out;
    }

    /// "{0,2}" or "{}" for the empty set.
    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int p : points()) {
            if (!first) s += ',';
            s += std::to_string(p);
            first = false;
        }
        s += '}';
        return s;
    }

private:
    PointSet(int n, std::uint32_t mask) : n_(n), mask_(mask) {}

    static std::uint32_t full_mask(int n) { return n == 0 ? 0u : (0xFFFFFFFFu >> (32 - n)); }

    static void check_universe(int n) {
        if (n < 0 || n > kMaxPoints)
            throw CapExceeded("carrier size " + std::to_string(n) + " outside [0, " +
                              std::to_string(kMaxPoints) + "]");
    }

    void check_point(int p) const {
        if (p < 0 || p >= n_)
            throw PreconditionError("point " + std::to_string(p) + " outside carrier of size " +
                                    std::to_string(n_));
    }

    void check_same(const PointSet& o) const {
        if (n_ != o.n_) throw PreconditionError("point sets live in different carriers");
    }

    int n_;
    std::uint32_t mask_;

    friend class Topology;
};

} // namespace fintop
