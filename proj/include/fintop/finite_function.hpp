#pragma once

#include <string>
#include <vector>

#include "fintop/pointset.hpp"
#include "fintop/rational.hpp"

namespace fintop {

/// A total function from the carrier {0,...,n-1} to the rationals.
class FiniteFunction {
public:
    explicit FiniteFunction(std::vector<Rational> values) : values_(std::move(values)) {}

    static FiniteFunction constant(int n, const Rational& v) {
        return FiniteFunction(std::vector<Rational>(static_cast<std::size_t>(n), v));
    }

    int size() const { return static_cast<int>(values_.size()); }

    const Rational& at(int p) const;

    const std::vector<Rational>& values() const { return values_; }

    /// Sorted distinct values.
    std::vector<Rational> value_set() const;

    /// Points where the function is strictly below / at-or-below t, etc.
    PointSet below(const Rational& t) const;    // {x : f(x) <  t}
    PointSet at_most(const Rational& t) const;  // {x : f(x) <= t}
    PointSet above(const Rational& t) const;    // {x : f(x) >  t}
    PointSet at_least(const Rational& t) const; // {x : f(x) >= t}
    PointSet fiber(const Rational& v) const;    // {x : f(x) == v}

    FiniteFunction plus(const Rational& c) const;
    FiniteFunction negated() const;

    friend bool operator==(const FiniteFunction& a, const FiniteFunction& b) {
        return a.values_ == b.values_;
    }
    friend bool operator!=(const FiniteFunction& a, const FiniteFunction& b) {
        return !(a == b);
    }

    std::string to_string() const { return fintop::to_string(values_); }

private:
    std::vector<Rational> values_;
};

/// Pointwise lower <= upper. Throws PreconditionError on carrier mismatch.
bool compare_le(const FiniteFunction& lower, const FiniteFunction& upper);

/// Sorted distinct union of both functions' values: the level grid the
/// insertion machinery works over. Throws PreconditionError on an empty
/// carrier or carrier mismatch.
std::vector<Rational> build_levels(const FiniteFunction& lower, const FiniteFunction& upper);

} // namespace fintop
