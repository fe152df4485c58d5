#include "fintop/finite_function.hpp"

#include <algorithm>

#include "fintop/errors.hpp"

namespace fintop {

const Rational& FiniteFunction::at(int p) const {
    if (p < 0 || p >= size())
        throw PreconditionError("point " + std::to_string(p) + " outside carrier of size " +
                                std::to_string(size()));
    return values_[static_cast<std::size_t>(p)];
}

std::vector<Rational> FiniteFunction::value_set() const {
    std::vector<Rational> vs = values_;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

PointSet FiniteFunction::below(const Rational& t) const {
    PointSet s = PointSet::empty(size());
    for (int x = 0; x < size(); ++x)
        if (values_[static_cast<std::size_t>(x)] < t) s = s.with(x);
    return s;
}

PointSet FiniteFunction::at_most(const Rational& t) const {
    PointSet s = PointSet::empty(size());
    for (int x = 0; x < size(); ++x)
        if (values_[static_cast<std::size_t>(x)] <= t) s = s.with(x);
    return s;
}

PointSet FiniteFunction::above(const Rational& t) const { return at_most(t).complement(); }

PointSet FiniteFunction::at_least(const Rational& t) const { return below(t).complement(); }

PointSet FiniteFunction::fiber(const Rational& v) const {
    PointSet s = PointSet::empty(size());
    for (int x = 0; x < size(); ++x)
        if (values_[static_cast<std::size_t>(x)] == v) s = s.with(x);
    return s;
}

FiniteFunction FiniteFunction::plus(const Rational& c) const {
    std::vector<Rational> vs = values_;
    for (Rational& v : vs) v += c;
    return FiniteFunction(std::move(vs));
}

FiniteFunction FiniteFunction::negated() const {
    std::vector<Rational> vs = values_;
    for (Rational& v : vs) v = -v;
    return FiniteFunction(std::move(vs));
}

bool compare_le(const FiniteFunction& lower, const FiniteFunction& upper) {
    if (lower.size() != upper.size())
        throw PreconditionError("functions live on different carriers");
    for (int x = 0; x < lower.size(); ++x)
        if (!(lower.at(x) <= upper.at(x))) return false;
    return true;
}

std::vector<Rational> build_levels(const FiniteFunction& lower, const FiniteFunction& upper) {
    if (lower.size() != upper.size())
        throw PreconditionError("functions live on different carriers");
    if (lower.size() == 0) throw PreconditionError("level grid of an empty carrier is undefined");
    std::vector<Rational> vs = lower.values();
    const auto& uv = upper.values();
    vs.insert(vs.end(), uv.begin(), uv.end());
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

} // namespace fintop
