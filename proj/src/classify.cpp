#include "fintop/classify.hpp"

#include "fintop/errors.hpp"

namespace fintop {

ClassFlags classify(const Topology& t, const FiniteFunction& f) {
    if (t.size() != f.size())
        throw PreconditionError("function and topology live on different carriers");

    ClassFlags out;
    out.usc = out.lsc = out.uscc = out.lscc = true;
    out.us_baire_one = out.ls_baire_one = true;
    out.contra_continuous = out.continuous = true;

    for (const Rational& v : f.value_set()) {
        // As t sweeps the reals, {f < t} only changes when t crosses a value;
        // both one-sided limits at each value are covered by these two sets.
        for (const PointSet& sub : {f.below(v), f.at_most(v)}) {
            if (!t.is_open(sub)) out.usc = false;
            if (!t.is_closed(sub)) out.uscc = false;
            if (!t.is_f_sigma(sub)) out.us_baire_one = false;
        }
        for (const PointSet& super : {f.above(v), f.at_least(v)}) {
            if (!t.is_open(super)) out.lsc = false;
            if (!t.is_closed(super)) out.lscc = false;
            if (!t.is_f_sigma(super)) out.ls_baire_one = false;
        }
        PointSet fib = f.fiber(v);
        if (!t.is_closed(fib)) out.contra_continuous = false;
        if (!t.is_open(fib)) out.continuous = false;
    }
    return out;
}

} // namespace fintop
