#pragma once

#include "fintop/finite_function.hpp"
#include "fintop/topology.hpp"

namespace fintop {

/// Semicontinuity and continuity classification of a function on a finite
/// space. Each flag checks its defining level-set condition; the sweep over
/// real thresholds collapses to the finitely many sets {f < v} and {f <= v}
/// for v ranging over the function's distinct values.
///
/// Finite-carrier collapses baked into the flags:
///   - us_baire_one  == uscc  (a countable union of closeds is closed)
///   - ls_baire_one  == lscc  (dually)
///   - contra_continuous == continuous (a function with finitely many values
///     has all fibers closed iff it has all fibers open)
/// contra_continuous and continuous are still computed by separate fiber
/// criteria so their agreement is a checkable fact, not a tautology.
struct ClassFlags {
    bool usc = false;   // {f < t} open for every t
    bool lsc = false;   // {f > t} open for every t
    bool uscc = false;  // {f < t} closed for every t
    bool lscc = false;  // {f > t} closed for every t
    bool us_baire_one = false; // {f < t} F-sigma for every t
    bool ls_baire_one = false; // {f > t} F-sigma for every t
    bool contra_continuous = false; // every fiber closed
    bool continuous = false;        // every fiber open
};

ClassFlags classify(const Topology& t, const FiniteFunction& f);

} // namespace fintop
