#include <doctest.h>

#include <algorithm>

#include "fintop/errors.hpp"
#include "fintop/insertion.hpp"
#include "fintop/spacegen.hpp"

using namespace fintop;

namespace {

const Rational kHalf(1, 2);

FiniteFunction fn(std::vector<Rational> vs) { return FiniteFunction(std::move(vs)); }

Topology double_limit_space() {
    return Topology::from_opens(3, {PointSet::empty(3), PointSet::of(3, {0}), PointSet::of(3, {1}),
                                    PointSet::of(3, {0, 1}), PointSet::full(3)});
}

bool satisfies_step(const Topology& t, const BinaryRelation& rel, const NoWitnessCert& cert,
                    const PointSet& c) {
    for (const PointSet& l : cert.lower_constraints)
        if (!rel.holds(t, l, c)) return false;
    for (const PointSet& u : cert.upper_constraints)
        if (!rel.holds(t, c, u)) return false;
    if (cert.self_required && !rel.holds(t, c, c)) return false;
    return true;
}

} // namespace

TEST_CASE("exact insertion between distinct bounds on the smallest nontrivial space") {
    Topology s = named_space("sierpinski", 2);
    FiniteFunction g = FiniteFunction::constant(2, Rational(0));
    FiniteFunction f = fn({Rational(0), Rational(1)});
    InsertionReport rep = insert(s, g, f, RelationKind::KernelSubVee, CutsetPolicy::Strict,
                                 InsertionMode::Exact, Preset::Cor1);

    CHECK(rep.status == InsertStatus::Success);
    CHECK(rep.mode == InsertionMode::Exact);
    CHECK(rep.policy == CutsetPolicy::Strict);
    CHECK(rep.relation == RelationKind::KernelSubVee);
    REQUIRE(rep.h);
    CHECK(*rep.h == FiniteFunction::constant(2, Rational(0)));
    REQUIRE(rep.chain);
    CHECK(rep.chain->levels == std::vector<Rational>{Rational(0), Rational(1)});
    REQUIRE(rep.chain->sets.size() == 3);
    CHECK(rep.chain->sets[0] == PointSet::empty(2));
    CHECK(rep.chain->sets[1] == PointSet::full(2));
    CHECK(rep.chain->sets[2] == PointSet::full(2));
    CHECK(rep.bounds_ok);
    CHECK(rep.bounds_exact);
    CHECK(rep.contra_ok);
    CHECK(rep.identity_ok);
    CHECK(rep.max_overshoot == Rational(0));
    CHECK(rep.max_undershoot == Rational(0));
    CHECK(!rep.premise_failure);
    CHECK(!rep.no_witness);
    CHECK(rep.ok());

    // Witness provenance at gap 1: the search passed over the three smaller
    // masks before settling on the carrier. Each rejection re-checks.
    REQUIRE(rep.chain->steps.size() == 3);
    const ChainStep& step = rep.chain->steps[1];
    CHECK(step.gap == 1);
    CHECK(step.self_required);
    CHECK(step.chosen == PointSet::full(2));
    BinaryRelation kv = BinaryRelation::named(RelationKind::KernelSubVee);
    CHECK(!kv.holds(s, PointSet::of(2, {0}), PointSet::empty(2)));  // F_1 rel {} fails
    CHECK(!kv.holds(s, PointSet::of(2, {0}), PointSet::of(2, {0})));// self fails: not clopen
    CHECK(!kv.holds(s, PointSet::of(2, {0}), PointSet::of(2, {1})));// F_1 rel {1} fails
}

TEST_CASE("exact insertion degenerate and discrete cases") {
    Topology one = named_space("indiscrete", 1);
    FiniteFunction z = FiniteFunction::constant(1, Rational(0));
    InsertionReport rep = insert(one, z, z, RelationKind::KernelSubVee, CutsetPolicy::Strict,
                                 InsertionMode::Exact);
    CHECK(rep.ok());
    CHECK(*rep.h == z);
    REQUIRE(rep.chain);
    REQUIRE(rep.chain->sets.size() == 2);
    CHECK(rep.chain->sets[0] == PointSet::empty(1));
    CHECK(rep.chain->sets[1] == PointSet::full(1));

    Topology d2 = named_space("discrete", 2);
    FiniteFunction g = fn({Rational(0), Rational(0)});
    FiniteFunction f = fn({Rational(0), Rational(1)});
    InsertionReport rep2 = insert(d2, g, f, RelationKind::KernelSubVee, CutsetPolicy::Strict,
                                  InsertionMode::Exact);
    CHECK(rep2.ok());
    CHECK(*rep2.h == f);
    REQUIRE(rep2.chain);
    REQUIRE(rep2.chain->sets.size() == 3);
    CHECK(rep2.chain->sets[1] == PointSet::of(2, {0}));
}

TEST_CASE("witness failure carries a complete, independently checkable certificate") {
    Topology dbl = double_limit_space();
    FiniteFunction g = fn({Rational(0), Rational(1), Rational(0)});
    FiniteFunction f = fn({Rational(0), Rational(1), Rational(1)});
    InsertionReport rep = insert(dbl, g, f, RelationKind::KernelSubVee, CutsetPolicy::Strict,
                                 InsertionMode::Exact, Preset::Cor1);

    CHECK(rep.status == InsertStatus::NoWitness);
    CHECK(!rep.h);
    CHECK(!rep.chain);
    CHECK(!rep.ok());
    REQUIRE(rep.no_witness);
    const NoWitnessCert& cert = *rep.no_witness;
    CHECK(cert.gap == 1);
    CHECK(cert.self_required);
    PointSet f_le_0 = PointSet::of(3, {0});
    PointSet g_le_0 = PointSet::of(3, {0, 2});
    CHECK(std::count(cert.lower_constraints.begin(), cert.lower_constraints.end(), f_le_0) == 1);
    CHECK(std::count(cert.upper_constraints.begin(), cert.upper_constraints.end(), g_le_0) == 1);

    // Every one of the 8 candidate sets violates some recorded constraint.
    BinaryRelation kv = BinaryRelation::named(RelationKind::KernelSubVee);
    for (std::uint32_t m = 0; m < 8; ++m)
        CHECK(!satisfies_step(dbl, kv, cert, PointSet::from_mask(3, m)));
}

TEST_CASE("premise failure reports the first offending gap pair") {
    Topology dbl = double_limit_space();
    FiniteFunction f = fn({Rational(1), Rational(0), Rational(1)});
    InsertionReport rep = insert(dbl, f, f, RelationKind::KernelSubVee, CutsetPolicy::Strict,
                                 InsertionMode::Exact);
    CHECK(rep.status == InsertStatus::PremiseFailure);
    CHECK(!rep.ok());
    REQUIRE(rep.premise_failure);
    CHECK(rep.premise_failure->i == 1);
    CHECK(rep.premise_failure->j == 1);
    CHECK(rep.premise_failure->upper_set == PointSet::of(3, {1}));
    CHECK(rep.premise_failure->lower_set == PointSet::of(3, {1}));
    BinaryRelation kv = BinaryRelation::named(RelationKind::KernelSubVee);
    CHECK(!kv.holds(dbl, rep.premise_failure->upper_set, rep.premise_failure->lower_set));
}

TEST_CASE("literal mode trades exact bounds for one grid step of slack") {
    Topology dbl = double_limit_space();
    FiniteFunction g = fn({Rational(0), Rational(1), Rational(0)});
    FiniteFunction f = fn({Rational(0), Rational(1), Rational(1)});

    CHECK(literal_grid(g, f) == std::vector<Rational>{Rational(-1), Rational(0), kHalf,
                                                      Rational(1), Rational(2)});

    InsertionReport rep = insert(dbl, g, f, RelationKind::KernelSubVee, CutsetPolicy::Strict,
                                 InsertionMode::Literal);
    CHECK(rep.status == InsertStatus::Success);
    REQUIRE(rep.chain);
    REQUIRE(rep.chain->sets.size() == 6);
    CHECK(rep.chain->sets[0] == PointSet::empty(3));
    CHECK(rep.chain->sets[1] == PointSet::empty(3));
    CHECK(rep.chain->sets[2] == PointSet::empty(3));
    CHECK(rep.chain->sets[3] == PointSet::of(3, {0, 2}));
    CHECK(rep.chain->sets[4] == PointSet::full(3));
    CHECK(rep.chain->sets[5] == PointSet::full(3));
    REQUIRE(rep.h);
    CHECK(*rep.h == fn({kHalf, Rational(1), kHalf}));
    CHECK(rep.bounds_ok);        // within one grid step
    CHECK(!rep.bounds_exact);    // h(0) = 1/2 > f(0) = 0
    CHECK(rep.max_overshoot == kHalf);
    CHECK(rep.max_undershoot == Rational(0));
    CHECK(!rep.contra_ok);       // the fiber over 1 is {1}, not closed here
    CHECK(!rep.identity_ok);
    CHECK(!rep.ok());            // literal success is reported, not certified
}

TEST_CASE("mirror chain space satisfies the closed-interpolant package") {
    Topology m = Topology::from_opens(3, {PointSet::empty(3), PointSet::of(3, {2}),
                                          PointSet::of(3, {1, 2}), PointSet::full(3)});
    FiniteFunction g = FiniteFunction::constant(3, Rational(0));
    FiniteFunction f = fn({Rational(0), Rational(1), Rational(1)});
    ClassFlags lo = classify(m, g);
    ClassFlags up = classify(m, f);
    CHECK(lo.lscc);
    CHECK(up.uscc);
    InsertionReport rep = insert(m, g, f, RelationKind::KernelSubVee, CutsetPolicy::Strict,
                                 InsertionMode::Exact, Preset::Cor2);
    CHECK(rep.relation == RelationKind::ClosedInterpolant); // preset pins it
    CHECK(rep.status == InsertStatus::Success);
    CHECK(rep.ok());
    CHECK(rep.bounds_exact);
}

TEST_CASE("input validation and preset gates") {
    Topology s = named_space("sierpinski", 2);
    FiniteFunction f = fn({Rational(0), Rational(1)});
    FiniteFunction z = FiniteFunction::constant(2, Rational(0));

    CHECK_THROWS_AS(insert(s, FiniteFunction::constant(3, Rational(0)),
                           FiniteFunction::constant(3, Rational(1)), RelationKind::KernelSubVee,
                           CutsetPolicy::Strict, InsertionMode::Exact),
                    PreconditionError);
    CHECK_THROWS_AS(insert(s, f, z, RelationKind::KernelSubVee, CutsetPolicy::Strict,
                           InsertionMode::Exact),
                    PreconditionError);

    // f is not uscc on this space, so it cannot serve as a cor1 lower bound.
    CHECK_THROWS_WITH_AS(insert(s, f, f, RelationKind::KernelSubVee, CutsetPolicy::Strict,
                                InsertionMode::Exact, Preset::Cor1),
                         doctest::Contains("uscc"), PreconditionError);
    CHECK_THROWS_WITH_AS(insert(s, z, f, RelationKind::KernelSubVee, CutsetPolicy::Strict,
                                InsertionMode::Exact, Preset::Cor2),
                         doctest::Contains("uscc"), PreconditionError);

    CHECK(!preset_gate_violation(Preset::Cor1, s, z, f));
    CHECK(preset_gate_violation(Preset::Cor3, s, f, f));
    CHECK(!preset_gate_violation(Preset::Raw, s, f, z)); // raw gates nothing

    CHECK(!preset_relation(Preset::Raw));
    CHECK(preset_relation(Preset::Cor1) == RelationKind::KernelSubVee);
    CHECK(preset_relation(Preset::Cor3) == RelationKind::KernelSubVee);
    CHECK(preset_relation(Preset::Cor2) == RelationKind::ClosedInterpolant);
    CHECK(preset_relation(Preset::Cor4) == RelationKind::ClosedInterpolant);
}

TEST_CASE("chain validation re-derives every obligation") {
    Topology s = named_space("sierpinski", 2);
    FiniteFunction g = FiniteFunction::constant(2, Rational(0));
    FiniteFunction f = fn({Rational(0), Rational(1)});
    std::vector<Rational> levels = build_levels(g, f);
    CutSetFamily fu = make_cutsets(s, f, CutsetPolicy::Strict, levels);
    CutSetFamily gl = make_cutsets(s, g, CutsetPolicy::Strict, levels);
    BinaryRelation kv = BinaryRelation::named(RelationKind::KernelSubVee);

    InterpolateResult built = interpolate(fu, gl, kv, s, InsertionMode::Exact);
    REQUIRE(built.chain);
    CHECK(!validate_chain(*built.chain, fu, gl, kv, s, InsertionMode::Exact));

    InterpolationChain bad = *built.chain;
    bad.sets[1] = PointSet::of(2, {0});
    auto msg = validate_chain(bad, fu, gl, kv, s, InsertionMode::Exact);
    REQUIRE(msg);
    CHECK(*msg == "F_1 rel H_1 fails");

    bad = *built.chain;
    bad.sets[2] = PointSet::of(2, {0});
    CHECK(validate_chain(bad, fu, gl, kv, s, InsertionMode::Exact) ==
          std::optional<std::string>("H_K is not the carrier"));

    bad = *built.chain;
    bad.sets[0] = PointSet::full(2);
    CHECK(validate_chain(bad, fu, gl, kv, s, InsertionMode::Exact) ==
          std::optional<std::string>("H_0 is not empty"));

    bad = *built.chain;
    bad.sets.pop_back();
    CHECK(validate_chain(bad, fu, gl, kv, s, InsertionMode::Exact) ==
          std::optional<std::string>("chain gap count mismatch"));

    // Monotonicity violations need a longer grid to stage.
    Topology dbl = double_limit_space();
    FiniteFunction g3 = fn({Rational(0), Rational(1), Rational(0)});
    FiniteFunction f3 = fn({Rational(0), Rational(1), Rational(1)});
    std::vector<Rational> grid = literal_grid(g3, f3);
    CutSetFamily fu3 = make_cutsets(dbl, f3, CutsetPolicy::Strict, grid);
    CutSetFamily gl3 = make_cutsets(dbl, g3, CutsetPolicy::Strict, grid);
    InterpolateResult lit = interpolate(fu3, gl3, kv, dbl, InsertionMode::Literal);
    REQUIRE(lit.chain);
    CHECK(!validate_chain(*lit.chain, fu3, gl3, kv, dbl, InsertionMode::Literal));
    InterpolationChain corrupt = *lit.chain;
    corrupt.sets[1] = PointSet::of(3, {1});
    corrupt.sets[2] = PointSet::empty(3);
    CHECK(validate_chain(corrupt, fu3, gl3, kv, dbl, InsertionMode::Literal) ==
          std::optional<std::string>("chain not monotone at gap 1"));
}

TEST_CASE("extraction rejects malformed chains") {
    InterpolationChain empty;
    CHECK_THROWS_AS(extract(empty), PreconditionError);
    InterpolationChain skewed;
    skewed.levels = {Rational(0), Rational(1)};
    skewed.sets = {PointSet::empty(2), PointSet::full(2)};
    CHECK_THROWS_AS(extract(skewed), PreconditionError);
}

TEST_CASE("chain search respects the carrier cap") {
    Topology big = named_space("discrete", 13);
    FiniteFunction z = FiniteFunction::constant(13, Rational(0));
    std::vector<Rational> levels{Rational(0)};
    CutSetFamily fam = make_cutsets(big, z, CutsetPolicy::Strict, levels);
    BinaryRelation kv = BinaryRelation::named(RelationKind::KernelSubVee);
    CHECK_THROWS_AS(interpolate(fam, fam, kv, big, InsertionMode::Exact), CapExceeded);
}

TEST_CASE("closure of the upper cut sets is itself a valid chain where the package applies") {
    // Wherever the kernel-vee package is available (closure of opens open,
    // lower uscc, upper lscc), H_i := closure(F_i) satisfies every chain
    // obligation directly; the engine must therefore also succeed, and its
    // own first-found chain must validate.
    const std::vector<Rational> pool{Rational(0), kHalf, Rational(1)};
    BinaryRelation kv = BinaryRelation::named(RelationKind::KernelSubVee);
    int instances = 0;
    for (int n = 1; n <= 3; ++n) {
        for (const Topology& t : enumerate_topologies(n).spaces) {
            if (!is_extremally_disconnected(t)) continue;
            std::vector<FiniteFunction> all;
            std::vector<int> idx(static_cast<std::size_t>(n), 0);
            while (true) {
                std::vector<Rational> vs;
                for (int i : idx) vs.push_back(pool[static_cast<std::size_t>(i)]);
                all.push_back(fn(vs));
                int p = 0;
                while (p < n && idx[static_cast<std::size_t>(p)] == 2) idx[static_cast<std::size_t>(p++)] = 0;
                if (p == n) break;
                ++idx[static_cast<std::size_t>(p)];
            }
            for (const FiniteFunction& g : all) {
                if (!classify(t, g).uscc) continue;
                for (const FiniteFunction& f : all) {
                    if (!compare_le(g, f)) continue;
                    if (!classify(t, f).lscc) continue;
                    ++instances;
                    std::vector<Rational> levels = build_levels(g, f);
                    CutSetFamily fu = make_cutsets(t, f, CutsetPolicy::Strict, levels);
                    CutSetFamily gl = make_cutsets(t, g, CutsetPolicy::Strict, levels);
                    REQUIRE(check_premise(fu, gl, kv, t).passed);

                    InterpolationChain shortcut;
                    shortcut.levels = levels;
                    for (int i = 0; i < fu.gap_count(); ++i)
                        shortcut.sets.push_back(t.closure(fu.gap(i)));
                    CHECK(!validate_chain(shortcut, fu, gl, kv, t, InsertionMode::Exact));

                    InsertionReport rep = insert(t, g, f, RelationKind::KernelSubVee,
                                                 CutsetPolicy::Strict, InsertionMode::Exact,
                                                 Preset::Cor1);
                    REQUIRE(rep.status == InsertStatus::Success);
                    CHECK(rep.ok());
                    CHECK(rep.bounds_exact);
                    CHECK(!validate_chain(*rep.chain, fu, gl, kv, t, InsertionMode::Exact));
                }
            }
        }
    }
    CHECK(instances > 500);
}

TEST_CASE("insertion is deterministic") {
    Topology dbl = double_limit_space();
    FiniteFunction g = fn({Rational(0), Rational(1), Rational(0)});
    FiniteFunction f = fn({Rational(0), Rational(1), Rational(1)});
    for (InsertionMode mode : {InsertionMode::Exact, InsertionMode::Literal}) {
        InsertionReport a = insert(dbl, g, f, RelationKind::KernelSubVee, CutsetPolicy::Strict, mode);
        InsertionReport b = insert(dbl, g, f, RelationKind::KernelSubVee, CutsetPolicy::Strict, mode);
        CHECK(a.status == b.status);
        CHECK(a.h == b.h);
        CHECK((a.chain.has_value() == b.chain.has_value()));
        if (a.chain) CHECK(a.chain->sets == b.chain->sets);
        CHECK(a.bounds_ok == b.bounds_ok);
        CHECK(a.bounds_exact == b.bounds_exact);
        CHECK(a.contra_ok == b.contra_ok);
        CHECK(a.identity_ok == b.identity_ok);
        CHECK(a.max_overshoot == b.max_overshoot);
        CHECK(a.max_undershoot == b.max_undershoot);
    }
}

TEST_CASE("every exact success across the catalog verifies cleanly") {
    const std::vector<Rational> pool{Rational(0), Rational(1)};
    for (int n = 1; n <= 3; ++n) {
        for (const Topology& t : enumerate_topologies(n).spaces) {
            const int combos = 1 << n;
            for (int gm = 0; gm < combos; ++gm) {
                for (int fm = gm; fm < combos; ++fm) {
                    if ((gm & fm) != gm) continue; // need g <= f pointwise
                    std::vector<Rational> gv, fv;
                    for (int x = 0; x < n; ++x) {
                        gv.push_back(pool[static_cast<std::size_t>((gm >> x) & 1)]);
                        fv.push_back(pool[static_cast<std::size_t>((fm >> x) & 1)]);
                    }
                    for (RelationKind k : {RelationKind::KernelSubVee,
                                           RelationKind::ClosedInterpolant}) {
                        InsertionReport rep = insert(t, fn(gv), fn(fv), k, CutsetPolicy::Strict,
                                                     InsertionMode::Exact);
                        if (rep.status == InsertStatus::Success) {
                            CHECK(rep.ok());
                            CHECK(rep.bounds_exact);
                        }
                        InsertionReport lit = insert(t, fn(gv), fn(fv), k, CutsetPolicy::Strict,
                                                     InsertionMode::Literal);
                        if (lit.status == InsertStatus::Success) CHECK(lit.bounds_ok);
                    }
                }
            }
        }
    }
}
