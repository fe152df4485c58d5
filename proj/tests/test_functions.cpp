#include <doctest.h>

#include "fintop/classify.hpp"
#include "fintop/errors.hpp"
#include "fintop/oracle.hpp"
#include "fintop/spacegen.hpp"

using namespace fintop;

namespace {

const std::vector<Rational> kThirds{Rational(0), Rational(1, 2), Rational(1)};

FiniteFunction fn(std::vector<long long> nums, long long den = 1) {
    std::vector<Rational> vs;
    for (long long p : nums) vs.emplace_back(p, den);
    return FiniteFunction(std::move(vs));
}

} // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-4/2") == Rational(-2));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(to_string(Rational(1, 2)) == "1/2");
    CHECK(to_string(Rational(-3, 6)) == "-1/2");
    CHECK(to_string(Rational(5)) == "5");
    CHECK(midpoint(Rational(0), Rational(1)) == Rational(1, 2));
    CHECK(midpoint(Rational(1, 3), Rational(1, 3)) == Rational(1, 3));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("0.5"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("two"), ParseError);
}

TEST_CASE("level sets and fibers") {
    FiniteFunction f = fn({0, 1, 0});
    CHECK(f.size() == 3);
    CHECK(f.at(1) == Rational(1));
    CHECK(f.value_set() == std::vector<Rational>{Rational(0), Rational(1)});
    CHECK(f.below(Rational(1)) == PointSet::of(3, {0, 2}));
    CHECK(f.at_most(Rational(0)) == PointSet::of(3, {0, 2}));
    CHECK(f.above(Rational(0)) == PointSet::of(3, {1}));
    CHECK(f.at_least(Rational(1)) == PointSet::of(3, {1}));
    CHECK(f.fiber(Rational(0)) == PointSet::of(3, {0, 2}));
    CHECK(f.fiber(Rational(5)) == PointSet::empty(3));
    CHECK(f.plus(Rational(1, 2)).at(0) == Rational(1, 2));
    CHECK(f.negated().at(1) == Rational(-1));
    CHECK(f.to_string() == "0, 1, 0");
    CHECK_THROWS_AS(f.at(3), PreconditionError);
}

TEST_CASE("pointwise order and shared levels") {
    CHECK(compare_le(fn({0, 0}), fn({0, 0})));
    CHECK(compare_le(fn({0, 0}), fn({0, 1})));
    CHECK(!compare_le(fn({0, 1}), fn({1, 0})));
    CHECK_THROWS_AS(compare_le(fn({0}), fn({0, 1})), PreconditionError);

    CHECK(build_levels(fn({0, 0}), fn({1, 1})) ==
          std::vector<Rational>{Rational(0), Rational(1)});
    CHECK(build_levels(fn({0, 0}), fn({0, 0})) == std::vector<Rational>{Rational(0)});
    CHECK(build_levels(fn({0, 1}, 2), fn({1, 2}, 2)) ==
          std::vector<Rational>{Rational(0), Rational(1, 2), Rational(1)});
    CHECK_THROWS_AS(build_levels(FiniteFunction(std::vector<Rational>{}),
                                 FiniteFunction(std::vector<Rational>{})),
                    PreconditionError);
}

TEST_CASE("classification on the two-point spaces") {
    Topology s = named_space("sierpinski", 2);

    ClassFlags up = classify(s, fn({0, 1}));
    CHECK(up.usc);
    CHECK(!up.lsc);
    CHECK(!up.uscc);
    CHECK(up.lscc);
    CHECK(!up.us_baire_one);
    CHECK(up.ls_baire_one);
    CHECK(!up.contra_continuous);
    CHECK(!up.continuous);

    ClassFlags down = classify(s, fn({1, 0}));
    CHECK(!down.usc);
    CHECK(down.lsc);
    CHECK(down.uscc);
    CHECK(!down.lscc);
    CHECK(!down.contra_continuous);

    ClassFlags flat = classify(s, FiniteFunction::constant(2, Rational(1, 3)));
    CHECK(flat.usc);
    CHECK(flat.lsc);
    CHECK(flat.uscc);
    CHECK(flat.lscc);
    CHECK(flat.us_baire_one);
    CHECK(flat.ls_baire_one);
    CHECK(flat.contra_continuous);
    CHECK(flat.continuous);

    // On the discrete carrier everything is clopen, so every flag holds.
    ClassFlags disc = classify(named_space("discrete", 2), fn({0, 1}));
    CHECK(disc.usc);
    CHECK(disc.lsc);
    CHECK(disc.uscc);
    CHECK(disc.lscc);
    CHECK(disc.contra_continuous);
    CHECK(disc.continuous);

    CHECK_THROWS_AS(classify(s, fn({0, 1, 2})), PreconditionError);
}

TEST_CASE("classifier laws over the n <= 3 catalog") {
    for (int n = 1; n <= 3; ++n) {
        for (const Topology& t : enumerate_topologies(n).spaces) {
            for (const FiniteFunction& f : all_grid_functions(n, kThirds)) {
                ClassFlags c = classify(t, f);
                // Finite-carrier collapses.
                CHECK(c.us_baire_one == c.uscc);
                CHECK(c.ls_baire_one == c.lscc);
                CHECK(c.contra_continuous == c.continuous);
                // Two-sided semicontinuity is continuity.
                CHECK((c.usc && c.lsc) == c.continuous);
                // Mirror symmetry and shift invariance.
                ClassFlags m = classify(t, f.negated());
                CHECK(c.usc == m.lsc);
                CHECK(c.lsc == m.usc);
                CHECK(c.uscc == m.lscc);
                CHECK(c.lscc == m.uscc);
                ClassFlags sh = classify(t, f.plus(Rational(7, 3)));
                CHECK(c.usc == sh.usc);
                CHECK(c.lsc == sh.lsc);
                CHECK(c.uscc == sh.uscc);
                CHECK(c.lscc == sh.lscc);
                CHECK(c.contra_continuous == sh.contra_continuous);
                CHECK(c.continuous == sh.continuous);
            }
        }
    }
}
