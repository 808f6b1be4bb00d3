#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "factorlens/family.hpp"

using namespace factorlens;

namespace {

FamilyView sample_view(int depth = 12) {
    FamilySpec spec;
    spec.generators = {LengthSet::of({1}), LengthSet::of({2, 3})};
    spec.closure_depth = depth;
    return FamilyView::from_spec(spec);
}

}  // namespace

TEST_CASE("unions of the {1},{2,3} family") {
    FamilyView v = sample_view();
    auto u = v.unions_up_to(4);
    CHECK(u[0] == LengthSet::of({0}));
    CHECK(u[1] == LengthSet::of({1}));
    CHECK(u[2] == LengthSet::of({2, 3}));
    CHECK(u[3] == LengthSet::of({2, 3, 4}));
    CHECK(u[4] == LengthSet::of({3, 4, 5, 6}));
    CHECK(v.lambda(4) == 3);
    CHECK(v.rho_bar(4) == 6);
    CHECK_THROWS_AS(v.unions_up_to(13), std::invalid_argument);
}

TEST_CASE("family delta and gcd law") {
    FamilyView v = sample_view();
    auto d = v.family_delta();
    CHECK(d.delta == LengthSet::of({1}));
    CHECK(d.exact);
    CHECK(v.gcd_min_delta_check());
}

TEST_CASE("fekete and accepted elasticity") {
    FamilyView v = sample_view();
    auto f = v.fekete_elasticity(10);
    CHECK(f.lower_bound == make_rational(3, 2));
    // each ratio stays below the family elasticity 3/2
    for (const auto& r : f.ratios) CHECK(r <= make_rational(3, 2));
    auto acc = v.accepted_elasticity_check(make_rational(3, 2), 10);
    CHECK(acc.accepted);
    CHECK(acc.witness_k == 2);
    CHECK(!v.accepted_elasticity_check(make_rational(8, 5), 10).accepted);
}

TEST_CASE("structure check on a well-behaved family") {
    FamilyView v = sample_view();
    auto r = v.structure_check(10);
    CHECK(r.applicable);
    CHECK(!r.trivial);
    CHECK(r.delta_min == 1);
    CHECK(r.q == 1);
    CHECK(r.l == 2);  // {2,3} is a member
    CHECK(r.windows_ok);
    CHECK(r.bounds_stabilized);
}

TEST_CASE("structure check trivial for a free-like family") {
    FamilySpec spec;
    spec.generators = {LengthSet::of({1})};
    spec.closure_depth = 8;
    auto r = FamilyView::from_spec(spec).structure_check(8);
    CHECK(r.trivial);
    CHECK(r.windows_ok);
}

TEST_CASE("spec validation") {
    FamilySpec bad;
    bad.closure_depth = 5;
    CHECK_THROWS_AS(FamilyView::from_spec(bad), std::invalid_argument);
    bad.generators = {LengthSet::of({0, 2})};
    CHECK_THROWS_AS(FamilyView::from_spec(bad), std::invalid_argument);
}

TEST_CASE("directedness properties hold within the horizon") {
    FamilySpec spec;
    spec.generators = {LengthSet::of({2, 5}), LengthSet::of({1, 3})};
    spec.closure_depth = 9;
    FamilyView v = FamilyView::from_spec(spec);
    auto u = v.unions_up_to(9);
    for (int h = 1; h <= 8; ++h)
        for (int k = 1; h + k <= 9; ++k) {
            LengthSet s = sumset(u[h], u[k]);
            for (Int x : s.values()) CHECK(u[h + k].contains(x));
            if (!u[h].empty() && !u[k].empty() && !u[h + k].empty()) {
                CHECK(u[h + k].min() <= u[h].min() + u[k].min());
                CHECK(u[h].max() + u[k].max() <= u[h + k].max());
            }
        }
}
