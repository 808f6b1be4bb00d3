#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "factorlens/krull.hpp"

using namespace factorlens;

TEST_CASE("realize({2,3}): structure") {
    RealizedKrull r = realize(LengthSet::of({2, 3}));
    CHECK(r.m == std::vector<Int>({2, 2}));
    CHECK(r.pres.dim == 4);
    REQUIRE(r.pres.atom_count() == 5);
    CHECK(r.pres.atoms[r.u0_index[0]] == Vec({1, 1, -1, -1}));
    for (const auto& a : r.pres.atoms) CHECK(dot(r.pres.grading, a) > 0);
    CHECK(verify_atoms(r.pres).ok);
    CHECK_THROWS_AS(realize(LengthSet::of({3})), std::invalid_argument);
    CHECK_THROWS_AS(realize(LengthSet::of({1, 2})), std::invalid_argument);
}

TEST_CASE("gamma profile and membership") {
    RealizedKrull r = realize(LengthSet::of({2, 3}));
    GammaProfile g = gamma_profile(r, {1, 1, -1, -1});
    CHECK(g.gamma == std::vector<Int>({1, -1}));
    CHECK(g.gamma_prime == std::vector<Int>({0, 1}));
    CHECK(g.C == 1);
    CHECK(g.k == 0);
    CHECK(membership(r, {1, 1, -1, -1}));
    CHECK(!membership(r, {-1, 0, 0, 0}));
    CHECK(!membership(r, {0, 0, 1, -1}));  // gamma_2 = -1 but gamma_1 = 0
    CHECK(closed_length_set(r, {1, 1, -1, -1}) == LengthSet::of({1}));  // u_20 is an atom
}

TEST_CASE("closed length sets") {
    RealizedKrull r = realize(LengthSet::of({2, 3}));
    // the full block-1 element factors as u_11 + u_12 or u_20 + basis of block 2
    CHECK(closed_length_set(r, {1, 1, 0, 0}) == LengthSet::of({2, 3}));
    CHECK(closed_length_set(r, {2, 2, 0, 0}) == LengthSet::of({4, 5, 6}));
    CHECK(closed_length_set(r, {-1, 0, 0, 0}).empty());
    // brute-force equivalence on all sums of <= 3 atoms
    CHECK(verify_realization(r, 3).ok);
}

TEST_CASE("negative control: perturbed atom table fails verification") {
    RealizedKrull r = realize(LengthSet::of({2, 3}));
    r.pres.atoms[r.u0_index[0]] = Vec({1, 1, 0, -1});  // damage u_20 (grading stays positive)
    VerifyReport rep = verify_realization(r, 3);
    CHECK(!rep.ok);
}

TEST_CASE("unions and rho_k of realizations") {
    RealizedKrull r = realize(LengthSet::of({2, 3}));
    CHECK(krull_union(r, 0) == LengthSet::of({0}));
    CHECK(krull_union(r, 1) == LengthSet::of({1}));
    CHECK(krull_union(r, 2) == LengthSet::of({2, 3}));
    CHECK(krull_rho(r, 2) == 3);
    CHECK(krull_rho(r, 4) == 6);
    CHECK(krull_rho(r, 5) == 7);  // 2*3 + 1

    RealizedKrull r25 = realize(LengthSet::of({2, 5}));
    CHECK(krull_union(r25, 2) == LengthSet::of({2, 5}));
    CHECK(krull_rho(r25, 4) == 10);
}

TEST_CASE("admissible counterexample instance") {
    CounterexampleSpec spec = admissible_instance(2, 4);
    CHECK(spec.m == std::vector<Int>({0, 1, 5, 19, 57}));
    CHECK(spec.L[2] == LengthSet::of({2, 3, 5}));
    CHECK(spec.L[3] ==
          LengthSet::interval(3, 6).unite(LengthSet::of({7, 9, 11, 13, 15, 17, 19})));
    CHECK(validate_counterexample(spec) == 0);

    CounterexampleSpec broken = spec;
    broken.m[4] = 55;  // violates the growth condition at k = 5
    broken.L[4] = LengthSet::interval(4, 20).unite(
        [] {
            std::vector<Int> v;
            for (Int x = 21; x <= 55; x += 2) v.push_back(x);
            return LengthSet::from_values(v);
        }());
    CHECK(validate_counterexample(broken) == 5);
}

TEST_CASE("counterexample unions via the closed machinery") {
    CounterexampleSpec spec = admissible_instance(2, 4);
    CHECK(counterexample_unions(spec, 1) == LengthSet::of({1}));
    LengthSet u2 = counterexample_unions(spec, 2);
    CHECK(u2.intersect_interval(2, u2.max()) == spec.L[2]);
    CHECK(!u2.contains(4));  // the hole at min U_2 + 1
}
