#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "factorlens/monoid.hpp"

using namespace factorlens;

namespace {

AtomPresentation numerical_23() {
    return make_presentation(1, {{2}, {3}}, Vec{1});
}

}  // namespace

TEST_CASE("factorizations of <2,3>") {
    AtomPresentation p = numerical_23();
    auto z6 = factorizations(p, {6});
    REQUIRE(z6.size() == 2);
    CHECK(z6[0] == Vec({0, 2}));
    CHECK(z6[1] == Vec({3, 0}));
    CHECK(length_set(p, {6}) == LengthSet::of({2, 3}));
    CHECK(length_set(p, {12}) == LengthSet::of({4, 5, 6}));
    CHECK(length_set(p, {1}).empty());
    CHECK(length_set(p, {0}) == LengthSet::of({0}));
}

TEST_CASE("unions and budget semantics") {
    AtomPresentation p = numerical_23();
    UnionsResult u = unions(p, 4, 1'000'000);
    CHECK(u.unions[1] == LengthSet::of({1}));
    CHECK(u.unions[2] == LengthSet::of({2, 3}));
    CHECK(u.unions[3] == LengthSet::of({2, 3, 4}));
    CHECK(u.unions[4] == LengthSet::of({3, 4, 5, 6}));
    CHECK(u.lambda[4] == 3);
    CHECK(u.rho[4] == 6);
    CHECK_THROWS_AS(unions(p, 6, 3), ResourceError);
}

TEST_CASE("distance and catenary degree") {
    CHECK(distance({3, 0}, {0, 2}) == 3);
    CHECK(distance({2, 1}, {2, 1}) == 0);
    // common part (1,0,0); remainders (3,1,0) and (0,0,2) have lengths 4, 2
    CHECK(distance({4, 1, 0}, {1, 0, 2}) == 4);
    AtomPresentation p = numerical_23();
    CHECK(catenary_degree(p, {6}) == 3);
    CHECK(catenary_degree(p, {2}) == 0);  // unique factorization
    CHECK(catenary_degree_up_to(p, 6) == 3);
}

TEST_CASE("omega via Hilbert basis matches the bounded definition") {
    AtomPresentation p = numerical_23();
    CHECK(omega(p, 0) == 2);  // u = 2: minimal multiples e_2 and 3+3
    CHECK(omega(p, 1) == 3);  // u = 3: minimal multiples e_3 and 2+2+2
    CHECK(omega_element(p, {0}) == 0);

    // definition-based oracle: max over minimal z in D_u of |z|, found by a
    // bounded scan (complete here because omega is small)
    for (std::size_t ui = 0; ui < 2; ++ui) {
        Int target = p.atoms[ui][0];
        std::vector<Vec> d_u;
        for (Int z2 = 0; z2 <= 6; ++z2)
            for (Int z3 = 0; z3 <= 6; ++z3) {
                Int val = 2 * z2 + 3 * z3 - target;
                bool in_h = val == 0 || val >= 2;  // H = <2,3> = {0,2,3,4,...}
                if ((z2 || z3) && in_h) d_u.push_back({z2, z3});
            }
        Int expected = 0;
        for (const auto& z : d_u) {
            bool minimal = true;
            for (const auto& w : d_u)
                if (w != z && leq_componentwise(w, z)) minimal = false;
            if (minimal) expected = std::max(expected, z[0] + z[1]);
        }
        CHECK(omega(p, ui) == expected);
    }
}

TEST_CASE("tame degree") {
    AtomPresentation p = numerical_23();
    TameResult t2 = tame_degree(p, 0, 5, 1'000'000);
    CHECK(t2.value <= t2.ceiling);
    CHECK(t2.value == 3);  // at a = 6: (0,2) |-> (3,0) has distance 3
    CHECK(t2.closed);      // meets the ceiling rho_{omega(H,2)} = rho_2 = 3
    // free (factorial) monoid: tame degree 0, reported partial
    AtomPresentation freep = make_presentation(2, {{1, 0}, {0, 1}}, Vec{1, 1});
    TameResult tf = tame_degree(freep, 0, 4, 1'000'000);
    CHECK(tf.value == 0);
    CHECK(!tf.closed);  // ceiling rho_1 = 1 > 0
}

TEST_CASE("verify_atoms") {
    CHECK(verify_atoms(numerical_23()).ok);
    AtomPresentation bad = make_presentation(1, {{2}, {3}, {5}}, Vec{1});
    AtomCheck ac = verify_atoms(bad);
    CHECK(!ac.ok);
    CHECK(bad.atoms[ac.bad_index] == Vec{5});
    CHECK(coord_sum(ac.witness) >= 2);
}

TEST_CASE("grading discovery") {
    AtomPresentation p = make_presentation(2, {{1, -1}, {-1, 2}});
    for (const auto& a : p.atoms) CHECK(dot(p.grading, a) >= 1);
    CHECK_THROWS_AS(make_presentation(2, {{1, 0}, {-1, 0}}), UnsupportedPresentation);
    CHECK_THROWS_AS(make_presentation(1, {{0}}, Vec{1}), UnsupportedPresentation);
}

TEST_CASE("zero-sum presentation of Z_3") {
    ZeroSumPresentation z = zero_sum_presentation({3});
    CHECK(z.group_elements.size() == 3);
    REQUIRE(z.pres.atom_count() == 4);
    // atoms over G_0 = ([0],[1],[2]): the zero element, 1+1+1, 1+2, 2+2+2
    std::set<Vec> atoms(z.pres.atoms.begin(), z.pres.atoms.end());
    CHECK(atoms.count({1, 0, 0}));
    CHECK(atoms.count({0, 3, 0}));
    CHECK(atoms.count({0, 1, 1}));
    CHECK(atoms.count({0, 0, 3}));
    CHECK(z.davenport == 3);
    UnionsResult u = unions(z.pres, 3, 1'000'000);
    CHECK(u.unions[2] == LengthSet::of({2, 3}));
}

TEST_CASE("zero-sum over a subset") {
    std::vector<Vec> subset = {{1}, {2}};  // Z_3 without the zero element
    ZeroSumPresentation z = zero_sum_presentation({3}, &subset);
    CHECK(z.pres.atom_count() == 3);
    CHECK(z.davenport == 3);
}

TEST_CASE("product and product_unions") {
    AtomPresentation p = numerical_23();
    AtomPresentation sq = product({p, p});
    CHECK(sq.dim == 2);
    CHECK(sq.atom_count() == 4);
    CHECK(length_set(sq, {6, 6}) == LengthSet::of({4, 5, 6}));  // {2,3} + {2,3}

    // product rule against the direct computation on the product lattice
    UnionsResult direct = unions(sq, 4, 5'000'000);
    UnionsResult comp = unions(p, 4, 1'000'000);
    for (int k = 1; k <= 4; ++k)
        CHECK(product_unions({comp.unions, comp.unions}, k) == direct.unions[k]);

    // free x free: U_k = {k}
    std::vector<LengthSet> free_unions;
    for (int nu = 0; nu <= 4; ++nu) free_unions.push_back(LengthSet::of({nu}));
    CHECK(product_unions({free_unions, free_unions}, 4) == LengthSet::of({4}));
}

TEST_CASE("mixed-sign factorization search terminates and is exact") {
    // x + y and the relation atom (1,-1): grading forces finite search
    AtomPresentation p = make_presentation(2, {{1, 0}, {0, 1}, {1, -1}});
    Vec x{2, 1};
    auto zs = factorizations(p, x);
    // (2,1,0) and (1,2,1): 1*(1,0)+2*(0,1)+1*(1,-1) = (2,1)
    std::set<Vec> got(zs.begin(), zs.end());
    CHECK(got.count({2, 1, 0}));
    for (const auto& z : zs) {
        Vec sum(2, 0);
        for (std::size_t i = 0; i < 3; ++i) sum = add(sum, scale(z[i], p.atoms[i]));
        CHECK(sum == x);
    }
}
