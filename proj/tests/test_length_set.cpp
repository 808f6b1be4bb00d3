#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "factorlens/length_set.hpp"

using namespace factorlens;

TEST_CASE("construction sorts and dedups") {
    LengthSet l = LengthSet::from_values({7, 2, 4, 2});
    CHECK(l.values() == std::vector<Int>({2, 4, 7}));
    CHECK(l.contains(4));
    CHECK(!l.contains(3));
    CHECK(l.to_string() == "{2,4,7}");
    CHECK(LengthSet().to_string() == "{}");
    CHECK(LengthSet::interval(3, 2).empty());
}

TEST_CASE("delta set") {
    CHECK(delta_set(LengthSet::of({2, 4, 7})) == LengthSet::of({2, 3}));
    CHECK(delta_set(LengthSet::of({5})).empty());
    CHECK(delta_set(LengthSet()).empty());
}

TEST_CASE("elasticity") {
    CHECK(elasticity_of_set(LengthSet::of({2, 5})) == make_rational(5, 2));
    CHECK(elasticity_of_set(LengthSet::of({0})) == make_rational(1));
    CHECK(elasticity_of_set(LengthSet()) == make_rational(1));
    CHECK(elasticity_of_set(LengthSet::of({0, 3, 6})) == make_rational(2));  // L+ = {3,6}
}

TEST_CASE("sumset arithmetic") {
    LengthSet a = LengthSet::of({2, 3}), b = LengthSet::of({1, 5});
    CHECK(sumset(a, b) == LengthSet::of({3, 4, 7, 8}));
    CHECK(sumset(a, LengthSet()).empty());
    CHECK(nfold(2, a) == LengthSet::of({4, 5, 6}));
    CHECK(nfold(1, a) == a);
    CHECK(dilate(3, a) == LengthSet::of({6, 9}));
}

TEST_CASE("aap bound: frozen oracles") {
    auto w = minimal_aap_bound(LengthSet::of({0, 2, 4, 8}), 2);
    REQUIRE(w.has_value());
    CHECK(w->bound == 1);  // middle [1,7] n L = {2,4} is an AP with diff 2
    CHECK(w->residue == 0);

    CHECK(minimal_aap_bound(LengthSet::of({0, 1, 2}), 2) == std::nullopt);  // mixed residues
    CHECK(minimal_aap_bound(LengthSet::of({3, 5, 7}), 2)->bound == 0);
    CHECK(minimal_aap_bound(LengthSet::of({4}), 7)->bound == 0);
    CHECK(minimal_aap_bound(LengthSet(), 3)->bound == 0);
}

TEST_CASE("aap bound agrees with a direct scan") {
    std::mt19937 rng(123);
    for (int trial = 0; trial < 200; ++trial) {
        Int d = 1 + rng() % 4;
        Int base = rng() % 5;
        std::vector<Int> vals;
        int size = 1 + rng() % 7;
        for (int i = 0; i < size; ++i) vals.push_back(base + d * (rng() % 15));
        LengthSet l = LengthSet::from_values(vals);
        auto w = minimal_aap_bound(l, d);
        REQUIRE(w.has_value());
        // independent oracle: smallest M whose middle slice is empty or an AP
        Int expected = -1;
        for (Int m = 0; expected < 0; ++m) {
            LengthSet mid = l.intersect_interval(l.min() + m, l.max() - m);
            bool ok = mid.empty();
            if (!mid.empty()) {
                ok = true;
                const auto& v = mid.values();
                for (std::size_t i = 1; i < v.size(); ++i)
                    if (v[i] - v[i - 1] != d) ok = false;
            }
            if (ok) expected = m;
        }
        CHECK(w->bound == expected);
    }
}

TEST_CASE("properties: Delta range, AP closure under sumset, nfold elasticity") {
    std::mt19937 rng(321);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Int> vals;
        int size = 1 + rng() % 6;
        for (int i = 0; i < size; ++i) vals.push_back(1 + rng() % 20);
        LengthSet l = LengthSet::from_values(vals);

        LengthSet d = delta_set(l);
        if (!d.empty()) {
            CHECK(d.min() >= 1);
            CHECK(d.max() <= l.max() - l.min());
        }
        // minimal_aap_bound(L, d) == 0 iff L is an AP with difference d
        if (!d.empty() && d.size() == 1) {
            auto w = minimal_aap_bound(l, d.min());
            REQUIRE(w.has_value());
            CHECK(w->bound == 0);
        }
        // elasticity is invariant under n-fold sumsets
        for (Int n = 2; n <= 3; ++n)
            CHECK(elasticity_of_set(nfold(n, l)) == elasticity_of_set(l));
    }
    // two APs with the same difference sum to an AP with that difference
    std::mt19937 rng2(555);
    for (int trial = 0; trial < 50; ++trial) {
        Int d = 1 + rng2() % 5;
        auto ap = [&](Int start, Int len) {
            std::vector<Int> v;
            for (Int i = 0; i < len; ++i) v.push_back(start + i * d);
            return LengthSet::from_values(v);
        };
        LengthSet s = sumset(ap(1 + rng2() % 9, 1 + rng2() % 6), ap(1 + rng2() % 9, 1 + rng2() % 6));
        CHECK(is_ap_with_difference(s, d));
    }
}
