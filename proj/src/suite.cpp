#include "factorlens/suite.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "factorlens/family.hpp"
#include "factorlens/krull.hpp"
#include "factorlens/monoid.hpp"
#include "factorlens/power.hpp"
#include "factorlens/relations.hpp"

namespace factorlens {

namespace {

const std::vector<LengthSet> kRealizationTargets = {
    LengthSet::of({2, 3}), LengthSet::of({2, 5}), LengthSet::of({3, 4, 6}),
    LengthSet::of({2, 3, 5})};

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << what << "; ";
        }
    }
};

// ---- Criterion 1: the realization theorem on four prescribed length sets.
CriterionResult criterion_realization() {
    Check c;
    for (const auto& L : kRealizationTargets) {
        RealizedKrull r = realize(L);
        std::string tag = "L=" + L.to_string();
        c.expect(krull_union(r, static_cast<int>(L.min())) == L, tag + ": U_{minL} != L");

        LengthSet dh;
        for (int k = 1; k <= 5; ++k)
            for_each_atom_sum(r.pres, k, [&](const Vec& x) {
                dh = dh.unite(delta_set(closed_length_set(r, x)));
            });
        c.expect(!dh.empty() && !delta_set(L).empty() && dh.max() == delta_set(L).max(),
                 tag + ": max Delta(H) != max Delta(L)");

        for (Int l = 1; l <= 3; ++l)
            for (Int nu = 0; nu < L.min(); ++nu) {
                Int k = l * L.min() + nu;
                Int expected = l * L.max() + nu;
                if (krull_rho(r, static_cast<int>(k)) != expected) {
                    std::ostringstream w;
                    w << tag << ": rho_" << k << " != " << expected;
                    c.expect(false, w.str());
                }
            }
    }
    return {1, "length-set-realization", c.ok, c.detail.str()};
}

// ---- Criterion 2: closed length-set formula vs brute-force factorizations.
CriterionResult criterion_closed_form() {
    Check c;
    for (const auto& L : kRealizationTargets) {
        RealizedKrull r = realize(L);
        VerifyReport rep = verify_realization(r, 4);
        c.expect(rep.ok, "L=" + L.to_string() + ": " + rep.detail);
    }
    return {2, "closed-form-oracle-equivalence", c.ok, c.detail.str()};
}

// ---- Criterion 3: the power-monoid example for n = 2, 3.
bool pm_divides(const PowerSubmonoid& m, const FinSet& u, const FinSet& x) {
    if (u.max() > x.max()) return false;
    for (const auto& y : m.elements)
        if (y.max() == x.max() - u.max() && setsum(u, y) == x) return true;
    return false;
}

CriterionResult criterion_power_example() {
    Check c;
    for (Int n : {Int{2}, Int{3}}) {
        std::string tag = "n=" + std::to_string(n);
        FinSet box = example_interval_gen(), a = example_a_gen(n);

        PowerSubmonoid atoms_store = build_store({box, a}, 40);
        c.expect(atoms_store.atoms == std::vector<FinSet>({box, a}),
                 tag + ": atom set is not {[[0,1]], A}");
        for (const auto& x : atoms_store.elements) {
            if (x == LengthSet::of({0})) continue;
            LengthSet l = pm_length_set(atoms_store, x);
            c.expect(elasticity_of_set(l) < make_rational(2 * n),
                     tag + ": element with rho(X) >= 2n in store");
        }

        // rho_k by exhaustive enumeration (exact: min L(X) >= max X / 2n
        // forces max X <= 2nk) against the closed form, k in [2n, 2n+4].
        Int k_hi = 2 * n + 4;
        PowerSubmonoid big = build_store({box, a}, 2 * n * k_hi);
        std::map<Int, Int> rho_enum;
        for (const auto& x : big.elements) {
            LengthSet l = pm_length_set(big, x);
            for (Int k = 2 * n; k <= k_hi; ++k)
                if (l.contains(k) && x.max() <= 2 * n * k)
                    rho_enum[k] = std::max(rho_enum[k], l.max());
        }
        for (Int k = 2 * n; k <= k_hi; ++k)
            c.expect(rho_enum[k] == example_rho_k(n, k),
                     tag + ": rho_" + std::to_string(k) + " enumeration != 2n(k-1)+1");
        for (Int k = 2 * n; k < k_hi; ++k)
            c.expect(rho_enum[k + 1] - rho_enum[k] == 2 * n, tag + ": rho increment != 2n");

        // omega(H) = 2n+1, by the divisibility definition on all multisets of
        // at most 2n+2 atoms: every product divisible by an atom u has a
        // sub-product of <= 2n+1 factors divisible by u, and (2n+1)[[0,1]]
        // witnesses that 2n does not suffice for u = A.
        Int cap = 2 * n + 2;
        PowerSubmonoid div_store = build_store({box, a}, 2 * n * (cap + 1));
        Int omega_semantic = 0;
        bool bounded = true;
        for (const FinSet& u : {box, a}) {
            for (Int z1 = 0; z1 <= cap; ++z1)
                for (Int z2 = 0; z1 + z2 <= cap; ++z2) {
                    if (z1 + z2 == 0) continue;
                    FinSet x = LengthSet::of({0});
                    for (Int i = 0; i < z1; ++i) x = setsum(x, box);
                    for (Int i = 0; i < z2; ++i) x = setsum(x, a);
                    if (!pm_divides(div_store, u, x)) continue;
                    Int best = std::numeric_limits<Int>::max();
                    for (Int w1 = 0; w1 <= z1; ++w1)
                        for (Int w2 = 0; w2 <= z2; ++w2) {
                            if (w1 + w2 == 0 || (w1 == z1 && w2 == z2)) continue;
                            FinSet y = LengthSet::of({0});
                            for (Int i = 0; i < w1; ++i) y = setsum(y, box);
                            for (Int i = 0; i < w2; ++i) y = setsum(y, a);
                            if (pm_divides(div_store, u, y)) best = std::min(best, w1 + w2);
                        }
                    if (best == std::numeric_limits<Int>::max()) best = z1 + z2;
                    omega_semantic = std::max(omega_semantic, best);
                    if (best > 2 * n + 1) bounded = false;
                }
        }
        c.expect(bounded && omega_semantic == example_omega(n),
                 tag + ": omega(H) != 2n+1 on the bounded check");
    }
    return {3, "power-monoid-example", c.ok, c.detail.str()};
}

// ---- Criterion 4: the counterexample instance m = (0,1,5,19,57).
CriterionResult criterion_counterexample(Int budget) {
    Check c;
    CounterexampleSpec spec = admissible_instance(2, 4);
    c.expect(spec.m == std::vector<Int>({0, 1, 5, 19, 57}),
             "greedy instance is not (0,1,5,19,57)");
    c.expect(validate_counterexample(spec) == 0, "instance fails its own hypotheses");

    std::vector<LengthSet> closed(5);
    for (int k = 1; k <= 4; ++k) {
        closed[k] = counterexample_unions(spec, k);
        LengthSet upper = closed[k].intersect_interval(k, closed[k].empty() ? k : closed[k].max());
        c.expect(upper == counterexample_expected(spec, k),
                 "closed route: U_" + std::to_string(k) + " restricted != L_k");
    }

    // Independent route: brute-force unions of the truncated product
    // H_1 x H_2 x H_3 as a single lattice presentation.
    try {
        AtomPresentation h1 = make_presentation(1, {{1}}, Vec{1});
        AtomPresentation prod =
            product({h1, realize(spec.L[2]).pres, realize(spec.L[3]).pres});
        UnionsResult brute = unions(prod, 3, budget);
        for (int k = 1; k <= 3; ++k) {
            LengthSet upper =
                brute.unions[k].intersect_interval(k, brute.unions[k].empty() ? k
                                                                              : brute.unions[k].max());
            c.expect(upper == counterexample_expected(spec, k),
                     "brute route: U_" + std::to_string(k) + " restricted != L_k");
        }
        c.expect(brute.unions[3] == closed[3],
                 "brute vs closed U_3 mismatch on the 3-component truncation");
    } catch (const ResourceError& e) {
        c.expect(false, std::string("brute route hit the budget: ") + e.what());
    }

    Int prev_bound = -1;
    for (int k = 2; k <= 4; ++k) {
        c.expect(!counterexample_expected(spec, k).contains(spec.m[k - 1] + 3),
                 "hole at min U_k + 1 missing for k=" + std::to_string(k));
        auto w = minimal_aap_bound(counterexample_expected(spec, k), 1);
        c.expect(w.has_value() && w->bound > prev_bound,
                 "AAP bound at difference 1 not strictly increasing at k=" + std::to_string(k));
        if (w) prev_bound = w->bound;
    }
    return {4, "structure-theorem-counterexample", c.ok, c.detail.str()};
}

// ---- Criterion 5: exact elasticity 3/2 on three presentations.
CriterionResult criterion_elasticity() {
    Check c;
    auto check_rho = [&](const AtomPresentation& p, const std::string& tag) {
        ElasticityWitness w = exact_elasticity(p);
        c.expect(w.rho == make_rational(3, 2), tag + ": rho != 3/2");
        Vec lhs(p.dim, 0), rhs(p.dim, 0);
        for (std::size_t i = 0; i < p.atom_count(); ++i) {
            lhs = add(lhs, scale(w.pair.x[i], p.atoms[i]));
            rhs = add(rhs, scale(w.pair.y[i], p.atoms[i]));
        }
        c.expect(lhs == rhs, tag + ": witness is not a relation");
        c.expect(make_rational(coord_sum(w.pair.x), coord_sum(w.pair.y)) == w.rho,
                 tag + ": witness ratio != rho");
    };
    check_rho(make_presentation(1, {{2}, {3}}, Vec{1}), "<2,3>");
    ZeroSumPresentation z3 = zero_sum_presentation({3});
    c.expect(z3.davenport == 3, "B(Z_3): D(G) != 3");
    check_rho(z3.pres, "B(Z_3)");
    check_rho(realize(LengthSet::of({2, 3})).pres, "realize({2,3})");
    return {5, "exact-elasticity", c.ok, c.detail.str()};
}

// ---- Criterion 6: the union-property suite on random and derived families.
struct FamilyCase {
    std::string tag;
    FamilyView view;
    LengthSet delta;       // best available Delta of the family
    Rational rho;          // exact elasticity (or exact sup) of the family
    bool delta_exact;
};

void check_family_properties(Check& c, const FamilyCase& fc, int K) {
    auto u = fc.view.unions_up_to(K);
    const std::string& tag = fc.tag;

    for (int h = 1; h <= K; ++h)
        for (int k = 1; k <= K; ++k) {
            c.expect(u[k].contains(h) == u[h].contains(k), tag + ": union symmetry fails");
            if (h + k <= K) {
                LengthSet s = sumset(u[h], u[k]);
                bool subset = true;
                for (Int v : s.values())
                    if (!u[h + k].contains(v)) subset = false;
                c.expect(subset, tag + ": union superadditivity fails");
                if (!u[h].empty() && !u[k].empty() && !u[h + k].empty()) {
                    c.expect(u[h + k].min() <= u[h].min() + u[k].min(),
                             tag + ": lambda subadditivity fails");
                    c.expect(u[h].min() + u[k].min() <= h + k && h + k <= u[h].max() + u[k].max(),
                             tag + ": lambda-rho middle bound fails");
                    c.expect(u[h].max() + u[k].max() <= u[h + k].max(),
                             tag + ": rho superadditivity fails");
                }
            }
        }

    if (!fc.delta.empty()) {
        Int delta_min = fc.delta.min();
        Int g = 0;
        for (Int v : fc.delta.values()) g = std::gcd(g, v);
        c.expect(g == delta_min, tag + ": prop 2.9 gcd law fails");
        for (int k = 1; k <= K; ++k) {
            for (Int v : u[k].values())
                c.expect((v - k) % delta_min == 0, tag + ": union residue-class fails");
            LengthSet du = delta_set(u[k]);
            for (Int v : du.values()) c.expect(v % delta_min == 0, tag + ": union distance divisibility fails");
            if (!du.empty())
                c.expect(du.max() <= fc.delta.max(), tag + ": union max-distance bound fails");
        }
    }

    for (int k = 1; k <= K; ++k)
        for (int mfac = 2; mfac * k <= K; ++mfac)
            if (!u[k].empty() && !u[mfac * k].empty())
                c.expect(u[mfac * k].max() >= mfac * u[k].max(),
                         tag + ": Fekete monotonicity fails");

    Int max_delta = fc.delta.empty() ? 0 : fc.delta.max();
    for (int k = 1; k <= K; ++k) {
        if (make_rational(k) < make_rational(1) + fc.rho * to_mpz(max_delta)) continue;
        if (u[k].empty()) continue;
        c.expect(make_rational(u[k].min()) * fc.rho >= make_rational(k),
                 tag + ": lambda_k >= k/rho fails at k=" + std::to_string(k));
    }
}

std::vector<LengthSet> member_sets(const AtomPresentation& p, int horizon) {
    std::set<LengthSet> members;
    for (int k = 1; k <= horizon; ++k)
        for_each_atom_sum(p, k, [&](const Vec& x) { members.insert(length_set(p, x)); });
    return {members.begin(), members.end()};
}

CriterionResult criterion_section2_suite() {
    Check c;
    const int K = 10;
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 25; ++trial) {
        FamilySpec spec;
        int gens = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < gens; ++i) {
            int size = 1 + static_cast<int>(rng() % 4);
            std::vector<Int> vals;
            for (int j = 0; j < size; ++j) vals.push_back(1 + static_cast<Int>(rng() % 12));
            spec.generators.push_back(LengthSet::from_values(std::move(vals)));
        }
        spec.closure_depth = K;
        FamilyCase fc;
        fc.tag = "random#" + std::to_string(trial);
        fc.view = FamilyView::from_spec(spec);
        // Delta from a deeper closure so that min/max are stable; the divisibility law
        // checks below are only sound with the true family Delta.
        FamilySpec deep = spec;
        deep.closure_depth = K + 4;
        auto dr = FamilyView::from_spec(deep).family_delta();
        c.expect(dr.exact, fc.tag + ": Delta did not stabilize at depth K+4");
        fc.delta = dr.delta;
        fc.delta_exact = dr.exact;
        fc.rho = make_rational(1);
        for (const auto& g : spec.generators) {
            Rational r = elasticity_of_set(g);
            if (r > fc.rho) fc.rho = r;  // rho(L1 + L2) <= max(rho L1, rho L2)
        }
        check_family_properties(c, fc, K);
    }

    auto monoid_case = [&](const AtomPresentation& p, const std::string& tag, LengthSet delta,
                           Rational rho, int horizon) {
        FamilyCase fc;
        fc.tag = tag;
        fc.view = FamilyView::from_members(member_sets(p, horizon), horizon);
        fc.delta = std::move(delta);
        fc.rho = std::move(rho);
        fc.delta_exact = true;
        check_family_properties(c, fc, horizon);
    };
    monoid_case(make_presentation(1, {{2}, {3}}, Vec{1}), "<2,3>", LengthSet::of({1}),
                make_rational(3, 2), 10);
    monoid_case(zero_sum_presentation({3}).pres, "B(Z_3)", LengthSet::of({1}), make_rational(3, 2), 8);
    monoid_case(realize(LengthSet::of({2, 3})).pres, "realize({2,3})", LengthSet::of({1}),
                make_rational(3, 2), 8);

    {  // power example n = 2: members from the exact store, rho = 2n = 4
        const Int n = 2;
        const int horizon = 8;
        PowerSubmonoid store = build_store({example_interval_gen(), example_a_gen(n)},
                                           2 * n * horizon);
        std::set<LengthSet> members;
        for (const auto& x : store.elements)
            if (!(x == LengthSet::of({0}))) members.insert(pm_length_set(store, x));
        FamilyCase fc;
        fc.tag = "power n=2";
        fc.view = FamilyView::from_members({members.begin(), members.end()}, horizon);
        fc.delta = LengthSet::of({2 * n - 1});
        fc.rho = make_rational(2 * n);
        fc.delta_exact = true;
        check_family_properties(c, fc, horizon);
    }
    return {6, "union-property-suite", c.ok, c.detail.str()};
}

// ---- Criterion 7: the arithmetic-inequality suite.
CriterionResult criterion_section3_suite(Int budget) {
    Check c;
    auto run = [&](const AtomPresentation& p, const std::string& tag, bool check_intervals) {
        std::set<Vec> elements;
        for (int k = 1; k <= 4; ++k)
            for_each_atom_sum(p, k, [&](const Vec& x) { elements.insert(x); });
        for (const auto& x : elements) {
            LengthSet l = length_set(p, x);
            if (l.empty()) continue;
            c.expect(l.max() <= omega_element(p, x), tag + ": sup L(a) > omega(H,a)");
            auto zs = factorizations(p, x);
            if (zs.size() >= 2) {
                LengthSet dl = delta_set(l);
                Int max_gap = dl.empty() ? 0 : dl.max();
                c.expect(1 + max_gap <= catenary_degree(p, x),
                         tag + ": 1 + max Delta(L(a)) > c(a)");
            }
        }
        for (std::size_t u = 0; u < p.atom_count(); ++u) {
            TameResult t = tame_degree(p, u, 4, budget);
            c.expect(t.value <= t.ceiling, tag + ": t(H,u) > rho_{omega(H,u)}(H)");
        }
        if (check_intervals) {
            UnionsResult ur = unions(p, 4, budget);
            for (int k = 1; k <= 4; ++k)
                c.expect(!ur.unions[k].empty() &&
                             ur.unions[k] ==
                                 LengthSet::interval(ur.unions[k].min(), ur.unions[k].max()),
                         tag + ": U_" + std::to_string(k) + " is not an interval");
        }
    };
    run(make_presentation(1, {{2}, {3}}, Vec{1}), "<2,3>", false);
    run(zero_sum_presentation({3}).pres, "B(Z_3)", true);
    run(zero_sum_presentation({2, 2}).pres, "B(Z_2+Z_2)", true);
    run(realize(LengthSet::of({2, 3})).pres, "realize({2,3})", false);
    return {7, "arithmetic-inequality-suite", c.ok, c.detail.str()};
}

// ---- Criterion 8: the growth of |U_k| for the power example, n = 2.
CriterionResult criterion_growth_limit() {
    Check c;
    const Int n = 2;
    const Rational limit(5, 4);  // (1/min Delta)(rho - 1/rho) = (1/3)(4 - 1/4)
    std::vector<Rational> s(21);
    for (int k = 1; k <= 20; ++k) {
        LengthSet u = example_union(n, k);
        s[k] = make_rational(static_cast<Int>(u.size()) - 1, k);
        s[k].canonicalize();
        c.expect(s[k] <= limit, "partial value exceeds the limit at k=" + std::to_string(k));
    }
    for (int k = 1; 2 * k <= 20; ++k)
        c.expect(s[k] <= s[2 * k], "doubling monotonicity fails at k=" + std::to_string(k));
    Rational err = limit - s[20];
    c.expect(err >= 0 && err <= limit * make_rational(15, 100),
             "final partial value not within 15% of 5/4 (got " + to_string(s[20]) + ")");
    return {8, "union-growth-limit", c.ok, c.detail.str()};
}

}  // namespace

std::vector<CriterionResult> acceptance_suite(Int budget) {
    std::vector<CriterionResult> results;
    auto guard = [&](auto&& fn, int id, const std::string& name) {
        try {
            results.push_back(fn());
        } catch (const std::exception& e) {
            results.push_back({id, name, false, e.what()});
        }
    };
    guard([] { return criterion_realization(); }, 1, "length-set-realization");
    guard([] { return criterion_closed_form(); }, 2, "closed-form-oracle-equivalence");
    guard([] { return criterion_power_example(); }, 3, "power-monoid-example");
    guard([&] { return criterion_counterexample(budget); }, 4, "structure-theorem-counterexample");
    guard([] { return criterion_elasticity(); }, 5, "exact-elasticity");
    guard([] { return criterion_section2_suite(); }, 6, "union-property-suite");
    guard([&] { return criterion_section3_suite(budget); }, 7, "arithmetic-inequality-suite");
    guard([] { return criterion_growth_limit(); }, 8, "union-growth-limit");
    return results;
}

}  // namespace factorlens
