#include "factorlens/krull.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace factorlens {

RealizedKrull realize(const LengthSet& L) {
    if (L.size() < 2 || L.min() < 2)
        throw std::invalid_argument("realize: need |L| >= 2 and min L >= 2");
    RealizedKrull r;
    r.L = L;
    const auto& v = L.values();
    r.m.push_back(v[0]);                                    // m_1 = min L
    for (std::size_t i = 1; i < v.size(); ++i) r.m.push_back(v[i] - 1);
    std::size_t s = r.m.size();
    int dim = 0;
    for (Int mi : r.m) {
        r.offset.push_back(dim);
        dim += static_cast<int>(mi);
    }
    std::vector<Vec> atoms;
    for (int t = 0; t < dim; ++t) {
        Vec u(dim, 0);
        u[t] = 1;
        atoms.push_back(std::move(u));
    }
    for (std::size_t i = 1; i < s; ++i) {
        Vec u(dim, 0);
        for (Int j = 0; j < r.m[0]; ++j) u[r.offset[0] + j] = 1;
        for (Int j = 0; j < r.m[i]; ++j) u[r.offset[i] + j] = -1;
        r.u0_index.push_back(atoms.size());
        atoms.push_back(std::move(u));
    }
    // g = m_s on block 1, 1 elsewhere: g . u_i0 = m_1 m_s - m_i >= m_s > 0.
    Vec g(dim, 1);
    for (Int j = 0; j < r.m[0]; ++j) g[r.offset[0] + j] = r.m.back();
    r.pres = make_presentation(dim, std::move(atoms), std::move(g));
    return r;
}

GammaProfile gamma_profile(const RealizedKrull& r, const Vec& x) {
    GammaProfile g;
    std::size_t s = r.m.size();
    Int coord_total = 0;
    for (std::size_t i = 0; i < s; ++i) {
        Int lo = x[r.offset[i]];
        for (Int j = 0; j < r.m[i]; ++j) {
            lo = std::min(lo, x[r.offset[i] + j]);
            coord_total += x[r.offset[i] + j];
        }
        g.gamma.push_back(lo);
        g.gamma_prime.push_back(i == 0 ? 0 : std::max<Int>(0, -lo));
    }
    Int prime_total = 0, weighted = 0;
    for (std::size_t i = 1; i < s; ++i) {
        prime_total += g.gamma_prime[i];
        weighted += (r.m[i] + 1 - r.m[0]) * g.gamma_prime[i];
    }
    g.C = coord_total + weighted;
    g.k = g.gamma[0] - prime_total;
    return g;
}

bool membership(const RealizedKrull& r, const Vec& x) {
    return gamma_profile(r, x).k >= 0;
}

namespace {

// { C + sum w_i b_i : sum b_i <= kappa } with w_i = m_i + 1 - m_1 (i >= 2).
LengthSet closed_from(const RealizedKrull& r, Int C, Int kappa) {
    std::vector<Int> weights;
    for (std::size_t i = 1; i < r.m.size(); ++i) weights.push_back(r.m[i] + 1 - r.m[0]);
    std::set<Int> offsets{0};
    std::set<Int> frontier{0};
    for (Int step = 0; step < kappa; ++step) {
        std::set<Int> next;
        for (Int v : frontier)
            for (Int w : weights)
                if (offsets.insert(v + w).second) next.insert(v + w);
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    std::vector<Int> out;
    for (Int v : offsets) out.push_back(C + v);
    return LengthSet::from_values(std::move(out));
}

}  // namespace

LengthSet closed_length_set(const RealizedKrull& r, const Vec& x) {
    GammaProfile g = gamma_profile(r, x);
    if (g.k < 0) return LengthSet();
    return closed_from(r, g.C, g.k);
}

LengthSet krull_union(const RealizedKrull& r, int nu) {
    if (nu == 0) return LengthSet::of({0});
    LengthSet u;
    // Every length set of H is L(C, kappa) with C >= kappa m_1, and every
    // such pair is attained; nu in L(C, kappa) forces C <= nu.
    for (Int kappa = 0; kappa * r.m[0] <= nu; ++kappa)
        for (Int c = kappa * r.m[0]; c <= nu; ++c) {
            LengthSet l = closed_from(r, c, kappa);
            if (l.contains(nu)) u = u.unite(l);
        }
    return u;
}

Int krull_rho(const RealizedKrull& r, int k) {
    LengthSet u = krull_union(r, k);
    return u.empty() ? 0 : u.max();
}

VerifyReport verify_realization(const RealizedKrull& r, int atom_budget) {
    VerifyReport rep;
    std::ostringstream detail;
    std::set<Vec> elements;
    for (int k = 1; k <= atom_budget; ++k)
        for_each_atom_sum(r.pres, k, [&](const Vec& x) { elements.insert(x); });
    for (const auto& x : elements) {
        LengthSet brute = length_set(r.pres, x);
        LengthSet closed = closed_length_set(r, x);
        if (brute != closed) {
            rep.ok = false;
            detail << "length-set mismatch at an element: closed " << closed.to_string()
                   << " vs factorizations " << brute.to_string() << "; ";
        }
    }
    int nu = static_cast<int>(r.L.min());
    if (nu <= atom_budget) {
        LengthSet direct;
        for_each_atom_sum(r.pres, nu, [&](const Vec& x) {
            direct = direct.unite(closed_length_set(r, x));
        });
        if (direct != krull_union(r, nu)) {
            rep.ok = false;
            detail << "U_" << nu << " enumeration mismatch: direct " << direct.to_string()
                   << " vs closed " << krull_union(r, nu).to_string() << "; ";
        }
    }
    rep.detail = detail.str();
    return rep;
}

CounterexampleSpec admissible_instance(Int d, int K) {
    if (d < 2 || K < 2) throw std::invalid_argument("admissible_instance: need d >= 2, K >= 2");
    CounterexampleSpec spec;
    spec.d = d;
    spec.K = K;
    spec.m = {0, 1};
    for (int j = 2; j <= K; ++j) {
        // growth condition at k = j + 1: sum_{i=1}^{j-1} ((k/i) m_i + (i-1)) <= m_j - j
        Int k = j + 1;
        Rational total = 0;
        for (Int i = 1; i <= j - 1; ++i)
            total += make_rational(k, i) * to_mpz(spec.m[i]) + to_mpz(i - 1);
        total += to_mpz(j);
        mpz_class lo;
        mpz_cdiv_q(lo.get_mpz_t(), total.get_num_mpz_t(), total.get_den_mpz_t());
        Int mj = lo.get_si();
        if ((mj - spec.m[j - 1]) % 2 != 0) ++mj;  // U_j must be a difference-2 AP
        spec.m.push_back(mj);
    }
    spec.L.resize(K + 1);
    for (int k = 2; k <= K; ++k) {
        LengthSet lower = LengthSet::interval(k, spec.m[k - 1] + 1);
        std::vector<Int> upper;
        for (Int v = spec.m[k - 1] + 2; v <= spec.m[k]; v += 2) upper.push_back(v);
        spec.L[k] = lower.unite(LengthSet::from_values(std::move(upper)));
    }
    return spec;
}

int validate_counterexample(const CounterexampleSpec& spec) {
    if (spec.d < 2 || spec.K < 2) return 1;
    if (static_cast<int>(spec.m.size()) != spec.K + 1 || spec.m[0] != 0 || spec.m[1] != 1)
        return 1;
    for (int k = 2; k <= spec.K; ++k)
        if (spec.m[k] <= spec.m[k - 1]) return k;
    for (int k = 3; k <= spec.K + 1; ++k) {
        Rational total = 0;
        for (Int i = 1; i <= k - 2; ++i)
            total += make_rational(k, i) * to_mpz(spec.m[i]) + to_mpz(i - 1);
        if (total > make_rational(spec.m[std::min(k - 1, spec.K)] - (k - 1))) return k;
    }
    for (int k = 2; k <= spec.K; ++k) {
        const LengthSet& l = spec.L[k];
        if (l.empty() || l.min() != k || l.max() != spec.m[k]) return k;
        LengthSet lower = l.intersect_interval(k, spec.m[k - 1] + 1);
        if (lower != LengthSet::interval(k, spec.m[k - 1] + 1)) return k;
        LengthSet upper = l.intersect_interval(spec.m[k - 1] + 2, spec.m[k]);
        if (upper.empty() || upper.min() <= spec.m[k - 1] + 1) return k;
        LengthSet gaps = delta_set(upper);
        if (!gaps.empty() && gaps.max() > spec.d) return k;
    }
    return 0;
}

LengthSet counterexample_unions(const CounterexampleSpec& spec, int k) {
    if (k < 1 || k > spec.K) throw std::invalid_argument("counterexample_unions: k out of range");
    std::vector<std::vector<LengthSet>> comp;
    std::vector<LengthSet> h1;
    for (int nu = 0; nu <= k; ++nu) h1.push_back(LengthSet::of({nu}));
    comp.push_back(std::move(h1));
    for (int j = 2; j <= k; ++j) {
        RealizedKrull r = realize(spec.L[j]);
        std::vector<LengthSet> uj;
        for (int nu = 0; nu <= k; ++nu) uj.push_back(krull_union(r, nu));
        comp.push_back(std::move(uj));
    }
    return product_unions(comp, k);
}

LengthSet counterexample_expected(const CounterexampleSpec& spec, int k) {
    if (k == 1) return LengthSet::of({1});
    return spec.L.at(k);
}

}  // namespace factorlens
