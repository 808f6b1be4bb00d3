#include "factorlens/monoid.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "factorlens/relations.hpp"

namespace factorlens {

Int dot(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec add(const Vec& a, const Vec& b) {
    Vec r(a);
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec r(a);
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return r;
}

Vec scale(Int c, const Vec& a) {
    Vec r(a);
    for (auto& v : r) v *= c;
    return r;
}

Int coord_sum(const Vec& a) {
    return std::accumulate(a.begin(), a.end(), Int{0});
}

bool is_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](Int v) { return v == 0; });
}

bool leq_componentwise(const Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

namespace {

using QRow = std::pair<std::vector<Rational>, Rational>;  // coeff . g >= rhs

// Fourier-Motzkin elimination; fills `out` with a feasible point when one
// exists. Exact rational arithmetic throughout.
bool fm_solve(int nvars, std::vector<QRow> rows, std::vector<Rational>& out) {
    if (nvars == 0) {
        for (const auto& r : rows)
            if (r.second > 0) return false;
        return true;
    }
    int v = nvars - 1;
    std::vector<QRow> pos, neg, rest;
    for (auto& r : rows) {
        int s = sgn(r.first[v]);
        if (s > 0) pos.push_back(std::move(r));
        else if (s < 0) neg.push_back(std::move(r));
        else {
            r.first.resize(v);
            rest.push_back(std::move(r));
        }
    }
    for (const auto& p : pos)
        for (const auto& n : neg) {
            Rational mp = -n.first[v], mn = p.first[v];  // both > 0
            QRow combined;
            combined.first.resize(v);
            for (int j = 0; j < v; ++j) combined.first[j] = mp * p.first[j] + mn * n.first[j];
            combined.second = mp * p.second + mn * n.second;
            rest.push_back(std::move(combined));
            if (rest.size() > 200000)
                throw UnsupportedPresentation("grading search: elimination blow-up");
        }
    if (!fm_solve(nvars - 1, std::move(rest), out)) return false;
    std::optional<Rational> lower, upper;
    // explicit return type: gmpxx division yields an expression template that
    // would dangle on the local `s`
    auto eval_rest = [&](const QRow& r) -> Rational {
        Rational s = r.second;
        for (int j = 0; j < v; ++j) s -= r.first[j] * out[j];
        return Rational(s / r.first[v]);
    };
    for (const auto& p : pos) {
        Rational b = eval_rest(p);
        if (!lower || b > *lower) lower = b;
    }
    for (const auto& n : neg) {
        Rational b = eval_rest(n);
        if (!upper || b < *upper) upper = b;
    }
    if (lower && upper) out[v] = (*lower + *upper) / 2;
    else if (lower) out[v] = *lower;
    else if (upper) out[v] = *upper;
    else out[v] = 0;
    return true;
}

std::optional<Vec> find_grading(int dim, const std::vector<Vec>& atoms) {
    std::vector<QRow> rows;
    rows.reserve(atoms.size());
    for (const auto& a : atoms) {
        QRow r;
        r.first.reserve(a.size());
        for (Int v : a) r.first.push_back(make_rational(v));
        r.second = 1;
        rows.push_back(std::move(r));
    }
    std::vector<Rational> g(dim);
    if (!fm_solve(dim, std::move(rows), g)) return std::nullopt;
    mpz_class lcm = 1;
    for (const auto& q : g) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    Vec result(dim);
    for (int j = 0; j < dim; ++j) {
        mpz_class num = g[j].get_num() * (lcm / g[j].get_den());
        if (!num.fits_slong_p()) throw UnsupportedPresentation("grading coefficients overflow");
        result[j] = num.get_si();
    }
    return result;
}

// Atom ordering + feasibility tables for the factorization search.
struct SearchPlan {
    std::vector<std::size_t> order;            // mixed-sign atoms first
    std::vector<std::vector<char>> has_pos;    // [i][t]: some atom in order[i..] has a_t > 0
    std::vector<std::vector<char>> has_neg;
    std::vector<char> suffix_nonneg;           // all atoms in order[i..] are >= 0
    std::vector<Int> atom_grade;               // g . a for order[i]
};

SearchPlan make_plan(const AtomPresentation& p) {
    SearchPlan plan;
    auto mixed = [&](std::size_t j) {
        return std::any_of(p.atoms[j].begin(), p.atoms[j].end(), [](Int v) { return v < 0; });
    };
    std::vector<std::size_t> idx(p.atom_count());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        bool ma = mixed(a), mb = mixed(b);
        if (ma != mb) return ma;
        Int ga = dot(p.grading, p.atoms[a]), gb = dot(p.grading, p.atoms[b]);
        if (ga != gb) return ga > gb;
        return a < b;
    });
    plan.order = idx;
    std::size_t s = idx.size();
    plan.has_pos.assign(s + 1, std::vector<char>(p.dim, 0));
    plan.has_neg.assign(s + 1, std::vector<char>(p.dim, 0));
    plan.suffix_nonneg.assign(s + 1, 1);
    plan.atom_grade.resize(s);
    for (std::size_t i = s; i-- > 0;) {
        plan.has_pos[i] = plan.has_pos[i + 1];
        plan.has_neg[i] = plan.has_neg[i + 1];
        const Vec& a = p.atoms[idx[i]];
        bool nonneg = true;
        for (int t = 0; t < p.dim; ++t) {
            if (a[t] > 0) plan.has_pos[i][t] = 1;
            if (a[t] < 0) plan.has_neg[i][t] = 1, nonneg = false;
        }
        plan.suffix_nonneg[i] = plan.suffix_nonneg[i + 1] && nonneg;
        plan.atom_grade[i] = dot(p.grading, a);
    }
    return plan;
}

struct FactorSearch {
    const AtomPresentation& p;
    const SearchPlan& plan;
    std::vector<Factorization>& out;
    Vec rem;
    Vec z;

    void run(std::size_t i, Int gbudget) {
        if (gbudget == 0) {
            if (is_zero(rem)) out.push_back(z);
            return;
        }
        if (i == plan.order.size()) return;
        for (int t = 0; t < p.dim; ++t) {
            if (rem[t] > 0 && !plan.has_pos[i][t]) return;
            if (rem[t] < 0 && !plan.has_neg[i][t]) return;
        }
        std::size_t j = plan.order[i];
        const Vec& a = p.atoms[j];
        Int cmax = gbudget / plan.atom_grade[i];
        if (plan.suffix_nonneg[i]) {
            // No later atom subtracts, so this atom must not overshoot.
            for (int t = 0; t < p.dim && cmax > 0; ++t)
                if (a[t] > 0) cmax = std::min(cmax, rem[t] / a[t]);
        }
        for (Int c = 0; c <= cmax; ++c) {
            if (c > 0)
                for (int t = 0; t < p.dim; ++t) rem[t] -= a[t];
            z[j] = c;
            run(i + 1, gbudget - c * plan.atom_grade[i]);
        }
        for (int t = 0; t < p.dim; ++t) rem[t] += cmax * a[t];
        z[j] = 0;
    }
};

}  // namespace

AtomPresentation make_presentation(int dim, std::vector<Vec> atoms, std::optional<Vec> grading) {
    for (const auto& a : atoms) {
        if (static_cast<int>(a.size()) != dim)
            throw UnsupportedPresentation("atom dimension mismatch");
        if (is_zero(a)) throw UnsupportedPresentation("zero vector listed as atom");
    }
    AtomPresentation p;
    p.dim = dim;
    p.atoms = std::move(atoms);
    if (grading) {
        p.grading = std::move(*grading);
        if (static_cast<int>(p.grading.size()) != dim)
            throw UnsupportedPresentation("grading dimension mismatch");
    } else {
        auto g = find_grading(dim, p.atoms);
        if (!g)
            throw UnsupportedPresentation(
                "no positive grading exists; presentation is not guaranteed BF");
        p.grading = std::move(*g);
    }
    for (const auto& a : p.atoms)
        if (dot(p.grading, a) <= 0)
            throw UnsupportedPresentation("grading not positive on every atom");
    return p;
}

std::vector<Factorization> factorizations(const AtomPresentation& p, const Vec& x) {
    if (static_cast<int>(x.size()) != p.dim)
        throw std::invalid_argument("factorizations: element dimension mismatch");
    Int gx = dot(p.grading, x);
    std::vector<Factorization> out;
    if (gx < 0) return out;
    if (gx == 0) {
        if (is_zero(x)) out.push_back(Vec(p.atom_count(), 0));
        return out;
    }
    SearchPlan plan = make_plan(p);
    FactorSearch search{p, plan, out, x, Vec(p.atom_count(), 0)};
    search.run(0, gx);
    std::sort(out.begin(), out.end());
    return out;
}

LengthSet length_set(const AtomPresentation& p, const Vec& x) {
    std::vector<Int> lengths;
    for (const auto& z : factorizations(p, x)) lengths.push_back(coord_sum(z));
    return LengthSet::from_values(std::move(lengths));
}

namespace {

// Enumerates all sums of exactly k atoms, invoking `leaf` on each sum.
void multiset_sums(const AtomPresentation& p, int k, std::size_t from, Vec& acc, Int& counter,
                   Int budget, const std::function<void(const Vec&)>& leaf) {
    if (k == 0) {
        if (++counter > budget) throw ResourceError("unions: multiset budget exhausted");
        leaf(acc);
        return;
    }
    if (from == p.atom_count()) return;
    // use atom `from` c times, c = k..0, then move on
    for (int c = 0; c <= k; ++c) {
        if (c > 0)
            for (int t = 0; t < p.dim; ++t) acc[t] += p.atoms[from][t];
        multiset_sums(p, k - c, from + 1, acc, counter, budget, leaf);
    }
    for (int t = 0; t < p.dim; ++t) acc[t] -= Int(k) * p.atoms[from][t];
}

}  // namespace

void for_each_atom_sum(const AtomPresentation& p, int k,
                       const std::function<void(const Vec&)>& leaf) {
    Vec acc(p.dim, 0);
    Int counter = 0;
    multiset_sums(p, k, 0, acc, counter, std::numeric_limits<Int>::max(), leaf);
}

UnionsResult unions(const AtomPresentation& p, int k_max, Int budget) {
    UnionsResult r;
    r.unions.resize(k_max + 1);
    r.unions[0] = LengthSet::of({0});
    std::map<Vec, LengthSet> memo;
    Int counter = 0;
    for (int k = 1; k <= k_max; ++k) {
        LengthSet uk;
        Vec acc(p.dim, 0);
        multiset_sums(p, k, 0, acc, counter, budget, [&](const Vec& x) {
            auto it = memo.find(x);
            if (it == memo.end()) it = memo.emplace(x, length_set(p, x)).first;
            uk = uk.unite(it->second);
        });
        r.unions[k] = std::move(uk);
    }
    r.lambda.resize(k_max + 1);
    r.rho.resize(k_max + 1);
    for (int k = 0; k <= k_max; ++k) {
        r.lambda[k] = r.unions[k].empty() ? 0 : r.unions[k].min();
        r.rho[k] = r.unions[k].empty() ? 0 : r.unions[k].max();
    }
    return r;
}

Int distance(const Factorization& z1, const Factorization& z2) {
    assert(z1.size() == z2.size());
    Int l1 = 0, l2 = 0;
    for (std::size_t i = 0; i < z1.size(); ++i) {
        Int common = std::min(z1[i], z2[i]);
        l1 += z1[i] - common;
        l2 += z2[i] - common;
    }
    return std::max(l1, l2);
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); }
    void join(int a, int b) { parent[find(a)] = find(b); }
};

bool connected_at(const std::vector<std::vector<Int>>& d, Int n_bound) {
    int n = static_cast<int>(d.size());
    UnionFind uf(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (d[i][j] <= n_bound) uf.join(i, j);
    for (int i = 1; i < n; ++i)
        if (uf.find(i) != uf.find(0)) return false;
    return true;
}

}  // namespace

Int catenary_degree(const AtomPresentation& p, const Vec& x) {
    auto zs = factorizations(p, x);
    int n = static_cast<int>(zs.size());
    if (n <= 1) return 0;
    std::vector<std::vector<Int>> d(n, std::vector<Int>(n, 0));
    std::set<Int> candidates;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            d[i][j] = d[j][i] = distance(zs[i], zs[j]);
            candidates.insert(d[i][j]);
        }
    std::vector<Int> cand(candidates.begin(), candidates.end());
    std::size_t lo = 0, hi = cand.size() - 1;  // cand.back() always connects
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (connected_at(d, cand[mid])) hi = mid;
        else lo = mid + 1;
    }
    return cand[lo];
}

Int catenary_degree_up_to(const AtomPresentation& p, int atom_budget) {
    std::set<Vec> elements;
    Int counter = 0;
    for (int k = 1; k <= atom_budget; ++k) {
        Vec acc(p.dim, 0);
        multiset_sums(p, k, 0, acc, counter, Int{1} << 60,
                      [&](const Vec& x) { elements.insert(x); });
    }
    Int best = 0;
    for (const auto& x : elements) best = std::max(best, catenary_degree(p, x));
    return best;
}

namespace {

// Minimal points of D_x = {z : x divides Az in H}, via the Hilbert basis of
// the homogenized system [A | -A | -x] restricted to t = 1. The positive
// grading rules out non-zero non-negative kernel vectors of [A | -A | -x]
// with t = 0 contributing below a t = 1 solution, so the t = 1 slice of the
// Hilbert basis covers Min(D_x) after one more minimization pass.
std::vector<Vec> minimal_divisor_multiples(const AtomPresentation& p, const Vec& x) {
    std::size_t s = p.atom_count();
    std::vector<Vec> columns;
    for (const auto& a : p.atoms) columns.push_back(a);
    for (const auto& a : p.atoms) columns.push_back(scale(-1, a));
    columns.push_back(scale(-1, x));
    auto basis = hilbert_basis(columns);
    std::vector<Vec> proj;
    for (const auto& b : basis)
        if (b[2 * s] == 1) proj.push_back(Vec(b.begin(), b.begin() + s));
    std::sort(proj.begin(), proj.end());
    proj.erase(std::unique(proj.begin(), proj.end()), proj.end());
    std::vector<Vec> minimal;
    for (const auto& z : proj) {
        bool dominated = false;
        for (const auto& w : proj)
            if (w != z && leq_componentwise(w, z)) {
                dominated = true;
                break;
            }
        if (!dominated) minimal.push_back(z);
    }
    return minimal;
}

}  // namespace

Int omega_element(const AtomPresentation& p, const Vec& x) {
    if (is_zero(x)) return 0;
    Int best = 0;
    for (const auto& z : minimal_divisor_multiples(p, x)) best = std::max(best, coord_sum(z));
    return best;
}

Int omega(const AtomPresentation& p, std::size_t atom_index) {
    return omega_element(p, p.atoms.at(atom_index));
}

TameResult tame_degree(const AtomPresentation& p, std::size_t atom_index, int atom_budget,
                       Int budget) {
    TameResult r;
    Int w = omega(p, atom_index);
    r.ceiling = unions(p, static_cast<int>(w), budget).rho[w];
    std::set<Vec> elements;
    Int counter = 0;
    for (int k = 1; k <= atom_budget; ++k) {
        Vec acc(p.dim, 0);
        multiset_sums(p, k, 0, acc, counter, budget, [&](const Vec& x) { elements.insert(x); });
    }
    for (const auto& a : elements) {
        auto zs = factorizations(p, a);
        std::vector<const Factorization*> with_u;
        for (const auto& z : zs)
            if (z[atom_index] >= 1) with_u.push_back(&z);
        if (with_u.empty()) continue;
        for (const auto& z : zs) {
            Int best = std::numeric_limits<Int>::max();
            for (const auto* zu : with_u) best = std::min(best, distance(z, *zu));
            r.value = std::max(r.value, best);
        }
    }
    r.closed = (r.value == r.ceiling);
    return r;
}

namespace {

bool has_proper_zero_subsum(const std::vector<Vec>& g0, const Vec& mult,
                            const std::vector<Int>& mods) {
    // DFS over sub-multisets; true if a proper non-empty one sums to zero.
    Int total = coord_sum(mult);
    std::function<bool(std::size_t, Vec&, Int)> go = [&](std::size_t i, Vec& sum,
                                                         Int used) -> bool {
        if (i == g0.size()) {
            if (used == 0 || used == total) return false;
            return is_zero(sum);
        }
        for (Int c = 0; c <= mult[i]; ++c) {
            Vec s = sum;
            for (std::size_t t = 0; t < mods.size(); ++t)
                s[t] = (s[t] + c * g0[i][t]) % mods[t];
            if (go(i + 1, s, used + c)) return true;
        }
        return false;
    };
    Vec zero(mods.size(), 0);
    return go(0, zero, 0);
}

}  // namespace

ZeroSumPresentation zero_sum_presentation(const std::vector<Int>& invariant_factors,
                                          const std::vector<Vec>* subset) {
    for (Int n : invariant_factors)
        if (n < 1) throw std::invalid_argument("invariant factors must be positive");
    Int order = 1;
    for (Int n : invariant_factors) order *= n;
    if (order > 64) throw ResourceError("group too large for zero-sum enumeration");
    std::vector<Vec> g0;
    if (subset) {
        g0 = *subset;
        for (const auto& e : g0) {
            if (e.size() != invariant_factors.size())
                throw std::invalid_argument("subset element has wrong rank");
            for (std::size_t t = 0; t < e.size(); ++t)
                if (e[t] < 0 || e[t] >= invariant_factors[t])
                    throw std::invalid_argument("subset element out of range");
        }
    } else {
        g0.push_back(Vec(invariant_factors.size(), 0));
        while (true) {
            Vec next = g0.back();
            std::size_t t = next.size();
            while (t-- > 0) {
                if (++next[t] < invariant_factors[t]) break;
                next[t] = 0;
                if (t == 0) {
                    t = SIZE_MAX;
                    break;
                }
            }
            if (t == SIZE_MAX) break;
            g0.push_back(next);
        }
    }
    std::sort(g0.begin(), g0.end());
    g0.erase(std::unique(g0.begin(), g0.end()), g0.end());

    ZeroSumPresentation out;
    out.group_elements = g0;
    std::vector<Vec> atoms;
    Vec mult(g0.size(), 0), sum(invariant_factors.size(), 0);
    std::function<void(std::size_t, Int)> go = [&](std::size_t i, Int remaining) {
        if (i == g0.size()) {
            Int len = coord_sum(mult);
            if (len >= 1 && is_zero(sum) && !has_proper_zero_subsum(g0, mult, invariant_factors))
                atoms.push_back(mult);
            return;
        }
        for (Int c = 0; c <= remaining; ++c) {
            if (c > 0) {
                mult[i] += 1;
                for (std::size_t t = 0; t < sum.size(); ++t)
                    sum[t] = (sum[t] + g0[i][t]) % invariant_factors[t];
            }
            go(i + 1, remaining - c);
        }
        for (std::size_t t = 0; t < sum.size(); ++t)
            sum[t] = ((sum[t] - mult[i] * g0[i][t]) % invariant_factors[t] + invariant_factors[t]) %
                     invariant_factors[t];
        mult[i] = 0;
    };
    go(0, order);  // minimal zero-sum sequences have length <= |G|
    std::sort(atoms.begin(), atoms.end());
    out.pres = make_presentation(static_cast<int>(g0.size()), atoms,
                                 Vec(g0.size(), 1));  // length grading
    for (const auto& a : out.pres.atoms) out.davenport = std::max(out.davenport, coord_sum(a));
    return out;
}

AtomPresentation product(const std::vector<AtomPresentation>& components) {
    AtomPresentation p;
    for (const auto& c : components) p.dim += c.dim;
    int offset = 0;
    for (const auto& c : components) {
        for (const auto& a : c.atoms) {
            Vec v(p.dim, 0);
            std::copy(a.begin(), a.end(), v.begin() + offset);
            p.atoms.push_back(std::move(v));
        }
        offset += c.dim;
    }
    for (const auto& c : components)
        p.grading.insert(p.grading.end(), c.grading.begin(), c.grading.end());
    return p;
}

LengthSet product_unions(const std::vector<std::vector<LengthSet>>& component_unions, int k) {
    if (component_unions.empty()) return k == 0 ? LengthSet::of({0}) : LengthSet();
    for (const auto& cu : component_unions)
        if (static_cast<int>(cu.size()) <= k)
            throw std::invalid_argument("product_unions: component unions truncated below k");
    std::vector<LengthSet> cur(component_unions[0].begin(), component_unions[0].begin() + k + 1);
    for (std::size_t i = 1; i < component_unions.size(); ++i) {
        std::vector<LengthSet> next(k + 1);
        for (int nu = 0; nu <= k; ++nu)
            for (int j = 0; j <= nu; ++j)
                next[nu] = next[nu].unite(sumset(cur[j], component_unions[i][nu - j]));
        cur = std::move(next);
    }
    return cur[k];
}

AtomCheck verify_atoms(const AtomPresentation& p) {
    for (std::size_t j = 0; j < p.atom_count(); ++j) {
        for (const auto& z : factorizations(p, p.atoms[j]))
            if (coord_sum(z) >= 2) return AtomCheck{false, j, z};
    }
    return AtomCheck{};
}

}  // namespace factorlens
