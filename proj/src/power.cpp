#include "factorlens/power.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace factorlens {

FinSet setsum(const FinSet& a, const FinSet& b) {
    return sumset(a, b);
}

PowerSubmonoid build_store(std::vector<FinSet> generators, Int max_bound) {
    for (const auto& g : generators)
        if (g.empty() || g.min() < 0)
            throw std::invalid_argument("power generators must be non-empty subsets of N_0");
    PowerSubmonoid m;
    m.generators = std::move(generators);
    m.max_bound = max_bound;

    std::set<FinSet> elements;
    FinSet identity = LengthSet::of({0});
    elements.insert(identity);
    std::vector<FinSet> frontier{identity};
    while (!frontier.empty()) {
        std::vector<FinSet> next;
        for (const auto& x : frontier)
            for (const auto& g : m.generators) {
                if (g == identity) continue;
                FinSet y = setsum(x, g);
                if (y.max() > max_bound) continue;
                if (elements.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    m.elements.assign(elements.begin(), elements.end());

    // Atoms: non-identity elements with no decomposition into two
    // non-identity store elements. Complete for max X <= max_bound since any
    // divisor Y of X has max Y <= max X.
    std::map<Int, std::vector<const FinSet*>> by_max;
    for (const auto& x : m.elements)
        if (!(x == identity)) by_max[x.max()].push_back(&x);
    for (const auto& x : m.elements) {
        if (x == identity) continue;
        bool decomposable = false;
        for (const auto& [my, ys] : by_max) {
            if (decomposable || my > x.max() - 1) break;
            auto it = by_max.find(x.max() - my);
            if (it == by_max.end()) continue;
            for (const auto* y : ys) {
                for (const auto* z : it->second)
                    if (setsum(*y, *z) == x) {
                        decomposable = true;
                        break;
                    }
                if (decomposable) break;
            }
        }
        if (!decomposable) m.atoms.push_back(x);
    }
    return m;
}

namespace {

void pm_search(const PowerSubmonoid& m, const FinSet& x, std::size_t i, Int max_left,
               FinSet partial, Vec& z, std::vector<Vec>& out) {
    if (max_left == 0) {
        if (partial == x) out.push_back(z);
        return;
    }
    if (i == m.atoms.size()) return;
    Int am = m.atoms[i].max();  // >= 1 for any non-identity atom
    Int cmax = max_left / am;
    FinSet acc = partial;
    for (Int c = 0; c <= cmax; ++c) {
        if (c > 0) acc = setsum(acc, m.atoms[i]);
        z[i] = c;
        pm_search(m, x, i + 1, max_left - c * am, acc, z, out);
    }
    z[i] = 0;
}

}  // namespace

std::vector<Vec> factorizations_pm(const PowerSubmonoid& m, const FinSet& x) {
    std::vector<Vec> out;
    if (x.empty()) return out;
    if (x == LengthSet::of({0})) {
        out.push_back(Vec(m.atoms.size(), 0));
        return out;
    }
    if (x.max() > m.max_bound)
        throw ResourceError("factorizations_pm: element exceeds the store bound");
    Vec z(m.atoms.size(), 0);
    pm_search(m, x, 0, x.max(), LengthSet::of({0}), z, out);
    std::sort(out.begin(), out.end());
    return out;
}

LengthSet pm_length_set(const PowerSubmonoid& m, const FinSet& x) {
    std::vector<Int> lengths;
    for (const auto& zv : factorizations_pm(m, x)) lengths.push_back(coord_sum(zv));
    return LengthSet::from_values(std::move(lengths));
}

FinSet example_interval_gen() {
    return LengthSet::of({0, 1});
}

FinSet example_a_gen(Int n) {
    std::vector<Int> v{1};
    for (Int j = 0; j <= n; ++j) v.push_back(2 * j);
    return LengthSet::from_values(std::move(v));
}

LengthSet example_length_set(Int n, Int h, Int l) {
    if (n < 2 || h < 0 || l < 0) throw std::invalid_argument("example_length_set: bad arguments");
    if (h == 0) return LengthSet::of({l});
    Int q = h / (2 * n), r = h % (2 * n);
    Int x_lo = (r == 0) ? 1 : 0;
    std::vector<Int> v;
    for (Int x = x_lo; x <= q + l; ++x) v.push_back((2 * n - 1) * x + q + l + r);
    return LengthSet::from_values(std::move(v));
}

LengthSet example_union(Int n, Int k) {
    if (k == 0) return LengthSet::of({0});
    LengthSet u;
    if (k >= 1) u = u.unite(LengthSet::of({k}));  // X = k*A, L(X) = {k}
    for (Int q = 0; q <= k; ++q)
        for (Int l = 0; q + l <= k; ++l)
            for (Int r = 0; r < 2 * n && r <= k; ++r) {
                if (q == 0 && r == 0) continue;  // h = 0 handled above
                LengthSet lset = example_length_set(n, 2 * n * q + r, l);
                if (lset.contains(k)) u = u.unite(lset);
            }
    return u;
}

Int example_rho_k(Int n, Int k) {
    if (k < 2 * n) throw std::invalid_argument("example_rho_k: closed form needs k >= 2n");
    return 2 * n * (k - 1) + 1;
}

Int example_omega(Int n) {
    return 2 * n + 1;
}

bool relations_atom_check(Int n, Int k) {
    if (n < 2 || k < 1) return false;
    FinSet a = example_a_gen(n), box = example_interval_gen();
    FinSet ka = LengthSet::of({0});
    for (Int i = 0; i < k; ++i) ka = setsum(ka, a);
    FinSet lhs = setsum(box, ka);
    if (lhs != LengthSet::interval(0, 2 * n * k + 1)) return false;
    // k*A itself must not be an interval: the relation has no shorter form.
    return ka != LengthSet::interval(ka.min(), ka.max());
}

}  // namespace factorlens
