#include "factorlens/family.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace factorlens {

FamilyView FamilyView::from_spec(const FamilySpec& spec) {
    if (spec.generators.empty()) throw std::invalid_argument("family: no generators");
    if (spec.closure_depth < 1) throw std::invalid_argument("family: closure depth must be >= 1");
    for (const auto& g : spec.generators)
        if (g.empty() || g.min() < 1)
            throw std::invalid_argument("family: generators must be non-empty subsets of N_{>=1}");

    std::set<LengthSet> members;
    std::set<LengthSet> level(spec.generators.begin(), spec.generators.end());
    LengthSet prev_delta;
    for (int depth = 1; depth <= spec.closure_depth; ++depth) {
        if (depth > 1) {
            std::set<LengthSet> next;
            for (const auto& s : level)
                for (const auto& g : spec.generators) next.insert(sumset(s, g));
            level = std::move(next);
        }
        if (depth == spec.closure_depth) {
            for (const auto& s : members) prev_delta = prev_delta.unite(delta_set(s));
        }
        members.insert(level.begin(), level.end());
    }

    FamilyView v;
    v.members_.assign(members.begin(), members.end());
    // Every member containing some k <= D is a sum of at most k generators
    // (each generator has min >= 1), so depth-D closure is exact up to D.
    v.horizon_ = spec.closure_depth;
    v.prev_level_delta_ = prev_delta;
    return v;
}

FamilyView FamilyView::from_members(std::vector<LengthSet> members, int exact_horizon) {
    FamilyView v;
    std::set<LengthSet> dedup(members.begin(), members.end());
    v.members_.assign(dedup.begin(), dedup.end());
    v.horizon_ = exact_horizon;
    return v;
}

std::vector<LengthSet> FamilyView::unions_up_to(int k_max) const {
    if (k_max > horizon_)
        throw std::invalid_argument("unions_up_to: k_max exceeds the exactness horizon");
    std::vector<LengthSet> u(k_max + 1);
    u[0] = LengthSet::of({0});
    for (const auto& l : members_)
        for (Int k : l.values())
            if (k >= 1 && k <= k_max) u[k] = u[k].unite(l);
    return u;
}

Int FamilyView::lambda(int k) const {
    auto u = unions_up_to(k);
    return u[k].empty() ? 0 : u[k].min();
}

Int FamilyView::rho_bar(int k) const {
    auto u = unions_up_to(k);
    return u[k].empty() ? 0 : u[k].max();
}

FamilyView::DeltaReport FamilyView::family_delta() const {
    DeltaReport r;
    for (const auto& l : members_) r.delta = r.delta.unite(delta_set(l));
    r.exact = prev_level_delta_ && *prev_level_delta_ == r.delta;
    return r;
}

FamilyView::FeketeReport FamilyView::fekete_elasticity(int k_max) const {
    FeketeReport r;
    auto u = unions_up_to(k_max);
    for (int k = 1; k <= k_max; ++k) {
        Rational ratio = make_rational(u[k].empty() ? 0 : u[k].max(), k);
        r.ratios.push_back(ratio);
        if (ratio > r.lower_bound) r.lower_bound = ratio;
    }
    return r;
}

FamilyView::AcceptedReport FamilyView::accepted_elasticity_check(const Rational& rho,
                                                                 int k_max) const {
    AcceptedReport r;
    auto u = unions_up_to(k_max);
    for (int k = 1; k <= k_max; ++k) {
        if (u[k].empty()) continue;
        if (make_rational(u[k].max()) == make_rational(k) * rho) {
            r.accepted = true;
            r.witness_k = k;
            return r;
        }
    }
    return r;
}

bool FamilyView::gcd_min_delta_check() const {
    LengthSet d = family_delta().delta;
    if (d.empty()) return true;
    Int g = 0;
    for (Int v : d.values()) g = std::gcd(g, v);
    return g == d.min();
}

FamilyView::StructureReport FamilyView::structure_check(int k_max) const {
    StructureReport r;
    LengthSet d = family_delta().delta;
    if (d.empty()) {
        r.trivial = true;
        r.windows_ok = true;
        r.bounds_stabilized = true;
        r.detail = "Delta empty: every union is a singleton progression";
        return r;
    }
    r.delta_min = d.min();
    if (d.max() % d.min() != 0) {
        r.detail = "max Delta / min Delta not integral (Delta may be partial)";
        return r;
    }
    r.q = d.max() / d.min();
    r.applicable = true;

    r.l = 0;
    for (const auto& m : members_)
        for (Int x : m.values())
            if (m.contains(x + r.delta_min) && (r.l == 0 || x < r.l)) r.l = static_cast<int>(x);

    auto u = unions_up_to(k_max);
    Int m_glob = 0;
    std::ostringstream detail;
    for (int k = 1; k <= k_max; ++k) {
        auto w = minimal_aap_bound(u[k], r.delta_min);
        if (!w) {
            r.applicable = false;
            detail << "U_" << k << " not in a single residue class mod " << r.delta_min << "; ";
            r.aap_bounds.push_back(-1);
            continue;
        }
        r.aap_bounds.push_back(w->bound);
        m_glob = std::max(m_glob, w->bound);
    }
    if (r.applicable) {
        r.bounds_stabilized = true;
        for (int k = std::max(1, (k_max + 1) / 2); k <= k_max; ++k)
            if (r.aap_bounds[k - 1] != r.aap_bounds[k_max - 1]) r.bounds_stabilized = false;

        r.windows_ok = true;
        Int lq = static_cast<Int>(r.l) * r.q;
        for (int k = 1; k <= k_max; ++k) {
            if (k - lq < 1 || u[k].empty()) continue;
            Int lo = (u[k - lq].empty() ? 0 : u[k - lq].max()) + lq;
            Int hi = u[k].max() - m_glob;
            LengthSet window = u[k].intersect_interval(lo, hi);
            if (!is_ap_with_difference(window, r.delta_min, /*allow_empty=*/true)) {
                r.windows_ok = false;
                detail << "window at k=" << k << " is not an AP; ";
            }
        }
    }
    r.detail = detail.str();
    return r;
}

}  // namespace factorlens
