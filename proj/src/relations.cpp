#include "factorlens/relations.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace factorlens {

namespace {

bool dominated_by_any(const Vec& z, const std::vector<Vec>& minimal) {
    for (const auto& m : minimal)
        if (leq_componentwise(m, z)) return true;
    return false;
}

}  // namespace

std::vector<Vec> hilbert_basis(const std::vector<Vec>& columns, Int node_budget) {
    std::size_t n = columns.size();
    if (n == 0) return {};
    std::size_t d = columns[0].size();
    for (const auto& c : columns)
        if (c.size() != d) throw std::invalid_argument("hilbert_basis: ragged columns");

    std::vector<Vec> minimal;
    // frontier entries carry (exponent vector z, value A z)
    std::vector<std::pair<Vec, Vec>> frontier;
    std::set<Vec> seen;
    for (std::size_t i = 0; i < n; ++i) {
        Vec z(n, 0);
        z[i] = 1;
        if (seen.insert(z).second) frontier.push_back({z, columns[i]});
    }
    Int nodes = 0;
    while (!frontier.empty()) {
        std::vector<std::pair<Vec, Vec>> next;
        for (auto& [z, val] : frontier) {
            if (is_zero(val)) {
                // Breadth-first order: any strictly smaller solution was found
                // at an earlier level, so a domination check suffices.
                if (!dominated_by_any(z, minimal)) minimal.push_back(z);
                continue;
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (dot(val, columns[i]) >= 0) continue;  // Contejean-Devie branch rule
                Vec z2 = z;
                z2[i] += 1;
                if (dominated_by_any(z2, minimal)) continue;
                if (!seen.insert(z2).second) continue;
                if (++nodes > node_budget) throw ResourceError("hilbert_basis: node budget exhausted");
                next.push_back({std::move(z2), add(val, columns[i])});
            }
        }
        frontier = std::move(next);
    }
    std::sort(minimal.begin(), minimal.end());
    return minimal;
}

std::vector<RelationPair> minimal_relations(const AtomPresentation& p) {
    std::size_t s = p.atom_count();
    std::vector<Vec> columns;
    for (const auto& a : p.atoms) columns.push_back(a);
    for (const auto& a : p.atoms) columns.push_back(scale(-1, a));
    std::vector<RelationPair> out;
    for (const auto& b : hilbert_basis(columns)) {
        Vec x(b.begin(), b.begin() + s), y(b.begin() + s, b.end());
        if (x == y) continue;  // diagonal pair (e_i, e_i)
        if (coord_sum(x) < coord_sum(y) || (coord_sum(x) == coord_sum(y) && x < y))
            std::swap(x, y);
        out.push_back({std::move(x), std::move(y)});
    }
    // Mirror images (x,y) and (y,x) are both in the basis; keep one copy.
    std::sort(out.begin(), out.end(),
              [](const RelationPair& a, const RelationPair& b) {
                  return std::tie(a.x, a.y) < std::tie(b.x, b.y);
              });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const RelationPair& a, const RelationPair& b) {
                              return a.x == b.x && a.y == b.y;
                          }),
              out.end());
    return out;
}

ElasticityWitness exact_elasticity(const AtomPresentation& p) {
    ElasticityWitness w;
    w.pair.x = w.pair.y = Vec(p.atom_count(), 0);
    if (!p.atoms.empty()) w.pair.x[0] = w.pair.y[0] = 1;
    for (const auto& r : minimal_relations(p)) {
        Rational ratio = make_rational(coord_sum(r.x), coord_sum(r.y));
        if (ratio > w.rho) {
            w.rho = ratio;
            w.pair = r;
        }
    }
    return w;
}

DeltaBound delta_bound(const AtomPresentation& p) {
    DeltaBound b;
    for (const auto& r : minimal_relations(p)) {
        Int gap = coord_sum(r.x) - coord_sum(r.y);
        if (gap > 0) {
            b.witnesses.push_back(r);
            b.max_gap = std::max(b.max_gap, gap);
        }
    }
    return b;
}

}  // namespace factorlens
