#pragma once

#include <optional>

#include "factorlens/monoid.hpp"

namespace factorlens {

/// Hilbert basis (minimal non-zero solutions) of { z in N^n : sum z_i c_i = 0 }
/// for integer columns c_i, by the Contejean-Devie completion procedure:
/// a breadth-first frontier grown from the unit vectors, where a branch
/// z -> z + e_i is taken only if <value(z), c_i> < 0, pruned against the
/// minimal solutions found so far. `node_budget` caps frontier growth.
std::vector<Vec> hilbert_basis(const std::vector<Vec>& columns, Int node_budget = 50'000'000);

/// A relation x ~ y between factorizations: sum x_i a_i = sum y_i a_i with
/// disjoint supports (x and y share no atom).
struct RelationPair {
    Vec x, y;
};

/// The minimal (Hilbert-basis) relations of the presentation, i.e. minimal
/// solutions of [A | -A](x, y) = 0 with the diagonal pairs (e_i, e_i)
/// removed; each unordered pair appears once with |x| >= |y|.
std::vector<RelationPair> minimal_relations(const AtomPresentation& p);

struct ElasticityWitness {
    Rational rho{1};
    RelationPair pair;  // attains |x| / |y| = rho (x = y = e_0 when rho = 1)
};

/// Exact elasticity rho(H) = max |x|/|y| over minimal relation pairs
/// (1 when the presentation is factorial / has no non-trivial relations).
ElasticityWitness exact_elasticity(const AtomPresentation& p);

struct DeltaBound {
    Int max_gap = 0;  // K with max Delta(H) <= K
    std::vector<RelationPair> witnesses;  // the pairs with |x| > |y| realizing gaps
};

/// Bound on max Delta(H) from the minimal relations: every jump inside a
/// length set is witnessed by a minimal pair (x, y) with |x| > |y|, so
/// K = max(|x| - |y|) over those pairs dominates every gap.
DeltaBound delta_bound(const AtomPresentation& p);

}  // namespace factorlens
