#pragma once

#include <vector>

#include "factorlens/length_set.hpp"
#include "factorlens/monoid.hpp"  // Vec, ResourceError

namespace factorlens {

/// Pointwise sum of two finite subsets of N_0.
FinSet setsum(const FinSet& a, const FinSet& b);

/// A finitely generated submonoid of the power monoid of (N_0, +), explored
/// up to a max-value bound: `elements` holds every monoid element X with
/// max X <= max_bound (identity {0} included). Generators must contain 0 or
/// not; only max X drives the closure, which is exact because max is
/// additive under setsum.
struct PowerSubmonoid {
    std::vector<FinSet> generators;
    Int max_bound = 0;
    std::vector<FinSet> elements;  // sorted, deduplicated
    std::vector<FinSet> atoms;     // elements with no two-factor decomposition in the store
};

PowerSubmonoid build_store(std::vector<FinSet> generators, Int max_bound);

/// All factorizations of X into atoms of the store, as exponent vectors over
/// `m.atoms` (sorted lexicographically). Exact whenever max X <= max_bound:
/// every atom dividing X has max <= max X.
std::vector<Vec> factorizations_pm(const PowerSubmonoid& m, const FinSet& x);

LengthSet pm_length_set(const PowerSubmonoid& m, const FinSet& x);

/// The running example: H generated by [[0,1]] and A = {1} u 2*[[0,n]], n >= 2.
FinSet example_interval_gen();          // [[0,1]]
FinSet example_a_gen(Int n);            // {0, 1, 2, 4, ..., 2n}... see impl
/// Closed form for L(h*[[0,1]] + l*A): {l} when h = 0; otherwise, writing
/// h = 2nq + r with 0 <= r < 2n and e = [r == 0],
/// { (2n-1)x + q + l + r : e <= x <= q + l }.
LengthSet example_length_set(Int n, Int h, Int l);

/// Exact U_k of the example by enumerating representations (q, l, r) with
/// q + l <= k, r <= min(2n - 1, k), plus the h = 0 elements.
LengthSet example_union(Int n, Int k);

/// rho_k(H) = 2n(k - 1) + 1, valid for k >= 2n.
Int example_rho_k(Int n, Int k);

/// omega(H) = 2n + 1.
Int example_omega(Int n);

/// Checks the defining relation family of the example: [[0,1]] + k*A equals
/// (2nk + 1)*[[0,1]] while k*A on its own is not an interval (so the relation
/// does not factor through a shorter one).
bool relations_atom_check(Int n, Int k);

}  // namespace factorlens
